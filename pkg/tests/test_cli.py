import json

import pytest

from abacore.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConvert:
    def test_window_to_partition(self, capsys):
        code, out, _ = run(
            capsys,
            "convert", "--e", "4", "--from", "window", "--to", "partition",
            "--charge", "1", "[5,-4,2,7]",
        )
        assert code == 0
        assert out == "(4,3,2,1,1,1)\n"

    def test_word_to_window(self, capsys):
        code, out, _ = run(
            capsys,
            "convert", "--e", "4", "--from", "word", "--to", "window",
            "0.1.2.1.3.0.2.1",
        )
        assert code == 0
        assert out == "[5,-4,2,7]\n"

    def test_empty_word_is_identity(self, capsys):
        code, out, _ = run(
            capsys,
            "convert", "--e", "4", "--from", "word", "--to", "window", "",
        )
        assert code == 0
        assert out == "[1,2,3,4]\n"

    def test_partition_to_window(self, capsys):
        code, out, _ = run(
            capsys,
            "convert", "--e", "4", "--from", "partition", "--to", "window",
            "(1,1)",
        )
        assert code == 0
        assert out == "[-1,2,4,5]\n"

    def test_partition_to_word(self, capsys):
        code, out, _ = run(
            capsys,
            "convert", "--e", "4", "--from", "partition", "--to", "word",
            "(1,1)",
        )
        assert code == 0
        assert out == "3.0\n"

    def test_abacus_to_partition(self, capsys):
        code, out, _ = run(
            capsys,
            "convert", "--e", "4", "--from", "abacus", "--to", "partition",
            '{"floor": -2, "high_beads": [0, 1]}',
        )
        assert code == 0
        assert out == "(1,1)\n"

    def test_window_to_all(self, capsys):
        code, out, _ = run(
            capsys,
            "convert", "--e", "4", "--from", "window", "--to", "all",
            "[-1,2,4,5]",
        )
        assert code == 0
        assert out == (
            "word: 3.0\n"
            "window: [-1,2,4,5]\n"
            "partition: (1,1)\n"
            'abacus: {"floor": -2, "high_beads": [0, 1]}\n'
        )

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys,
            "convert", "--e", "4", "--from", "window", "--to", "all",
            "--json", "[-1,2,4,5]",
        )
        assert code == 0
        assert json.loads(out) == {
            "word": "3.0",
            "window": [-1, 2, 4, 5],
            "partition": [1, 1],
            "charge": 0,
            "abacus": {"floor": -2, "high_beads": [0, 1]},
        }

    def test_charged_partition_to_word_fails(self, capsys):
        code, _, err = run(
            capsys,
            "convert", "--e", "4", "--from", "partition", "--to", "word",
            "--charge", "1", "(1,1)",
        )
        assert code == 2
        assert "charge-0" in err

    def test_bad_window(self, capsys):
        code, _, err = run(
            capsys,
            "convert", "--e", "4", "--from", "window", "--to", "word",
            "[1,2,3]",
        )
        assert code == 2
        assert "error:" in err

    def test_non_core_partition_to_window_fails(self, capsys):
        code, _, err = run(
            capsys,
            "convert", "--e", "2", "--from", "partition", "--to", "window",
            "(2)",
        )
        assert code == 2
        assert "2-core" in err


class TestCores:
    def test_all_charges(self, capsys):
        code, out, _ = run(capsys, "cores", "--e", "4", "[0,3,1,6]")
        assert code == 0
        assert out == "(2); (1); (1,1); ()\n"

    def test_single_charge(self, capsys):
        code, out, _ = run(
            capsys, "cores", "--e", "4", "--charge", "2", "[0,3,1,6]"
        )
        assert code == 0
        assert out == "(1,1)\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "cores", "--e", "4", "--json", "[0,3,1,6]")
        assert code == 0
        assert json.loads(out) == {
            "e": 4,
            "window": [0, 3, 1, 6],
            "cores": [
                {"charge": 0, "partition": [2]},
                {"charge": 1, "partition": [1]},
                {"charge": 2, "partition": [1, 1]},
                {"charge": 3, "partition": []},
            ],
        }

    def test_explain(self, capsys):
        code, out, _ = run(
            capsys, "cores", "--e", "4", "--explain", "[0,3,1,6]"
        )
        assert code == 0
        assert out == (
            "lambda(0) = (2)\n"
            "add hook: hand residue 3, cells (2,1)\n"
            "mu = (2,1)\n"
            "strip first column: lambda(1) = (1)\n"
            "add hook: hand residue 2, cells (2,1) (2,2) (1,2)\n"
            "mu = (2,2)\n"
            "strip first column: lambda(2) = (1,1)\n"
            "add hook: hand residue 0, cells (3,1)\n"
            "mu = (1,1,1)\n"
            "strip first column: lambda(3) = ()\n"
        )

    def test_explain_rejects_json(self, capsys):
        code, _, err = run(
            capsys, "cores", "--e", "4", "--explain", "--json", "[0,3,1,6]"
        )
        assert code == 2
        assert "--explain" in err


class TestCompare:
    def test_less(self, capsys):
        code, out, _ = run(
            capsys, "compare", "--e", "4", "[0,3,1,6]", "[5,-4,2,7]"
        )
        assert code == 0
        assert out.splitlines()[0] == "LESS"
        assert "charge 0: forward yes, backward no" in out

    def test_incomparable_exit_code(self, capsys):
        code, out, _ = run(capsys, "compare", "--e", "2", "[0,3]", "[2,1]")
        assert code == 3
        assert out.splitlines()[0] == "INCOMPARABLE"

    def test_oracle_agreement(self, capsys):
        code, out, _ = run(
            capsys, "compare", "--e", "4", "--oracle", "[0,3,1,6]", "[5,-4,2,7]"
        )
        assert code == 0
        assert "oracle: LESS" in out

    def test_oracle_guard_exit(self, capsys, monkeypatch):
        monkeypatch.setenv("ABACORE_ORACLE_MAX", "3")
        code, _, err = run(
            capsys, "compare", "--e", "4", "--oracle", "[0,3,1,6]", "[5,-4,2,7]"
        )
        assert code == 4
        assert "guard" in err

    def test_oracle_guard_override(self, capsys, monkeypatch):
        monkeypatch.setenv("ABACORE_ORACLE_MAX", "20")
        code, out, _ = run(
            capsys, "compare", "--e", "2", "--oracle", "[1,2]", "[-15,18]"
        )
        assert code == 0
        assert out.splitlines()[0] == "LESS"

    def test_bad_guard_env(self, capsys, monkeypatch):
        monkeypatch.setenv("ABACORE_ORACLE_MAX", "many")
        code, _, err = run(
            capsys, "compare", "--e", "2", "--oracle", "[1,2]", "[0,3]"
        )
        assert code == 2
        assert "ABACORE_ORACLE_MAX" in err

    def test_grassmannian_charge(self, capsys):
        code, out, _ = run(
            capsys,
            "compare", "--e", "4", "--charge", "0", "[-1,2,4,5]", "[-4,2,5,7]",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "LESS"
        assert len(lines) == 2

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "compare", "--e", "2", "--json", "[0,3]", "[2,1]"
        )
        assert code == 3
        doc = json.loads(out)
        assert doc["relation"] == "incomparable"
        assert doc["witnesses"] == [
            {"charge": 0, "forward": False, "backward": True},
            {"charge": 1, "forward": True, "backward": False},
        ]


class TestProject:
    def test_plain(self, capsys):
        code, out, _ = run(
            capsys, "project", "--e", "4", "--charge", "0", "[5,-4,2,7]"
        )
        assert code == 0
        assert out == "[-4,2,5,7]\n"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "project", "--e", "4", "--json", "[5,-4,2,7]"
        )
        assert code == 0
        assert json.loads(out) == {"window": [-4, 2, 5, 7]}


class TestBall:
    def test_summary(self, capsys):
        code, out, _ = run(capsys, "ball", "--e", "2", "--radius", "2")
        assert code == 0
        assert out == "elements: 5\ncovers: 6\n"

    def test_check_line(self, capsys):
        code, out, _ = run(
            capsys, "ball", "--e", "3", "--radius", "3", "--check"
        )
        assert code == 0
        assert out.splitlines()[-1] == "0 discrepancies"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "ball", "--e", "3", "--radius", "2", "--json"
        )
        assert code == 0
        assert json.loads(out) == {
            "e": 3,
            "radius": 2,
            "elements": 10,
            "covers": 15,
            "length_counts": [1, 3, 6],
        }

    def test_dot_stdout(self, capsys):
        code, out, _ = run(capsys, "ball", "--e", "2", "--radius", "1", "--dot", "-")
        assert code == 0
        assert out.startswith("digraph bruhat {\n")
        assert out.endswith("}\n")

    def test_dot_file(self, capsys, tmp_path):
        target = tmp_path / "graph.dot"
        code, out, _ = run(
            capsys, "ball", "--e", "2", "--radius", "2", "--dot", str(target)
        )
        assert code == 0
        assert target.read_text(encoding="utf-8").startswith("digraph bruhat {")
        assert "elements: 5" in out

    def test_max_elements_guard(self, capsys):
        code, _, err = run(
            capsys, "ball", "--e", "4", "--radius", "8", "--max-elements", "50"
        )
        assert code == 4
        assert "50" in err


class TestCheck:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "check", "--e", "2", "--radius", "5")
        assert code == 0
        assert out == "pairs checked: 121\n0 discrepancies\n"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "check", "--e", "2", "--radius", "4", "--json"
        )
        assert code == 0
        assert json.loads(out) == {"pairs_checked": 81, "discrepancies": []}


class TestShow:
    def test_partition(self, capsys):
        code, out, _ = run(
            capsys, "show", "--from", "partition", "--charge", "1", "(2)"
        )
        assert code == 0
        assert out == ("-1  0  1  2  3  4\n" " o  o  .  .  o  .\n")

    def test_abacus(self, capsys):
        code, out, _ = run(
            capsys, "show", "--from", "abacus",
            '{"floor": 0, "high_beads": [3]}',
        )
        assert code == 0
        assert out == ("-1  0  1  2  3  4\n" " o  o  .  .  o  .\n")


class TestEntryPoint:
    def test_module_runs(self):
        import subprocess
        import sys

        proc = subprocess.run(
            [sys.executable, "-m", "abacore", "cores", "--e", "4", "[0,3,1,6]"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "(2); (1); (1,1); ()\n"
