"""Command line front end.

Exit codes: 0 on success, 1 when a cross-check finds a mismatch, 2 on bad
input, 3 when a comparison comes out incomparable, 4 when a guard against
oversized oracle work trips.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .abacus import Abacus, render
from .affine import (
    AffinePermutation,
    format_window,
    format_word,
    from_word,
    grassmannian_project,
    reduced_word,
)
from .bruhat import (
    DEFAULT_ORACLE_MAX,
    Relation,
    bruhat_compare,
    build_ball,
    check_lattice_isomorphism,
    grassmannian_compare,
    hasse_dot,
    subword_oracle,
)
from .cores import (
    core_abacus,
    core_from_window,
    core_tuple,
    core_tuple_grassmannian,
    rimhook_steps,
)
from .errors import AbacoreError, GuardExceededError, ParseError
from .partitions import ChargedPartition, RimHook

__all__ = ["main"]


def _parse_window(text: str) -> tuple[int, ...]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        return tuple(int(tok) for tok in body.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"not a window: {text!r}") from exc


def _parse_word(text: str) -> tuple[int, ...]:
    body = text.strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split("."))
    except ValueError as exc:
        raise ParseError(f"not a word: {text!r}") from exc


def _parse_partition(text: str, charge: int) -> ChargedPartition:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        parts = tuple(int(tok) for tok in body.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"not a partition: {text!r}") from exc
    return ChargedPartition(parts, charge)


def _abacus_obj(a: Abacus) -> dict:
    return {"floor": a.floor, "high_beads": list(a.high_beads)}


def _oracle_guard() -> int:
    raw = os.environ.get("ABACORE_ORACLE_MAX")
    if raw is None:
        return DEFAULT_ORACLE_MAX
    try:
        return int(raw)
    except ValueError as exc:
        raise ParseError(
            f"ABACORE_ORACLE_MAX must be an integer, got {raw!r}"
        ) from exc


def _format_cells(hook: RimHook) -> str:
    return " ".join(f"({n.row},{n.col})" for n in hook.cells)


def cmd_convert(args: argparse.Namespace) -> int:
    e = args.e
    out: dict[str, object] = {}
    if args.source in ("word", "window"):
        if args.source == "word":
            w = from_word(e, _parse_word(args.value))
        else:
            w = AffinePermutation(e, _parse_window(args.value))
        charge = args.charge
        out["word"] = format_word(reduced_word(w))
        out["window"] = w.window
        abacus = core_abacus(w, charge)
    else:
        if args.source == "partition":
            p = _parse_partition(args.value, args.charge)
            abacus = Abacus.from_partition(p)
        else:
            abacus = Abacus.from_json(args.value)
        charge = abacus.charge
        if args.target in ("word", "window", "all"):
            rec = core_tuple_grassmannian(abacus, e)
            out["word"] = format_word(reduced_word(rec.element))
            out["window"] = rec.element.window
    partition = abacus.to_partition()
    out["partition"] = partition
    out["abacus"] = abacus

    def plain(key: str) -> str:
        val = out[key]
        if key == "word":
            return str(val)
        if key == "window":
            return format_window(val)
        if key == "partition":
            return str(val)
        return val.to_json()

    def jsonable(key: str) -> object:
        val = out[key]
        if key == "window":
            return list(val)
        if key == "partition":
            return list(val.parts)
        if key == "abacus":
            return _abacus_obj(val)
        return val

    if args.target == "all":
        keys = ["word", "window", "partition", "abacus"]
        if args.json:
            doc = {k: jsonable(k) for k in keys}
            doc["charge"] = charge
            print(json.dumps(doc))
        else:
            for k in keys:
                print(f"{k}: {plain(k)}")
    else:
        if args.json:
            doc = {args.target: jsonable(args.target)}
            if args.target == "partition":
                doc["charge"] = charge
            print(json.dumps(doc))
        else:
            print(plain(args.target))
    return 0


def cmd_cores(args: argparse.Namespace) -> int:
    if args.explain and args.json:
        print("error: --explain does not combine with --json", file=sys.stderr)
        return 2
    w = AffinePermutation(args.e, _parse_window(args.window))
    if args.explain:
        steps = rimhook_steps(w)
        print(f"lambda(0) = {steps[0].before if steps else core_from_window(w, 0)}")
        for s in steps:
            print(
                f"add hook: hand residue {s.hand_residue}, "
                f"cells {_format_cells(s.hook)}"
            )
            print(f"mu = {s.enlarged}")
            print(f"strip first column: lambda({s.target_charge}) = {s.after}")
        return 0
    if args.charge is not None:
        p = core_from_window(w, args.charge)
        if args.json:
            print(json.dumps({"charge": args.charge, "partition": list(p.parts)}))
        else:
            print(p)
        return 0
    t = core_tuple(w)
    if args.json:
        doc = {
            "e": args.e,
            "window": list(w.window),
            "cores": [
                {"charge": c, "partition": list(p.parts)}
                for c, p in enumerate(t.cores)
            ],
        }
        print(json.dumps(doc))
    else:
        print(t)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    w = AffinePermutation(args.e, _parse_window(args.left))
    v = AffinePermutation(args.e, _parse_window(args.right))
    if args.charge is not None:
        result = grassmannian_compare(w, v, args.charge)
    else:
        result = bruhat_compare(w, v)
    oracle_relation = None
    if args.oracle:
        guard = _oracle_guard()
        leq = subword_oracle(w, v, max_length=guard)
        geq = subword_oracle(v, w, max_length=guard)
        if leq and geq:
            oracle_relation = Relation.EQUAL
        elif leq:
            oracle_relation = Relation.LESS
        elif geq:
            oracle_relation = Relation.GREATER
        else:
            oracle_relation = Relation.INCOMPARABLE
    if args.json:
        doc: dict[str, object] = {
            "relation": result.relation.value,
            "witnesses": [
                {"charge": wit.charge, "forward": wit.forward, "backward": wit.backward}
                for wit in result.witnesses
            ],
        }
        if oracle_relation is not None:
            doc["oracle"] = oracle_relation.value
        print(json.dumps(doc))
    else:
        print(result.relation.name)
        for wit in result.witnesses:
            fwd = "yes" if wit.forward else "no"
            bwd = "yes" if wit.backward else "no"
            print(f"charge {wit.charge}: forward {fwd}, backward {bwd}")
        if oracle_relation is not None:
            print(f"oracle: {oracle_relation.name}")
    if oracle_relation is not None and oracle_relation != result.relation:
        print("error: oracle disagrees with the fast comparison", file=sys.stderr)
        return 1
    return 3 if result.relation is Relation.INCOMPARABLE else 0


def cmd_project(args: argparse.Namespace) -> int:
    w = AffinePermutation(args.e, _parse_window(args.window))
    p = grassmannian_project(w, args.charge)
    if args.json:
        print(json.dumps({"window": list(p.window)}))
    else:
        print(format_window(p.window))
    return 0


def cmd_ball(args: argparse.Namespace) -> int:
    ball = build_ball(args.e, args.radius, max_elements=args.max_elements)
    if args.dot is not None:
        text = hasse_dot(ball)
        if args.dot == "-":
            sys.stdout.write(text)
            return 0
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
    counts: dict[int, int] = {}
    for n in ball.lengths:
        counts[n] = counts.get(n, 0) + 1
    length_counts = [counts.get(n, 0) for n in range(ball.radius + 1)]
    report = None
    if args.check:
        report = check_lattice_isomorphism(
            ball, max_length=_oracle_guard()
        )
    if args.json:
        doc: dict[str, object] = {
            "e": ball.e,
            "radius": ball.radius,
            "elements": len(ball.elements),
            "covers": len(ball.covers),
            "length_counts": length_counts,
        }
        if report is not None:
            doc["pairs_checked"] = report.pairs_checked
            doc["discrepancies"] = json.loads(report.to_json())["discrepancies"]
        print(json.dumps(doc))
    else:
        print(f"elements: {len(ball.elements)}")
        print(f"covers: {len(ball.covers)}")
        if report is not None:
            print(f"{len(report.discrepancies)} discrepancies")
    if report is not None and report.discrepancies:
        return 1
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    ball = build_ball(args.e, args.radius, max_elements=args.max_elements)
    report = check_lattice_isomorphism(ball, max_length=_oracle_guard())
    if args.json:
        print(report.to_json())
    else:
        print(f"pairs checked: {report.pairs_checked}")
        print(f"{len(report.discrepancies)} discrepancies")
        for d in report.discrepancies:
            print(
                f"  {format_window(d.left_window)} vs "
                f"{format_window(d.right_window)}: "
                f"oracle {d.oracle}, fast {d.fast}"
            )
    return 1 if report.discrepancies else 0


def cmd_show(args: argparse.Namespace) -> int:
    if args.source == "partition":
        a = Abacus.from_partition(_parse_partition(args.value, args.charge))
    else:
        a = Abacus.from_json(args.value)
    print(render(a))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abacore",
        description="Affine permutations, abacus displays and core partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "convert", help="translate between word, window, partition and abacus"
    )
    p.add_argument("--e", type=int, required=True, help="number of strands")
    p.add_argument(
        "--from",
        dest="source",
        required=True,
        choices=["word", "window", "partition", "abacus"],
    )
    p.add_argument(
        "--to",
        dest="target",
        required=True,
        choices=["word", "window", "partition", "abacus", "all"],
    )
    p.add_argument(
        "--charge",
        type=int,
        default=0,
        help="charge of the partition or abacus side (default 0)",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("value", help="the representation named by --from")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("cores", help="the core partition at each charge")
    p.add_argument("--e", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--charge", type=int, default=None)
    group.add_argument(
        "--explain",
        action="store_true",
        help="walk through the hook-and-strip construction",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("window")
    p.set_defaults(func=cmd_cores)

    p = sub.add_parser("compare", help="compare two windows in Bruhat order")
    p.add_argument("--e", type=int, required=True)
    p.add_argument(
        "--charge",
        type=int,
        default=None,
        help="compare as charge-c sorted elements instead of globally",
    )
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the subword definition",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("project", help="sort a window at a charge")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("window")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("ball", help="all elements up to a length bound")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument(
        "--dot",
        metavar="PATH",
        default=None,
        help="write the cover graph as DOT; - for stdout",
    )
    p.add_argument(
        "--check",
        action="store_true",
        help="cross-check the order against the oracle",
    )
    p.add_argument("--max-elements", type=int, default=100_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser(
        "check", help="cross-check fast order against the oracle on a ball"
    )
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--max-elements", type=int, default=100_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("show", help="draw an abacus")
    p.add_argument(
        "--from",
        dest="source",
        required=True,
        choices=["partition", "abacus"],
    )
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("value")
    p.set_defaults(func=cmd_show)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (AbacoreError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
