import json

import pytest
from hypothesis import given, settings, strategies as st

from abacore.affine import AffinePermutation, from_word, grassmannian_project, identity
from abacore.bruhat import (
    Relation,
    bruhat_compare,
    build_ball,
    check_lattice_isomorphism,
    grassmannian_compare,
    hasse_dot,
    subword_oracle,
)
from abacore.errors import (
    GuardExceededError,
    InvalidWindowError,
    ModulusMismatchError,
)

import oracle_helpers as oh


def words(min_e=2, max_e=4, max_len=8):
    return st.integers(min_e, max_e).flatmap(
        lambda e: st.tuples(
            st.just(e),
            st.lists(st.integers(0, e - 1), max_size=max_len).map(tuple),
        )
    )


class TestCompare:
    def test_identity_below_everything(self):
        w = AffinePermutation(4, (5, -4, 2, 7))
        res = bruhat_compare(identity(4), w)
        assert res.relation is Relation.LESS
        assert all(wit.forward for wit in res.witnesses)
        assert bruhat_compare(w, identity(4)).relation is Relation.GREATER

    def test_equal(self):
        w = AffinePermutation(4, (0, 3, 1, 6))
        assert bruhat_compare(w, w).relation is Relation.EQUAL

    def test_golden_pair(self):
        small = AffinePermutation(4, (0, 3, 1, 6))
        big = AffinePermutation(4, (5, -4, 2, 7))
        assert bruhat_compare(small, big).relation is Relation.LESS

    def test_incomparable_pair(self):
        res = bruhat_compare(
            AffinePermutation(2, (0, 3)), AffinePermutation(2, (2, 1))
        )
        assert res.relation is Relation.INCOMPARABLE
        assert [wit.charge for wit in res.witnesses] == [0, 1]

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatchError):
            bruhat_compare(identity(2), identity(3))

    @given(words())
    def test_skew_symmetry(self, ew):
        e, letters = ew
        w = from_word(e, letters)
        v = from_word(e, letters[::-1])
        fwd = bruhat_compare(w, v).relation
        bwd = bruhat_compare(v, w).relation
        flip = {
            Relation.LESS: Relation.GREATER,
            Relation.GREATER: Relation.LESS,
            Relation.EQUAL: Relation.EQUAL,
            Relation.INCOMPARABLE: Relation.INCOMPARABLE,
        }
        assert bwd == flip[fwd]


class TestGrassmannianCompare:
    def test_single_charge(self):
        u = AffinePermutation(4, (-1, 2, 4, 5))
        v = AffinePermutation(4, (-4, 2, 5, 7))
        res = grassmannian_compare(u, v, 0)
        assert res.relation is Relation.LESS
        assert len(res.witnesses) == 1
        assert res.witnesses[0].charge == 0

    def test_rejects_unsorted(self):
        with pytest.raises(InvalidWindowError, match="not sorted"):
            grassmannian_compare(
                AffinePermutation(4, (5, -4, 2, 7)),
                identity(4),
                0,
            )

    @given(words(), st.integers(0, 3))
    @settings(max_examples=50, deadline=None)
    def test_agrees_with_full_compare_on_projections(self, ew, c):
        e, letters = ew
        u = grassmannian_project(from_word(e, letters), c)
        v = grassmannian_project(from_word(e, letters[1:]), c)
        single = grassmannian_compare(u, v, c).relation
        full = bruhat_compare(u, v).relation
        assert single == full


class TestSubwordOracle:
    def test_identity_cases(self):
        w = AffinePermutation(4, (0, 3, 1, 6))
        assert subword_oracle(identity(4), w)
        assert subword_oracle(w, w)
        assert not subword_oracle(w, identity(4))

    def test_incomparable_generators(self):
        s0 = identity(2).right_mult(0)
        s1 = identity(2).right_mult(1)
        assert not subword_oracle(s0, s1)
        assert not subword_oracle(s1, s0)

    def test_guard(self):
        w = AffinePermutation(2, (-15, 18))
        assert w.length == 16
        with pytest.raises(GuardExceededError):
            subword_oracle(identity(2), w)
        assert subword_oracle(identity(2), w, max_length=16)

    def test_golden_pair(self):
        small = AffinePermutation(4, (0, 3, 1, 6))
        big = AffinePermutation(4, (5, -4, 2, 7))
        assert subword_oracle(small, big)
        assert not subword_oracle(big, small)


class TestBall:
    def test_radius_zero(self):
        ball = build_ball(3, 0)
        assert len(ball.elements) == 1
        assert ball.covers == ()

    def test_small_sizes(self):
        assert len(build_ball(2, 2).elements) == 5
        assert len(build_ball(3, 2).elements) == 10
        assert len(build_ball(4, 2).elements) == 15

    def test_pinned_layer_counts(self):
        ball = build_ball(3, 5)
        counts = {}
        for n in ball.lengths:
            counts[n] = counts.get(n, 0) + 1
        assert counts == {0: 1, 1: 3, 2: 6, 3: 9, 4: 12, 5: 15}

    def test_lengths_sorted_and_correct(self):
        ball = build_ball(4, 3)
        assert list(ball.lengths) == sorted(ball.lengths)
        for w, n in zip(ball.elements, ball.lengths):
            assert w.length == n

    def test_element_cap(self):
        with pytest.raises(GuardExceededError):
            build_ball(4, 6, max_elements=100)

    def test_covers_against_definition(self):
        ball = build_ball(2, 4)
        index = {w: k for k, w in enumerate(ball.elements)}
        expected = set()
        for u in ball.elements:
            for v in ball.elements:
                if v.length == u.length + 1 and subword_oracle(u, v):
                    expected.add((index[u], index[v]))
        assert set(ball.covers) == expected

    def test_cover_edges_are_length_steps(self):
        ball = build_ball(3, 4)
        for i, j in ball.covers:
            assert ball.lengths[j] == ball.lengths[i] + 1
            assert bruhat_compare(
                ball.elements[i], ball.elements[j]
            ).relation is Relation.LESS


class TestIsomorphismCheck:
    def test_clean_report(self):
        ball = build_ball(2, 4)
        report = check_lattice_isomorphism(ball)
        assert report.pairs_checked == len(ball.elements) ** 2
        assert report.discrepancies == ()
        doc = json.loads(report.to_json())
        assert sorted(doc) == ["discrepancies", "pairs_checked"]
        assert doc["pairs_checked"] == report.pairs_checked
        assert doc["discrepancies"] == []

    def test_three_strands(self):
        report = check_lattice_isomorphism(build_ball(3, 3))
        assert report.discrepancies == ()


class TestHasseDot:
    def test_pinned_two_strand_graph(self):
        text = hasse_dot(build_ball(2, 2))
        assert text == (
            "digraph bruhat {\n"
            "  rankdir=BT;\n"
            '  n0 [label="[1,2]"];\n'
            '  n1 [label="[0,3]"];\n'
            '  n2 [label="[2,1]"];\n'
            '  n3 [label="[-1,4]"];\n'
            '  n4 [label="[3,0]"];\n'
            "  { rank=same; n0; }\n"
            "  { rank=same; n1; n2; }\n"
            "  { rank=same; n3; n4; }\n"
            "  n0 -> n1;\n"
            "  n0 -> n2;\n"
            "  n1 -> n3;\n"
            "  n1 -> n4;\n"
            "  n2 -> n3;\n"
            "  n2 -> n4;\n"
            "}\n"
        )

    def test_core_labels(self):
        text = hasse_dot(build_ball(2, 1), include_cores=True)
        assert '[label="[0,3]\\n(1); ()"]' in text
