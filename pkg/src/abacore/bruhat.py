"""Bruhat order via core containment, checked against a subword oracle.

The fast comparison tests diagram containment of the core at every charge.
The oracle answers the same question from the definition: does some subword
of a reduced word for the bigger element multiply out to the smaller one.
Poset balls bundle every element up to a length bound with the cover
relation, ready for cross-checking or DOT output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .affine import AffinePermutation, format_window, identity, reduced_word
from .cores import core_from_window, core_tuple
from .errors import GuardExceededError, InvalidWindowError, ModulusMismatchError
from .partitions import diagram_contains

__all__ = [
    "Relation",
    "ChargeWitness",
    "ComparisonResult",
    "bruhat_compare",
    "grassmannian_compare",
    "DEFAULT_ORACLE_MAX",
    "subword_oracle",
    "PosetBall",
    "build_ball",
    "Discrepancy",
    "IsomorphismReport",
    "check_lattice_isomorphism",
    "hasse_dot",
]

DEFAULT_ORACLE_MAX = 14


class Relation(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class ChargeWitness(NamedTuple):
    """Containment verdicts at one charge: forward is left-inside-right."""

    charge: int
    forward: bool
    backward: bool


class ComparisonResult(NamedTuple):
    relation: Relation
    witnesses: tuple[ChargeWitness, ...]


def _classify(witnesses: Sequence[ChargeWitness]) -> Relation:
    fwd = all(w.forward for w in witnesses)
    bwd = all(w.backward for w in witnesses)
    if fwd and bwd:
        return Relation.EQUAL
    if fwd:
        return Relation.LESS
    if bwd:
        return Relation.GREATER
    return Relation.INCOMPARABLE


def bruhat_compare(
    w: AffinePermutation, v: AffinePermutation
) -> ComparisonResult:
    """Compare two elements by core containment at every charge."""
    if w.e != v.e:
        raise ModulusMismatchError(
            f"cannot compare windows on {w.e} and {v.e} strands"
        )
    witnesses = []
    for c in range(w.e):
        left = core_from_window(w, c)
        right = core_from_window(v, c)
        witnesses.append(
            ChargeWitness(
                c,
                diagram_contains(right, left),
                diagram_contains(left, right),
            )
        )
    return ComparisonResult(_classify(witnesses), tuple(witnesses))


def grassmannian_compare(
    w: AffinePermutation, v: AffinePermutation, c: int
) -> ComparisonResult:
    """Compare two charge-c sorted elements; one containment check suffices."""
    if w.e != v.e:
        raise ModulusMismatchError(
            f"cannot compare windows on {w.e} and {v.e} strands"
        )
    for name, u in (("left", w), ("right", v)):
        if not u.is_grassmannian(c):
            raise InvalidWindowError(
                f"{name} element {u} is not sorted at charge {c}"
            )
    left = core_from_window(w, c)
    right = core_from_window(v, c)
    witness = ChargeWitness(
        c, diagram_contains(right, left), diagram_contains(left, right)
    )
    return ComparisonResult(_classify([witness]), (witness,))


def subword_oracle(
    w: AffinePermutation,
    v: AffinePermutation,
    *,
    max_length: int = DEFAULT_ORACLE_MAX,
) -> bool:
    """True when w is below v in Bruhat order, decided from the definition.

    Fixes one reduced word for v and evaluates every subword of the right
    size, looking for w.  Exponential in length, hence the guard.
    """
    if w.e != v.e:
        raise ModulusMismatchError(
            f"cannot compare windows on {w.e} and {v.e} strands"
        )
    if v.length > max_length:
        raise GuardExceededError(
            f"oracle guard: length {v.length} exceeds {max_length}"
        )
    if w.length > v.length:
        return False
    if w.length == v.length:
        return w == v
    word = reduced_word(v)
    n = len(word)
    combos = list(combinations(range(n), w.length))
    masks = np.zeros((len(combos), n), dtype=bool)
    for r, combo in enumerate(combos):
        masks[r, list(combo)] = True
    hit = kernels.eval_masks(
        np.asarray(word, dtype=np.int64),
        w.e,
        masks,
        np.asarray(w.window, dtype=np.int64),
    )
    return hit >= 0


@dataclass(frozen=True)
class PosetBall:
    """Every element of length <= radius, sorted by length, plus the covers.

    ``covers`` holds index pairs (i, j) with elements[i] covered by
    elements[j].
    """

    e: int
    radius: int
    elements: tuple[AffinePermutation, ...]
    lengths: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]


def _padded_core_array(
    elements: Sequence[AffinePermutation], e: int
) -> np.ndarray:
    """One row per element: the parts of all e cores, zero-padded to a grid."""
    tuples = [core_tuple(w) for w in elements]
    width = max(
        (len(p.parts) for t in tuples for p in t.cores), default=0
    )
    width = max(width, 1)
    arr = np.zeros((len(elements), e * width), dtype=np.int64)
    for r, t in enumerate(tuples):
        for c, p in enumerate(t.cores):
            arr[r, c * width : c * width + len(p.parts)] = p.parts
    return arr


def build_ball(
    e: int, radius: int, *, max_elements: int = 100_000
) -> PosetBall:
    """Breadth-first sweep out to the radius, then covers layer by layer."""
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    seen = {identity(e)}
    frontier = [identity(e)]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for i in range(e):
                u = w.right_mult(i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
            if len(seen) > max_elements:
                raise GuardExceededError(
                    f"ball exceeds {max_elements} elements; raise the cap "
                    f"or shrink the radius"
                )
        frontier = nxt
    elements = tuple(
        sorted(seen, key=lambda w: (w.length, w.window))
    )
    lengths = tuple(w.length for w in elements)
    arr = _padded_core_array(elements, e)
    by_len: dict[int, list[int]] = {}
    for idx, n in enumerate(lengths):
        by_len.setdefault(n, []).append(idx)
    covers = []
    for n in range(radius):
        lower = by_len.get(n, [])
        upper = by_len.get(n + 1, [])
        if not lower or not upper:
            continue
        table = kernels.inclusion_cross(arr[lower], arr[upper])
        for a, b in np.argwhere(table):
            covers.append((lower[a], upper[b]))
    return PosetBall(e, radius, elements, lengths, tuple(sorted(covers)))


class Discrepancy(NamedTuple):
    left_window: tuple[int, ...]
    right_window: tuple[int, ...]
    oracle: bool
    fast: bool


@dataclass(frozen=True)
class IsomorphismReport:
    pairs_checked: int
    discrepancies: tuple[Discrepancy, ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "pairs_checked": self.pairs_checked,
                "discrepancies": [
                    {
                        "left": list(d.left_window),
                        "right": list(d.right_window),
                        "oracle": d.oracle,
                        "fast": d.fast,
                    }
                    for d in self.discrepancies
                ],
            }
        )


def check_lattice_isomorphism(
    ball: PosetBall, *, max_length: int | None = None
) -> IsomorphismReport:
    """Cross-check the fast order against the oracle on every ordered pair."""
    guard = ball.radius if max_length is None else max_length
    arr = _padded_core_array(ball.elements, ball.e)
    fast_leq = kernels.inclusion_cross(arr, arr)
    discrepancies = []
    n = len(ball.elements)
    for i in range(n):
        for j in range(n):
            fast = bool(fast_leq[i, j])
            if ball.lengths[i] > ball.lengths[j]:
                oracle = False
            else:
                oracle = subword_oracle(
                    ball.elements[i], ball.elements[j], max_length=guard
                )
            if oracle != fast:
                discrepancies.append(
                    Discrepancy(
                        ball.elements[i].window,
                        ball.elements[j].window,
                        oracle,
                        fast,
                    )
                )
    return IsomorphismReport(n * n, tuple(discrepancies))


def hasse_dot(ball: PosetBall, *, include_cores: bool = False) -> str:
    """DOT source for the cover graph, one rank row per length."""
    lines = ["digraph bruhat {", "  rankdir=BT;"]
    for idx, w in enumerate(ball.elements):
        label = format_window(w.window)
        if include_cores:
            label += "\\n" + str(core_tuple(w))
        lines.append(f'  n{idx} [label="{label}"];')
    by_len: dict[int, list[int]] = {}
    for idx, n in enumerate(ball.lengths):
        by_len.setdefault(n, []).append(idx)
    for n in sorted(by_len):
        row = " ".join(f"n{idx};" for idx in by_len[n])
        lines.append(f"  {{ rank=same; {row} }}")
    for i, j in ball.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
