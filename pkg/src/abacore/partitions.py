"""Charged partitions, Young diagrams, residues and rim hooks.

A charged partition is a weakly decreasing tuple of positive parts together
with an integer charge.  The charge shifts every residue, so that the box
(1, 1) always has residue equal to the charge.

>>> p = ChargedPartition((2, 1), charge=0)
>>> sorted(young_diagram(p))
[Node(row=1, col=1), Node(row=1, col=2), Node(row=2, col=1)]
>>> residue(p, Node(1, 2), 3)
1
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InvalidModulusError, NotECoreError

__all__ = [
    "Node",
    "ChargedPartition",
    "RimHook",
    "young_diagram",
    "residue",
    "all_addable_nodes",
    "all_removable_nodes",
    "addable_nodes",
    "removable_nodes",
    "is_core",
    "toggle_residue",
    "add_first_column_hook",
    "remove_first_column",
    "rim_hook_at",
    "remove_rim_hook",
    "diagram_contains",
    "added_cells",
]


class Node(NamedTuple):
    """A box of a Young diagram in matrix coordinates; rows and columns start at 1."""

    row: int
    col: int


def _check_modulus(e: int) -> None:
    if not isinstance(e, int) or e < 2:
        raise InvalidModulusError(f"modulus must be an integer >= 2, got {e!r}")


@dataclass(frozen=True)
class ChargedPartition:
    """Weakly decreasing positive parts plus an integer charge.

    >>> ChargedPartition((4, 3, 2, 1, 1, 1), charge=1).size
    12
    >>> str(ChargedPartition((), charge=3))
    '()'
    """

    parts: tuple[int, ...] = ()
    charge: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(not isinstance(p, int) or p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive integers, got {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def row(self, a: int) -> int:
        """Length of row a, zero beyond the last row."""
        return self.parts[a - 1] if 1 <= a <= len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def young_diagram(p: ChargedPartition) -> set[Node]:
    """The set of boxes of p."""
    return {
        Node(a, b)
        for a, part in enumerate(p.parts, start=1)
        for b in range(1, part + 1)
    }


def residue(p: ChargedPartition, node: tuple[int, int], e: int) -> int:
    """Residue of a box: column minus row plus charge, mod e."""
    _check_modulus(e)
    row, col = node
    return (col - row + p.charge) % e


def all_addable_nodes(p: ChargedPartition) -> set[Node]:
    """Boxes that can be appended while keeping the shape a partition."""
    rows = len(p.parts)
    nodes = {Node(rows + 1, 1)}
    for a in range(1, rows + 1):
        if a == 1 or p.parts[a - 2] > p.parts[a - 1]:
            nodes.add(Node(a, p.parts[a - 1] + 1))
    return nodes


def all_removable_nodes(p: ChargedPartition) -> set[Node]:
    """Boxes that can be deleted while keeping the shape a partition."""
    rows = len(p.parts)
    return {
        Node(a, p.parts[a - 1])
        for a in range(1, rows + 1)
        if a == rows or p.parts[a] < p.parts[a - 1]
    }


def addable_nodes(p: ChargedPartition, i: int, e: int) -> set[Node]:
    """Addable boxes of residue i."""
    _check_modulus(e)
    i %= e
    return {n for n in all_addable_nodes(p) if residue(p, n, e) == i}


def removable_nodes(p: ChargedPartition, i: int, e: int) -> set[Node]:
    """Removable boxes of residue i."""
    _check_modulus(e)
    i %= e
    return {n for n in all_removable_nodes(p) if residue(p, n, e) == i}


def _first_column_hook_lengths(p: ChargedPartition) -> tuple[int, ...]:
    rows = len(p.parts)
    return tuple(part + rows - a for a, part in enumerate(p.parts, start=1))


def is_core(p: ChargedPartition, e: int) -> bool:
    """True when no rim hook of p has length e.

    Stated on the first-column hook lengths: removing an e-hook always drops
    one of them by exactly e, so p is an e-core iff every first-column hook
    length f either is below e or has f - e among the first-column hook
    lengths.

    >>> is_core(ChargedPartition((3,)), 3)
    False
    >>> is_core(ChargedPartition((3,)), 2)
    False
    >>> is_core(ChargedPartition((2,)), 3)
    True
    """
    _check_modulus(e)
    lengths = set(_first_column_hook_lengths(p))
    return all(f < e or f - e in lengths for f in lengths)


def _with_boxes(p: ChargedPartition, boxes: Iterable[Node]) -> ChargedPartition:
    rows = [n[0] for n in boxes]
    nrows = max([len(p.parts), *rows]) if rows else len(p.parts)
    parts = tuple(p.row(a) + rows.count(a) for a in range(1, nrows + 1))
    return ChargedPartition(parts, p.charge)


def _without_boxes(p: ChargedPartition, boxes: Iterable[Node]) -> ChargedPartition:
    rows = [n[0] for n in boxes]
    parts = [part - rows.count(a) for a, part in enumerate(p.parts, start=1)]
    while parts and parts[-1] == 0:
        parts.pop()
    return ChargedPartition(tuple(parts), p.charge)


def toggle_residue(p: ChargedPartition, i: int, e: int) -> ChargedPartition:
    """Add every addable box of residue i, or else remove every removable one.

    Only defined on e-cores, where addable and removable boxes of a fixed
    residue never coexist; this makes the operation an involution.
    """
    _check_modulus(e)
    if not is_core(p, e):
        raise NotECoreError(
            f"toggling needs an {e}-core, but {p} (charge {p.charge}) has an {e}-hook"
        )
    add = addable_nodes(p, i, e)
    if add:
        return _with_boxes(p, add)
    rem = removable_nodes(p, i, e)
    if rem:
        return _without_boxes(p, rem)
    return p


@dataclass(frozen=True)
class RimHook:
    """A connected strip of boxes along a rim, stored in walk order.

    The walk starts at the foot (bottom-left end) and moves only right or up,
    ending at the hand (top-right end).  Use :meth:`from_cells` to build one
    from an unordered collection with validation.
    """

    cells: tuple[Node, ...]

    def __post_init__(self) -> None:
        cells = tuple(Node(*c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise ValueError("a rim hook has at least one box")
        if any(c.row < 1 or c.col < 1 for c in cells):
            raise ValueError(f"boxes must have positive coordinates: {cells}")
        cellset = set(cells)
        if len(cellset) != len(cells):
            raise ValueError("duplicate boxes in rim hook")
        for cur, nxt in zip(cells, cells[1:]):
            if nxt not in (Node(cur.row, cur.col + 1), Node(cur.row - 1, cur.col)):
                raise ValueError(f"boxes do not walk right/up: {cur} -> {nxt}")
            if (
                Node(cur.row, cur.col + 1) in cellset
                and Node(cur.row - 1, cur.col) in cellset
            ):
                raise ValueError(f"strip branches at {cur}; not a rim hook")

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]]) -> "RimHook":
        """Order an unordered collection of boxes into a rim walk, validating it."""
        cellset = {Node(*c) for c in cells}
        if not cellset:
            raise ValueError("a rim hook has at least one box")
        foot = min(cellset, key=lambda n: (-n.row, n.col))
        order = [foot]
        cur = foot
        while len(order) < len(cellset):
            right = Node(cur.row, cur.col + 1)
            up = Node(cur.row - 1, cur.col)
            nxt = right if right in cellset else up if up in cellset else None
            if nxt is None:
                raise ValueError("boxes are not connected along a rim")
            order.append(nxt)
            cur = nxt
        return cls(tuple(order))

    @property
    def foot(self) -> Node:
        return self.cells[0]

    @property
    def hand(self) -> Node:
        return self.cells[-1]

    @property
    def length(self) -> int:
        return len(self.cells)


def rim_hook_at(p: ChargedPartition, corner: tuple[int, int]) -> RimHook:
    """The rim hook of p anchored at a box: all rim boxes weakly south-east of it.

    Row by row, the rim boxes of row x at columns >= b are those from
    max(b, row(x+1)) to row(x); they stop as soon as a row is shorter than b.
    """
    a, b = corner
    if not (1 <= a <= len(p.parts)) or not (1 <= b <= p.parts[a - 1]):
        raise ValueError(f"{corner} is not a box of {p}")
    cells = []
    for x in range(a, len(p.parts) + 1):
        if p.row(x) < b:
            break
        lo = max(b, p.row(x + 1))
        cells.extend(Node(x, y) for y in range(lo, p.row(x) + 1))
    return RimHook.from_cells(cells)


def remove_rim_hook(p: ChargedPartition, hook: RimHook) -> ChargedPartition:
    """Remove a rim hook from p, checking it really is one of p's rim hooks."""
    if any(n.col > p.row(n.row) for n in hook.cells):
        raise ValueError("hook has boxes outside the partition")
    by_row: dict[int, list[int]] = {}
    for n in hook.cells:
        by_row.setdefault(n.row, []).append(n.col)
    for row, cols in by_row.items():
        # each row must lose a suffix, otherwise a hole is left behind
        if sorted(cols) != list(range(p.row(row) - len(cols) + 1, p.row(row) + 1)):
            raise ValueError(f"hook does not hug the rim in row {row}")
    return _without_boxes(p, hook.cells)


def add_first_column_hook(
    p: ChargedPartition, hand_residue: int, e: int
) -> ChargedPartition:
    """Add the smallest rim hook with the given hand residue whose unique
    first-column box lies strictly below the last row of p.

    Such a hook always exists and the result has exactly one more part.  On
    the abacus this is: move the bead just left of the leftmost gap to the
    nearest gap of the right residue class.
    """
    _check_modulus(e)
    c = p.charge
    m = len(p.parts)
    beads = {part - k + c + 1 for k, part in enumerate(p.parts, start=1)}
    y = c - m  # the bead just left of the leftmost gap
    t = (hand_residue + 1) % e
    z = y + 1 + ((t - (y + 1)) % e)
    while z in beads:
        z += e
    floor = y - 1
    high = sorted(beads | {z})
    parts = tuple(b - floor - 1 - idx for idx, b in enumerate(high))[::-1]
    return ChargedPartition(parts, c)


def remove_first_column(p: ChargedPartition) -> ChargedPartition:
    """Drop the first column: every part shrinks by 1 and the charge grows by 1."""
    return ChargedPartition(
        tuple(part - 1 for part in p.parts if part > 1), p.charge + 1
    )


def diagram_contains(outer: ChargedPartition, inner: ChargedPartition) -> bool:
    """True if every box of inner's diagram lies in outer's; charges are ignored."""
    if len(inner.parts) > len(outer.parts):
        return False
    return all(i <= o for i, o in zip(inner.parts, outer.parts))


def added_cells(
    inner: ChargedPartition, outer: ChargedPartition
) -> tuple[Node, ...]:
    """Boxes of outer missing from inner, rowwise; inner must fit inside outer."""
    if not diagram_contains(outer, inner):
        raise ValueError(f"{inner} does not fit inside {outer}")
    return tuple(
        Node(a, b)
        for a in range(1, len(outer.parts) + 1)
        for b in range(inner.row(a) + 1, outer.row(a) + 1)
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
