"""Single-runner abacus displays for charged partitions.

Beads sit at the integers; a configuration has all positions up to some floor
occupied, finitely many occupied above it, and the rest empty.  Reading the
gaps below each bead recovers a partition, and the bead count weighted
against the floor recovers the charge.

>>> a = Abacus.from_partition(ChargedPartition((5, 3, 3, 2), charge=2))
>>> a.floor, a.high_beads
(-2, (1, 3, 4, 7))
>>> str(a.to_partition())
'(5,3,3,2)'
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import BeadError, ParseError
from .partitions import ChargedPartition, RimHook, added_cells
from .partitions import _check_modulus

__all__ = [
    "Abacus",
    "NodeSignature",
    "BeadMove",
    "is_e_core",
    "addable_removable_signature",
    "add_bead",
    "move_bead",
    "render",
]


@dataclass(frozen=True)
class Abacus:
    """Beads at every integer <= floor plus finitely many higher ones.

    Normalized so that floor + 1 is always a gap and the high beads are
    strictly increasing, each at least floor + 2.  Build unnormalized data
    with :meth:`normalized`.
    """

    floor: int
    high_beads: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "high_beads", tuple(self.high_beads))
        beads = self.high_beads
        if any(b <= self.floor + 1 for b in beads):
            raise BeadError(
                f"high beads must lie above the gap at {self.floor + 1}: {beads}"
            )
        if any(x >= y for x, y in zip(beads, beads[1:])):
            raise BeadError(f"high beads must be strictly increasing: {beads}")

    @classmethod
    def normalized(cls, floor: int, beads: Iterable[int]) -> "Abacus":
        """Absorb any run of beads sitting directly on the floor."""
        high = sorted(set(beads))
        if any(b <= floor for b in high):
            raise BeadError(f"beads at or below the floor {floor}: {high}")
        while high and high[0] == floor + 1:
            floor += 1
            high.pop(0)
        return cls(floor, tuple(high))

    @property
    def charge(self) -> int:
        return self.floor + len(self.high_beads)

    def __contains__(self, x: int) -> bool:
        return x <= self.floor or x in self.high_beads

    def min_gap(self) -> int:
        """The leftmost empty position."""
        return self.floor + 1

    def shift(self, k: int) -> "Abacus":
        """Translate every bead by k; the charge moves by k as well."""
        return Abacus(self.floor + k, tuple(b + k for b in self.high_beads))

    def issubset(self, other: "Abacus") -> bool:
        return self.floor <= other.floor and all(
            b in other for b in self.high_beads
        )

    def to_partition(self) -> ChargedPartition:
        """Read off the partition: each high bead contributes the gaps below it."""
        parts = tuple(
            b - self.floor - 1 - idx for idx, b in enumerate(self.high_beads)
        )[::-1]
        return ChargedPartition(parts, self.charge)

    @classmethod
    def from_partition(cls, p: ChargedPartition) -> "Abacus":
        m = len(p.parts)
        beads = [part - k + p.charge + 1 for k, part in enumerate(p.parts, start=1)]
        return cls(p.charge - m, tuple(sorted(beads)))

    def to_json(self) -> str:
        return json.dumps({"floor": self.floor, "high_beads": list(self.high_beads)})

    @classmethod
    def from_json(cls, text: str) -> "Abacus":
        try:
            data = json.loads(text)
            floor = data["floor"]
            beads = data["high_beads"]
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise ParseError(f"not an abacus: {text!r}") from exc
        if not isinstance(floor, int) or not all(isinstance(b, int) for b in beads):
            raise ParseError(f"abacus positions must be integers: {text!r}")
        return cls.normalized(floor, beads)


def is_e_core(a: Abacus, e: int) -> bool:
    """True when every bead can see a bead e steps below it.

    Equivalent to the partition having no rim hook of length e.
    """
    _check_modulus(e)
    return all(b - e in a for b in a.high_beads)


class NodeSignature(NamedTuple):
    has_addable: bool
    has_removable: bool


def addable_removable_signature(a: Abacus, i: int, e: int) -> NodeSignature:
    """Whether the partition of a has an addable and/or removable box of residue i.

    A bead at x with x + 1 empty gives an addable box of residue x mod e; a
    bead at y with y - 1 empty gives a removable box of residue (y - 1) mod e.
    """
    _check_modulus(e)
    i %= e
    addable = (a.floor % e == i and a.floor + 1 not in a) or any(
        b % e == i and b + 1 not in a for b in a.high_beads
    )
    removable = any(
        b % e == (i + 1) % e and b - 1 not in a for b in a.high_beads
    )
    return NodeSignature(addable, removable)


def add_bead(a: Abacus, x: int) -> Abacus:
    """Place a bead at an empty position; the charge grows by 1."""
    if x in a:
        raise BeadError(f"position {x} already holds a bead")
    return Abacus.normalized(a.floor, (*a.high_beads, x))


class BeadMove(NamedTuple):
    result: Abacus
    hook: RimHook
    added: bool


def move_bead(a: Abacus, src: int, dst: int) -> BeadMove:
    """Move the bead at src to the empty position dst.

    The partition changes by a rim hook of length ``abs(dst - src)``: added
    when the bead moves up, removed when it moves down.  The hook is returned
    along with the new abacus.
    """
    if src not in a:
        raise BeadError(f"no bead at {src}")
    if dst in a:
        raise BeadError(f"position {dst} already holds a bead")
    if src <= a.floor:
        lifted = Abacus(src - 1, tuple(range(src + 1, a.floor + 1)) + a.high_beads)
    else:
        lifted = Abacus(a.floor, tuple(b for b in a.high_beads if b != src))
    moved = add_bead(lifted, dst)
    before = a.to_partition()
    after = moved.to_partition()
    added = dst > src
    cells = added_cells(before, after) if added else added_cells(after, before)
    return BeadMove(moved, RimHook.from_cells(cells), added)


def render(a: Abacus) -> str:
    """Two-line picture: position labels above bead ('o') and gap ('.') marks."""
    lo = a.floor - 1
    hi = max((a.floor + 1, *a.high_beads)) + 1
    positions = range(lo, hi + 1)
    width = max(len(str(x)) for x in positions)
    labels = " ".join(str(x).rjust(width) for x in positions)
    marks = " ".join(("o" if x in a else ".").rjust(width) for x in positions)
    return labels + "\n" + marks


if __name__ == "__main__":
    import doctest

    doctest.testmod()
