"""Core tuples attached to affine permutations, and the action on cores.

An affine permutation on e strands determines one e-core per charge
0, ..., e-1.  Three routes compute them: directly from the window, by adding
beads one at a time, and by growing rim hooks whose first column is then
stripped.  All three agree; the tests lean on that.

>>> w = AffinePermutation(4, (0, 3, 1, 6))
>>> str(core_tuple(w))
'(2); (1); (1,1); ()'
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import NamedTuple

from .abacus import (
    Abacus,
    NodeSignature,
    add_bead,
    addable_removable_signature,
    is_e_core,
)
from .affine import AffinePermutation
from .errors import BeadError, NotECoreError
from .partitions import (
    ChargedPartition,
    RimHook,
    add_first_column_hook,
    added_cells,
    remove_first_column,
    _check_modulus,
)

__all__ = [
    "core_abacus",
    "core_from_window",
    "act_generator",
    "CoreTuple",
    "core_tuple",
    "core_tuple_inductive",
    "GrassmannianRecovery",
    "core_tuple_grassmannian",
    "RimHookStep",
    "rimhook_steps",
    "core_tuple_rimhook",
    "multicore_act",
    "multicore_signature",
]


def core_abacus(w: AffinePermutation, c: int) -> Abacus:
    """The abacus at charge c: under each window value, a bead every e steps.

    Beads sit at w(c+j) - e, w(c+j) - 2e, ... for each j in 1..e.
    """
    e = w.e
    vals = [w(c + j) for j in range(1, e + 1)]
    lo = min(vals) - e
    beads = []
    for v in vals:
        b = v - e
        while b > lo:
            beads.append(b)
            b -= e
    return Abacus.normalized(lo, beads)


def core_from_window(w: AffinePermutation, c: int) -> ChargedPartition:
    """The charge-c e-core of w, read off its abacus."""
    return core_abacus(w, c).to_partition()


def _generator_image(i: int, x: int, e: int) -> int:
    r = x % e
    if r == i:
        return x + 1
    if r == (i + 1) % e:
        return x - 1
    return x


def _act_abacus(a: Abacus, i: int, e: int) -> Abacus:
    """Left action of generator i on a bead configuration.

    Membership transports along the involution x <-> x+1 on the residue pair,
    so the new set holds a bead at x exactly when the old one does at the
    image of x.
    """
    lo = a.floor - 1
    hi = max((a.floor + 1, *a.high_beads)) + 1
    beads = [
        x for x in range(lo, hi + 1) if _generator_image(i, x, e) in a
    ]
    return Abacus.normalized(lo - 1, beads)


def act_generator(p: ChargedPartition, i: int, e: int) -> ChargedPartition:
    """Generator i acting on an e-core: toggle every box of residue i at once."""
    _check_modulus(e)
    i %= e
    a = Abacus.from_partition(p)
    if not is_e_core(a, e):
        raise NotECoreError(
            f"the action is only defined on {e}-cores; "
            f"{p} (charge {p.charge}) has an {e}-hook"
        )
    return _act_abacus(a, i, e).to_partition()


@dataclass(frozen=True)
class CoreTuple:
    """One e-core per charge 0..e-1, nested bead-wise with period-e wraparound."""

    e: int
    cores: tuple[ChargedPartition, ...]

    def __post_init__(self) -> None:
        _check_modulus(self.e)
        object.__setattr__(self, "cores", tuple(self.cores))
        if len(self.cores) != self.e:
            raise ValueError(
                f"expected {self.e} cores, got {len(self.cores)}"
            )
        for c, p in enumerate(self.cores):
            if p.charge != c:
                raise ValueError(
                    f"component {c} must have charge {c}, got {p.charge}"
                )
        abaci = [Abacus.from_partition(p) for p in self.cores]
        for c, a in enumerate(abaci):
            if not is_e_core(a, self.e):
                raise NotECoreError(
                    f"component {c} is not an {self.e}-core: {self.cores[c]}"
                )
        for c in range(self.e - 1):
            if not abaci[c].issubset(abaci[c + 1]):
                raise ValueError(
                    f"bead sets not nested between charges {c} and {c + 1}"
                )
        if not abaci[-1].issubset(abaci[0].shift(self.e)):
            raise ValueError(
                f"bead sets not nested between charge {self.e - 1} and the "
                f"shifted charge-0 set"
            )

    def __str__(self) -> str:
        return "; ".join(str(p) for p in self.cores)


def core_tuple(w: AffinePermutation) -> CoreTuple:
    """All e cores of w, each read from its own abacus."""
    return CoreTuple(
        w.e, tuple(core_from_window(w, c) for c in range(w.e))
    )


def core_tuple_inductive(w: AffinePermutation) -> CoreTuple:
    """All e cores of w, built by dropping one bead at a time.

    The charge-(c+1) abacus is the charge-c abacus plus a bead at w(c+1).
    """
    abaci = [core_abacus(w, 0)]
    for c in range(1, w.e):
        abaci.append(add_bead(abaci[-1], w(c)))
    return CoreTuple(w.e, tuple(a.to_partition() for a in abaci))


class GrassmannianRecovery(NamedTuple):
    cores: CoreTuple
    element: AffinePermutation
    residues: tuple[int, ...]


def core_tuple_grassmannian(a0: Abacus, e: int) -> GrassmannianRecovery:
    """Rebuild the sorted-window element from its charge-0 core.

    Each window value in turn is the smallest gap whose residue class has not
    been used yet; the last one follows from the window sum instead.  Returns
    the full core tuple, the recovered element and the residues of the added
    beads.
    """
    _check_modulus(e)
    if a0.charge != 0:
        raise BeadError(
            f"recovery starts from a charge-0 abacus, got charge {a0.charge}"
        )
    if not is_e_core(a0, e):
        raise NotECoreError(f"recovery needs an {e}-core abacus")
    abaci = [a0]
    window = []
    residues = []
    used: set[int] = set()
    for _ in range(e - 1):
        cur = abaci[-1]
        for x in count(cur.min_gap()):
            if x not in cur and x % e not in used:
                break
        used.add(x % e)
        window.append(x)
        residues.append(x % e)
        abaci.append(add_bead(cur, x))
    window.append(e * (e + 1) // 2 - sum(window))
    element = AffinePermutation(e, tuple(window))
    cores = CoreTuple(e, tuple(a.to_partition() for a in abaci))
    return GrassmannianRecovery(cores, element, tuple(residues))


@dataclass(frozen=True)
class RimHookStep:
    """One step of the hook route: grow a rim hook, then strip the first column."""

    target_charge: int
    hand_residue: int
    before: ChargedPartition
    enlarged: ChargedPartition
    hook: RimHook
    after: ChargedPartition


def rimhook_steps(w: AffinePermutation) -> tuple[RimHookStep, ...]:
    """The e - 1 hook-and-strip steps taking the charge-0 core to charge e-1.

    Step c adds the first-column rim hook whose hand residue is
    (w(c) - 1) mod e, then strips the first column.
    """
    e = w.e
    steps = []
    cur = core_from_window(w, 0)
    for c in range(1, e):
        hand = (w(c) - 1) % e
        enlarged = add_first_column_hook(cur, hand, e)
        hook = RimHook.from_cells(added_cells(cur, enlarged))
        after = remove_first_column(enlarged)
        steps.append(
            RimHookStep(c, hand, cur, enlarged, hook, after)
        )
        cur = after
    return tuple(steps)


def core_tuple_rimhook(w: AffinePermutation) -> CoreTuple:
    """All e cores of w, built by the hook-and-strip route."""
    steps = rimhook_steps(w)
    cores = (steps[0].before, *(s.after for s in steps)) if steps else ()
    return CoreTuple(w.e, cores)


def multicore_act(t: CoreTuple, i: int) -> CoreTuple:
    """Generator i acting on every component at once."""
    return CoreTuple(
        t.e, tuple(act_generator(p, i, t.e) for p in t.cores)
    )


def multicore_signature(t: CoreTuple, i: int) -> NodeSignature:
    """Whether any component has an addable or removable box of residue i."""
    sigs = [
        addable_removable_signature(Abacus.from_partition(p), i, t.e)
        for p in t.cores
    ]
    return NodeSignature(
        any(s.has_addable for s in sigs),
        any(s.has_removable for s in sigs),
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
