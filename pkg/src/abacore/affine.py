"""Affine permutations in window notation.

An element of the affine symmetric group on e strands is a bijection of the
integers commuting with translation by e; it is pinned down by its window,
the tuple of values on 1..e.  Generators are indexed 0..e-1, with generator 0
the one that wraps around.

>>> w = AffinePermutation(4, (0, 3, 1, 6))
>>> w.length
3
>>> format_word(reduced_word(w))
'1.2.0'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidModulusError, InvalidWindowError, ModulusMismatchError

__all__ = [
    "AffinePermutation",
    "validate_window",
    "identity",
    "from_word",
    "reduced_word",
    "grassmannian_project",
    "format_window",
    "format_word",
]


def validate_window(e: int, entries: Sequence[int]) -> list[str]:
    """Explain everything wrong with a would-be window; empty means valid."""
    problems = []
    if len(entries) != e:
        problems.append(f"expected {e} entries, got {len(entries)}")
        return problems
    total = sum(entries)
    want = e * (e + 1) // 2
    if total != want:
        problems.append(f"entries sum to {total}, expected {want}")
    seen: dict[int, int] = {}
    for v in entries:
        r = v % e
        if r in seen:
            problems.append(
                f"entries {seen[r]} and {v} are congruent mod {e}"
            )
        else:
            seen[r] = v
    return problems


@dataclass(frozen=True)
class AffinePermutation:
    """A window (w(1), ..., w(e)) of an affine permutation on e strands."""

    e: int
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.e, int) or self.e < 2:
            raise InvalidModulusError(
                f"modulus must be an integer >= 2, got {self.e!r}"
            )
        object.__setattr__(self, "window", tuple(self.window))
        problems = validate_window(self.e, self.window)
        if problems:
            raise InvalidWindowError(
                f"bad window {list(self.window)}: " + "; ".join(problems)
            )

    def __call__(self, x: int) -> int:
        q, r = divmod(x - 1, self.e)
        return self.window[r] + q * self.e

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        if self.e != other.e:
            raise ModulusMismatchError(
                f"cannot compose windows on {self.e} and {other.e} strands"
            )
        return AffinePermutation(
            self.e, tuple(self(other(j)) for j in range(1, self.e + 1))
        )

    def inverse(self) -> "AffinePermutation":
        vals = {}
        for p, v in enumerate(self.window, start=1):
            vals[v % self.e] = (p, v)
        window = []
        for j in range(1, self.e + 1):
            p, v = vals[j % self.e]
            window.append(p + (j - v) // self.e * self.e)
        return AffinePermutation(self.e, tuple(window))

    @cached_property
    def length(self) -> int:
        e, win = self.e, self.window
        return sum(
            abs((win[j] - win[i]) // e)
            for i in range(e)
            for j in range(i + 1, e)
        )

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.e + 1))

    def right_descent(self, i: int) -> bool:
        """True when multiplying by generator i on the right drops the length."""
        i %= self.e
        if i == 0:
            return self.window[-1] - self.e > self.window[0]
        return self.window[i - 1] > self.window[i]

    def descents(self) -> list[int]:
        return [i for i in range(self.e) if self.right_descent(i)]

    def right_mult(self, i: int) -> "AffinePermutation":
        """Multiply by generator i on the right: swap window positions i, i+1."""
        i %= self.e
        w = list(self.window)
        if i == 0:
            w[0], w[-1] = self.window[-1] - self.e, self.window[0] + self.e
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePermutation(self.e, tuple(w))

    def left_mult(self, i: int) -> "AffinePermutation":
        """Multiply by generator i on the left: swap the values i, i+1 mod e."""
        i %= self.e
        e = self.e

        def bump(v: int) -> int:
            if v % e == i:
                return v + 1
            if v % e == (i + 1) % e:
                return v - 1
            return v

        return AffinePermutation(e, tuple(bump(v) for v in self.window))

    def is_grassmannian(self, c: int) -> bool:
        """True when w(c+1) < w(c+2) < ... < w(c+e)."""
        vals = [self(c + j) for j in range(1, self.e + 1)]
        return all(x < y for x, y in zip(vals, vals[1:]))

    def __str__(self) -> str:
        return format_window(self.window)


def identity(e: int) -> AffinePermutation:
    return AffinePermutation(e, tuple(range(1, e + 1)))


def from_word(e: int, letters: Iterable[int]) -> AffinePermutation:
    """Evaluate a word in the generators, leftmost letter applied first."""
    w = identity(e)
    for i in letters:
        if not isinstance(i, int) or not 0 <= i < e:
            raise InvalidWindowError(
                f"word letters must lie in 0..{e - 1}, got {i!r}"
            )
        w = w.right_mult(i)
    return w


def reduced_word(w: AffinePermutation) -> tuple[int, ...]:
    """A reduced word for w, built by stripping the smallest right descent."""
    letters = []
    cur = w
    while not cur.is_identity():
        i = min(cur.descents())
        cur = cur.right_mult(i)
        letters.append(i)
    return tuple(reversed(letters))


def grassmannian_project(w: AffinePermutation, c: int) -> AffinePermutation:
    """The shortest element acting like w on the set of values, sorted at charge c.

    Sort the values w(c+1), ..., w(c+e) increasingly and build the window
    placing each back in its residue position.
    """
    e = w.e
    vals = sorted(w(c + j) for j in range(1, e + 1))
    window = [0] * e
    for k, v in enumerate(vals):
        q, r = divmod(c + k, e)  # v becomes the image of c + k + 1
        window[r] = v - q * e
    return AffinePermutation(e, tuple(window))


def format_window(window: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in window) + "]"


def format_word(letters: Sequence[int]) -> str:
    return ".".join(str(i) for i in letters)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
