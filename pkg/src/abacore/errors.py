"""Exception types shared across the package."""

__all__ = [
    "AbacoreError",
    "InvalidModulusError",
    "InvalidWindowError",
    "ModulusMismatchError",
    "NotECoreError",
    "BeadError",
    "GuardExceededError",
    "ParseError",
]


class AbacoreError(Exception):
    """Base class for every error this package raises on bad input."""


class InvalidModulusError(AbacoreError, ValueError):
    """The bead-spacing modulus e was below 2."""


class InvalidWindowError(AbacoreError, ValueError):
    """A window failed one of the defining constraints (length, sum, residues)."""


class ModulusMismatchError(AbacoreError, ValueError):
    """Two objects living over different moduli were combined."""


class NotECoreError(AbacoreError, ValueError):
    """An operation defined only on e-cores received a partition with an e-hook."""


class BeadError(AbacoreError, ValueError):
    """A bead operation hit an occupied position or an empty one, as the case may be."""


class GuardExceededError(AbacoreError, RuntimeError):
    """A configurable size guard (oracle word length, ball element count) was exceeded."""


class ParseError(AbacoreError, ValueError):
    """Malformed textual input (window, word, partition or abacus syntax)."""
