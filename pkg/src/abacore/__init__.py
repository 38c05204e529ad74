"""Affine permutations, abacus displays and core partitions.

The pieces: window notation for the affine symmetric group, charged
partitions with their residues and rim hooks, single-runner abaci, the tuple
of cores attached to each group element by three agreeing constructions, and
the Bruhat order computed by core containment with a subword oracle to check
it against.
"""

from .abacus import Abacus, render
from .affine import (
    AffinePermutation,
    format_window,
    format_word,
    from_word,
    grassmannian_project,
    identity,
    reduced_word,
)
from .bruhat import (
    PosetBall,
    Relation,
    bruhat_compare,
    build_ball,
    check_lattice_isomorphism,
    grassmannian_compare,
    hasse_dot,
    subword_oracle,
)
from .cores import (
    CoreTuple,
    act_generator,
    core_abacus,
    core_from_window,
    core_tuple,
    core_tuple_grassmannian,
    core_tuple_inductive,
    core_tuple_rimhook,
    rimhook_steps,
)
from .errors import AbacoreError
from .partitions import (
    ChargedPartition,
    Node,
    RimHook,
    is_core,
    residue,
    toggle_residue,
    young_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "Abacus",
    "AbacoreError",
    "AffinePermutation",
    "ChargedPartition",
    "CoreTuple",
    "Node",
    "PosetBall",
    "Relation",
    "RimHook",
    "act_generator",
    "bruhat_compare",
    "build_ball",
    "check_lattice_isomorphism",
    "core_abacus",
    "core_from_window",
    "core_tuple",
    "core_tuple_grassmannian",
    "core_tuple_inductive",
    "core_tuple_rimhook",
    "format_window",
    "format_word",
    "from_word",
    "grassmannian_compare",
    "grassmannian_project",
    "hasse_dot",
    "identity",
    "is_core",
    "reduced_word",
    "render",
    "residue",
    "rimhook_steps",
    "subword_oracle",
    "toggle_residue",
    "young_diagram",
]
