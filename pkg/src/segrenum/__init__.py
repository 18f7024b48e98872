"""Exact local intersection invariants over Q.

Segre numbers, polar multiplicities, Vogel cycles, proper intersections and
Tworzewski products of algebraic cycles, computed symbolically from ideal
generators.  All arithmetic is exact rational; randomized choices (Vogel
sequences, shears) are seeded and certified, so every reported number is
reproducible bit for bit.
"""

from .cycles import (
    CycleRep,
    ExtendedIndex,
    PointPartReport,
    ProperIntersection,
    circ_index,
    cycle_local_mult,
    divisor_cut,
    implicitize,
    proper_intersect,
    restricted_point_part,
    tworzewski_index,
    tworzewski_point_part,
)
from .errors import (
    GenericityError,
    ImproperIntersectionError,
    InputError,
    SegrenumError,
    UnresolvedMovingSupportError,
)
from .groebner import HilbertData, Ideal, normal_form
from .localmult import colength, local_dim_mult, tangent_cone
from .orders import GREVLEX, GRLEX, LEX, LOCAL, MonomialOrder, block_order
from .problem import Problem, load_problem
from .ring import AffinePoint, Polynomial, Ring
from .vogel import (
    MultResult,
    VogelRun,
    VogelSequence,
    fixed_support,
    point_part,
    polar_at,
    random_vogel_sequence,
    run_trials,
    segre_at,
    verify_vogel_condition,
    vogel_run,
)

__version__ = "0.1.0"

__all__ = [
    "AffinePoint",
    "CycleRep",
    "ExtendedIndex",
    "GenericityError",
    "GREVLEX",
    "GRLEX",
    "HilbertData",
    "Ideal",
    "ImproperIntersectionError",
    "InputError",
    "LEX",
    "LOCAL",
    "MonomialOrder",
    "MultResult",
    "PointPartReport",
    "Polynomial",
    "Problem",
    "ProperIntersection",
    "Ring",
    "SegrenumError",
    "UnresolvedMovingSupportError",
    "VogelRun",
    "VogelSequence",
    "block_order",
    "circ_index",
    "colength",
    "cycle_local_mult",
    "divisor_cut",
    "fixed_support",
    "implicitize",
    "load_problem",
    "local_dim_mult",
    "normal_form",
    "point_part",
    "polar_at",
    "proper_intersect",
    "random_vogel_sequence",
    "restricted_point_part",
    "run_trials",
    "segre_at",
    "tangent_cone",
    "tworzewski_index",
    "tworzewski_point_part",
    "verify_vogel_condition",
    "vogel_run",
    "__version__",
]
