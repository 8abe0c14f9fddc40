"""Exact arithmetic for Farey sequences and their bounded subsequences.

The package models six families of ascending reduced-fraction sequences
(the full Farey sequence, its numerator-bounded and difference-bounded
subsequences, their intersection, and the two halves of the intersection),
together with closed-form neighbor computation, Moebius-sum counting, and
a catalog of monotone unimodular bijections between the families.
"""

from .fraction import (
    HALF,
    IDENTITY_MAP,
    MIRROR_MAP,
    ONE,
    ZERO,
    DomainError,
    Fraction,
    UnimodularMap,
    adjacency_determinant,
    apply_map,
    compare,
    make_fraction,
    mediant,
    mirror,
    parse_fraction,
)
from .sequences import (
    MAX_ENUM_ORDER,
    SequenceKind,
    SequenceSpec,
    enumerate_sequence,
    generate_boolean,
    generate_sequence,
    halfsequences,
    iterate_f,
    iterate_g,
    member,
)
from .neighbors import (
    NeighborResult,
    boolean_predecessor,
    boolean_special_neighbors,
    boolean_successor,
    f_predecessor,
    f_successor,
    g_next_from_pair,
    g_predecessor,
    g_prev_from_pair,
    g_successor,
    g_unit_fraction_neighbors,
    sequence_neighbors,
)
from .counting import (
    MoebiusTable,
    boolean_cardinality,
    boolean_cardinality_variants,
    central_identity_check,
    f_cardinality,
    f_cardinality_variants,
    full_cardinality,
    g_cardinality,
    g_cardinality_variants,
    g_rank,
    g_rank_variants,
    moebius,
    moebius_floor_square_sum,
    moebius_floor_sum,
    phi_interval,
)
from .maps import (
    Direction,
    MapClass,
    NamedMap,
    VerificationReport,
    apply_named,
    catalog,
    composite_left_identity,
    composite_right_identity,
    get_map,
    verify_map,
)

__version__ = "0.1.0"

__all__ = [
    "HALF",
    "IDENTITY_MAP",
    "MIRROR_MAP",
    "ONE",
    "ZERO",
    "DomainError",
    "Fraction",
    "UnimodularMap",
    "adjacency_determinant",
    "apply_map",
    "compare",
    "make_fraction",
    "mediant",
    "mirror",
    "parse_fraction",
    "MAX_ENUM_ORDER",
    "SequenceKind",
    "SequenceSpec",
    "enumerate_sequence",
    "generate_boolean",
    "generate_sequence",
    "halfsequences",
    "iterate_f",
    "iterate_g",
    "member",
    "NeighborResult",
    "boolean_predecessor",
    "boolean_special_neighbors",
    "boolean_successor",
    "f_predecessor",
    "f_successor",
    "g_next_from_pair",
    "g_predecessor",
    "g_prev_from_pair",
    "g_successor",
    "g_unit_fraction_neighbors",
    "sequence_neighbors",
    "MoebiusTable",
    "boolean_cardinality",
    "boolean_cardinality_variants",
    "central_identity_check",
    "f_cardinality",
    "f_cardinality_variants",
    "full_cardinality",
    "g_cardinality",
    "g_cardinality_variants",
    "g_rank",
    "g_rank_variants",
    "moebius",
    "moebius_floor_square_sum",
    "moebius_floor_sum",
    "phi_interval",
    "Direction",
    "MapClass",
    "NamedMap",
    "VerificationReport",
    "apply_named",
    "catalog",
    "composite_left_identity",
    "composite_right_identity",
    "get_map",
    "verify_map",
]
