"""Fuzzy covering rough sets with exact rational grades.

Everything here works on `fractions.Fraction` grades parsed from decimal
text, so approximations, reductions, and compressions reproduce worked
results digit for digit. See the README for the file format and CLI.
"""

from .approximation import (
    ApproxPair,
    RoughnessReport,
    approximate,
    lower_approx,
    neighborhood_union,
    roughness,
    roughness_ab,
    roughness_report,
    subcovering_bound,
    upper_approx,
)
from .covering import (
    CoveringFamily,
    FuzzyCovering,
    covering_equal,
    covering_intersection,
    covering_union,
    induced_covering,
    induced_family_covering,
    intersection_core,
    is_coarser,
    is_intersectional,
    is_reducible,
    make_covering,
    minimal_subcoverings,
    reduce_covering,
    subcoverings,
)
from .document import SystemDocument, parse_document, serialize_document
from .errors import FuzzyCoverError
from .infosys import (
    CompressionResult,
    PartitionTable,
    ReductReport,
    add_covering,
    build_homomorphism,
    covering_partition,
    family_intersection,
    family_partition,
    profile_partition,
    reduct_report,
    remove_covering,
)
from .mapping import (
    Partition,
    PointMapping,
    image_covering,
    image_set,
    is_consistent,
    kernel_partition,
    preimage_covering,
    preimage_set,
)
from .relations import (
    FuzzyRelation,
    NeighborhoodRelation,
    RelationChecks,
    covering_from_relation,
    relation_checks,
    relation_from_neighborhoods,
)
from .sets import (
    DEFAULT_GRID,
    FuzzySet,
    Universe,
    format_grade,
    make_fuzzy_set,
    parse_grade,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxPair",
    "CompressionResult",
    "CoveringFamily",
    "DEFAULT_GRID",
    "FuzzyCoverError",
    "FuzzyCovering",
    "FuzzyRelation",
    "FuzzySet",
    "NeighborhoodRelation",
    "Partition",
    "PartitionTable",
    "PointMapping",
    "ReductReport",
    "RelationChecks",
    "RoughnessReport",
    "SystemDocument",
    "Universe",
    "add_covering",
    "approximate",
    "build_homomorphism",
    "covering_equal",
    "covering_from_relation",
    "covering_intersection",
    "covering_partition",
    "covering_union",
    "family_intersection",
    "family_partition",
    "format_grade",
    "image_covering",
    "image_set",
    "induced_covering",
    "induced_family_covering",
    "intersection_core",
    "is_coarser",
    "is_consistent",
    "is_intersectional",
    "is_reducible",
    "kernel_partition",
    "lower_approx",
    "make_covering",
    "make_fuzzy_set",
    "minimal_subcoverings",
    "neighborhood_union",
    "parse_document",
    "parse_grade",
    "preimage_covering",
    "preimage_set",
    "profile_partition",
    "reduce_covering",
    "reduct_report",
    "relation_checks",
    "relation_from_neighborhoods",
    "remove_covering",
    "roughness",
    "roughness_ab",
    "roughness_report",
    "serialize_document",
    "subcovering_bound",
    "subcoverings",
    "upper_approx",
]
