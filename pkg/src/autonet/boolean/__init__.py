"""Structure theory of globally commutative Boolean networks."""

from .arrangement import (
    Arrangement,
    ArrangementError,
    DimensionReport,
    SetDimensions,
    classify_set_dimensions,
    dimension_report,
    is_arrangement_content,
    maximal_subcubes,
    validate_arrangement,
)
from .classify import ClassificationReport, ComponentVerdict, UnsupportedAlphabet, classify
from .counting import enumerate_bijective_cs, enumerate_cube_partitions, iter_cube_partitions, negation_on_partition
from .lifts import LiftError, lift_q3, lift_q4
from .networks import (
    FREE_CHOICES,
    ArrangementNetworkSpec,
    UnionError,
    build_arrangement_network,
    random_globally_commutative,
    reachable_region,
    union_networks,
)
from .subcube import Subcube, contains, interval, intersect, member

__all__ = [
    "Arrangement",
    "ArrangementError",
    "ArrangementNetworkSpec",
    "ClassificationReport",
    "ComponentVerdict",
    "DimensionReport",
    "FREE_CHOICES",
    "LiftError",
    "SetDimensions",
    "Subcube",
    "UnionError",
    "UnsupportedAlphabet",
    "build_arrangement_network",
    "classify",
    "classify_set_dimensions",
    "contains",
    "dimension_report",
    "enumerate_bijective_cs",
    "enumerate_cube_partitions",
    "interval",
    "intersect",
    "is_arrangement_content",
    "iter_cube_partitions",
    "lift_q3",
    "lift_q4",
    "maximal_subcubes",
    "member",
    "negation_on_partition",
    "random_globally_commutative",
    "reachable_region",
    "union_networks",
    "validate_arrangement",
]
