"""Exact arithmetic on the Farey graph of the once-punctured torus.

Classifies SL(2,Z) mapping classes, enumerates the h-equivalence classes of
arcs whose image can be made disjoint, validates the results against a
brute-force oracle, and converts the class counts into unknotting-crossing-
change counts for the genus-one knots.
"""

from .core import (
    INFINITY,
    BoundaryPoint,
    FareyEdge,
    FareyTriangle,
    QuadraticIrrational,
    Slope,
    adjacent,
    circular_order,
    compare_boundary,
    enumerate_slopes,
    interleaved,
    intersection_number,
    mediant_neighbors,
)
from .mapclass import (
    Axis,
    Classification,
    EllipticCell,
    FixedEdge,
    FixedTriangle,
    MappingClass,
    ParabolicNormalForm,
    Periodic,
    PseudoAnosov,
    Reducible,
    TrivialAction,
    extend_axis,
)
from .solver import (
    ArcClass,
    ClassBoundReport,
    Provenance,
    SolutionSet,
    check_class_bound,
    h_equivalent,
    is_solution,
    solve,
)
from .oracle import OracleResult, agree, brute_force
from .knots import (
    FigureEight,
    GenusOneKnot,
    NonFibredDoubled,
    Trefoil,
    monodromy,
    parse_knot,
    unknotting_crossing_change_count,
)
from .sweep import random_mapping_classes, run_verification

__version__ = "0.1.0"
