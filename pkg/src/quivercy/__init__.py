"""Path coalgebras of quivers with relations, over exact rationals.

Quivers and paths, path-(co)algebra arithmetic with the Kronecker
pairing, minimal relation sets, injective resolution fragments of the
simple comodules, Ext dimension tables, and Calabi-Yau
necessary-condition checks in dimensions 0 through 3.
"""

from .algebra import (
    DegreeProfile,
    PathVector,
    QuiverMismatchError,
    iota_left_action,
    iota_right_action,
    left_quotient,
    multiply,
    pair,
    right_quotient,
)
from .cy import (
    Condition,
    CyReport,
    Superpotential,
    check_component_sum,
    check_cy,
    check_cy0,
    check_cy1,
    check_cy2,
    check_cy3,
    cyclic_derivative,
    derive_relations,
)
from .parser import InputDocument, ParseError, parse
from .quiver import Arrow, Path, PathError, Quiver, QuiverError, validate_quiver
from .relations import (
    ApproximateModeError,
    IdealTruncation,
    InhomogeneousRelationsError,
    NonMinimalRelationsError,
    Relation,
    RelationError,
    RelationSet,
    TruncationBoundError,
    ideal_truncation,
    lead,
    locally_finite_check,
    minimal_relations,
)
from .resolution import (
    ComplexCheck,
    ExactnessCheck,
    ExtTable,
    HomProfile,
    ResolutionFragment,
    build_resolution_fragment,
    build_right_fragment,
    ext_dims,
    hom_injectives,
    verify_complex,
    verify_exactness_middle,
)

__version__ = "0.1.0"
