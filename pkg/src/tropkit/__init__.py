"""tropkit: max-plus linear algebra, tropical polytopes, and fixed points.

The scalar semiring is (R, max, +) with a distinguished bottom element.
On top of it sit finite-dimensional vectors with the uniform (sup-norm)
metric, tropical polytopes with an order-theoretic retraction, a
fixed-point solver that certifies its answers, and the max-plus
eigenproblem solved through the maximum cycle mean and the Kleene star.
"""

from .convex import (
    DEFAULT_TOL,
    TropicalPolytope,
    clamped_residual,
    membership,
    reduce_generators,
    residual,
    retract,
    sup_subset,
)
from .eigen import eigenpair, kleene_star, max_cycle_mean
from .errors import (
    BottomNotInvertible,
    BottomScaling,
    CoefficientsNotNormalized,
    DimensionMismatch,
    EmptyCombination,
    EmptySublevel,
    NoCycle,
    NotAMember,
    ProblemTooLarge,
    RadiusNotAboveUnit,
    TropicalError,
)
from .fixpoint import (
    CONVERGED,
    CYCLE_DETECTED,
    MAX_ITERATIONS,
    FixpointReport,
    find_fixpoint,
    functional_fixpoint,
    functional_image,
    image_polytope,
    sublevel_point,
)
from .maps import (
    Const,
    Coord,
    CoordinateMap,
    ExprParseError,
    Max,
    Min,
    Shift,
    TropicalLinear,
    constant_map,
    eval_map,
    identity_map,
    parse_coordinate_expr,
    parse_coordinate_map,
)
from .semiring import BOTTOM, UNIT, Scalar, inv, is_bottom, leq, oplus, otimes
from .space import (
    Functional,
    Vector,
    apply_functional,
    arctan_distance,
    as_functional,
    as_vector,
    convex_combination,
    coordinate_functionals,
    in_ball,
    scalar_mul,
    strictly_dominates,
    uniform_distance,
    vec_oplus,
)

__version__ = "0.1.0"

__all__ = [
    "BOTTOM",
    "UNIT",
    "Scalar",
    "Vector",
    "Functional",
    "TropicalPolytope",
    "TropicalLinear",
    "CoordinateMap",
    "FixpointReport",
    "oplus",
    "otimes",
    "inv",
    "leq",
    "is_bottom",
    "vec_oplus",
    "scalar_mul",
    "uniform_distance",
    "arctan_distance",
    "strictly_dominates",
    "in_ball",
    "convex_combination",
    "apply_functional",
    "coordinate_functionals",
    "as_vector",
    "as_functional",
    "residual",
    "clamped_residual",
    "membership",
    "sup_subset",
    "retract",
    "reduce_generators",
    "eval_map",
    "identity_map",
    "constant_map",
    "parse_coordinate_expr",
    "parse_coordinate_map",
    "ExprParseError",
    "Coord",
    "Const",
    "Shift",
    "Max",
    "Min",
    "functional_image",
    "image_polytope",
    "sublevel_point",
    "find_fixpoint",
    "functional_fixpoint",
    "CONVERGED",
    "CYCLE_DETECTED",
    "MAX_ITERATIONS",
    "max_cycle_mean",
    "kleene_star",
    "eigenpair",
    "TropicalError",
    "DimensionMismatch",
    "BottomNotInvertible",
    "BottomScaling",
    "RadiusNotAboveUnit",
    "CoefficientsNotNormalized",
    "EmptyCombination",
    "NotAMember",
    "EmptySublevel",
    "NoCycle",
    "ProblemTooLarge",
    "DEFAULT_TOL",
]
