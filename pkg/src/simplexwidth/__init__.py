"""Exact width theory for regular simplices.

Closed-form widths, inradii, and circumradii, the optimal direction
families achieving them, an energy monotonicity property, and
independent numerical routes (subgradient descent, dense grids, exact
enumeration) that cross-check the formulas.
"""

from .closed_form import (
    MAX_ORDER,
    ExactScalar,
    SimplexKind,
    alpha_beta,
    alpha_beta_squared,
    center,
    circumdistance_squared,
    circumradius_squared,
    indistance_squared,
    inradius_squared,
    width,
    width_for_t,
    width_squared,
)
from .directions import (
    ENUMERATION_CAP,
    MEMBERSHIP_TOL,
    TwoValueDirection,
    enumerate_optimal_directions,
    is_optimal_direction,
    make_two_value_direction,
    optimal_t,
)
from .energy import (
    ENERGY_REL_TOL,
    EnergyReport,
    center_vector,
    clamp_to_extremes,
    energy_push,
)
from .geometry import (
    SUM_ZERO_TOL,
    UNIT_NORM_TOL,
    DimensionError,
    Direction,
    PointSet,
    PreconditionError,
    Vector,
    distance,
    projection_width,
    regular_simplex_vertices,
    standard_simplex_vertices,
)
from .optimizer import (
    Method,
    OptimizerConfig,
    WidthResult,
    grid_directions,
    grid_width_oracle,
    minimize_width,
    two_value_enumeration_width,
)
from .verification import CheckResult, derive_seed, energy_fuzz, run_all_checks

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "DimensionError",
    "Direction",
    "ENERGY_REL_TOL",
    "ENUMERATION_CAP",
    "EnergyReport",
    "ExactScalar",
    "MAX_ORDER",
    "MEMBERSHIP_TOL",
    "Method",
    "OptimizerConfig",
    "PointSet",
    "PreconditionError",
    "SUM_ZERO_TOL",
    "SimplexKind",
    "TwoValueDirection",
    "UNIT_NORM_TOL",
    "Vector",
    "WidthResult",
    "alpha_beta",
    "alpha_beta_squared",
    "center",
    "center_vector",
    "circumdistance_squared",
    "circumradius_squared",
    "clamp_to_extremes",
    "derive_seed",
    "distance",
    "energy_fuzz",
    "energy_push",
    "enumerate_optimal_directions",
    "grid_directions",
    "grid_width_oracle",
    "indistance_squared",
    "inradius_squared",
    "is_optimal_direction",
    "make_two_value_direction",
    "minimize_width",
    "optimal_t",
    "projection_width",
    "regular_simplex_vertices",
    "standard_simplex_vertices",
    "two_value_enumeration_width",
    "width",
    "width_for_t",
    "width_squared",
]
