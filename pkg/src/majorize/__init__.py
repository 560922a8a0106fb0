"""Majorization order tools for probability distributions.

Canonical sorted distributions, majorization predicates and distance,
extremal l1 perturbations (steepest/flattest) with Lorenz curves,
doubly-stochastic transfer plans, and exact extrema of order-monotone
functionals over l1 balls.
"""

from .config import DEFAULT_TAU, DEFAULT_TAU_NORM, Config
from .distribution import (
    Distribution,
    LorenzCurve,
    check_delta,
    l1_distance,
    lorenz,
    make_distribution,
    point_mass,
    sample_delta_ball,
    sample_majorized_pair,
    uniform,
)
from .errors import (
    AlphaOutOfRangeError,
    BudgetOutOfRangeError,
    DimensionMismatchError,
    EmptyInputError,
    FileFormatError,
    InvalidDeltaError,
    MajorizeError,
    NegativeAlphaError,
    NegativeEntryError,
    NotMajorizedError,
    NotNormalizedError,
    UnknownFunctionError,
    ZeroDimensionError,
    ZeroSumError,
)
from .order import (
    TTransform,
    TransferPlan,
    first_failing_prefix,
    majorization_distance,
    majorizes,
    transfer_plan,
    weakly_majorizes,
)
from .schur import (
    SCHUR_CONCAVE,
    SCHUR_CONVEX,
    SchurFunction,
    brute_force_extremum,
    default_functions,
    direction_violations,
    extremal_point,
    parse_function_spec,
    renyi_entropy,
    shannon,
    smooth_max,
    smooth_min,
    sum_of_powers,
)
from .smoothing import (
    FlattestMeta,
    SmoothedResult,
    SteepestMeta,
    flattest,
    lorenz_flattest,
    lorenz_steepest,
    solve_lower_level,
    solve_upper_level,
    steepest,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRangeError",
    "BudgetOutOfRangeError",
    "Config",
    "DEFAULT_TAU",
    "DEFAULT_TAU_NORM",
    "DimensionMismatchError",
    "Distribution",
    "EmptyInputError",
    "FileFormatError",
    "FlattestMeta",
    "InvalidDeltaError",
    "LorenzCurve",
    "MajorizeError",
    "NegativeAlphaError",
    "NegativeEntryError",
    "NotMajorizedError",
    "NotNormalizedError",
    "SCHUR_CONCAVE",
    "SCHUR_CONVEX",
    "SchurFunction",
    "SmoothedResult",
    "SteepestMeta",
    "TTransform",
    "TransferPlan",
    "UnknownFunctionError",
    "ZeroDimensionError",
    "ZeroSumError",
    "brute_force_extremum",
    "check_delta",
    "default_functions",
    "direction_violations",
    "extremal_point",
    "first_failing_prefix",
    "flattest",
    "l1_distance",
    "lorenz",
    "lorenz_flattest",
    "lorenz_steepest",
    "majorization_distance",
    "majorizes",
    "make_distribution",
    "parse_function_spec",
    "point_mass",
    "renyi_entropy",
    "sample_delta_ball",
    "sample_majorized_pair",
    "shannon",
    "smooth_max",
    "smooth_min",
    "solve_lower_level",
    "solve_upper_level",
    "steepest",
    "sum_of_powers",
    "transfer_plan",
    "uniform",
    "weakly_majorizes",
]
