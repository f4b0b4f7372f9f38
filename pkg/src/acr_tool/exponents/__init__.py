"""
漸近指数・集中率・誤り指数
"""

from .acr import (
    AcrResult,
    PhiFunction,
    acr_exponential_family,
    acr_general,
    acr_random,
    chebyshev_deviation_bound,
    deviation_exponent_bound,
    expectation_exponent_random,
    undetected_error_exponent,
    undetected_threshold,
    undetected_threshold_closed_form,
)
from .bhattacharyya import (
    bhattacharyya_acr,
    bhattacharyya_acr_stated,
    bhattacharyya_error_exponent,
    bhattacharyya_parameter,
    critical_crossover,
    expurgated_acr,
    expurgated_error_exponent,
    expurgated_error_exponent_grid,
    theta_crit,
)
from .entropy import (
    binary_entropy,
    find_root,
    gv_distance,
    weight_distribution_acr,
    weight_exponent,
)
from .extreal import NEG_INF, ZERO, ExtReal, ext_max
from .optimizer import (
    PairSupResult,
    SupResult,
    golden_section_max,
    grid_points,
    maximize,
    maximize_pair,
)
from .profiles import ExponentProfile, expurgated_profile, random_profile

__all__ = [
    "AcrResult",
    "ExponentProfile",
    "ExtReal",
    "NEG_INF",
    "PairSupResult",
    "PhiFunction",
    "SupResult",
    "ZERO",
    "acr_exponential_family",
    "acr_general",
    "acr_random",
    "bhattacharyya_acr",
    "bhattacharyya_acr_stated",
    "bhattacharyya_error_exponent",
    "bhattacharyya_parameter",
    "binary_entropy",
    "chebyshev_deviation_bound",
    "critical_crossover",
    "deviation_exponent_bound",
    "expectation_exponent_random",
    "expurgated_acr",
    "expurgated_error_exponent",
    "expurgated_error_exponent_grid",
    "expurgated_profile",
    "ext_max",
    "find_root",
    "golden_section_max",
    "grid_points",
    "gv_distance",
    "maximize",
    "maximize_pair",
    "random_profile",
    "theta_crit",
    "undetected_error_exponent",
    "undetected_threshold",
    "undetected_threshold_closed_form",
    "weight_distribution_acr",
    "weight_exponent",
]
