"""
重み分布の線形結合 F(H) = Σ Φ_w A_w(H)
"""

from .models import FunctionalFamily, LinearFunctional
from .evaluation import (
    concentration_ratio_exponent,
    evaluate,
    exact_expectation,
    exact_variance,
    expectation_by_sum,
    expectation_exponent_finite,
    log2_exact_expectation,
    log2_exact_variance,
    phi_exponent,
    phi_function,
    variance_by_sum,
)
from .parser import FunctionalSpec, parse_functional_spec, read_coefficients

__all__ = [
    "FunctionalFamily",
    "FunctionalSpec",
    "LinearFunctional",
    "concentration_ratio_exponent",
    "evaluate",
    "exact_expectation",
    "exact_variance",
    "expectation_by_sum",
    "expectation_exponent_finite",
    "log2_exact_expectation",
    "log2_exact_variance",
    "parse_functional_spec",
    "phi_exponent",
    "phi_function",
    "read_coefficients",
    "variance_by_sum",
]
