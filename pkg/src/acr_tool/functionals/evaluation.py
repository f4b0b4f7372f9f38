"""
線形汎関数の評価と R_{n,m} 上の厳密モーメント

指数族 K1^w K2^{n-w} は閉形式を対数領域で計算する。w = 0 の項は含めない
ため、閉形式から K2^n (分散では K2^{2n}) の項を差し引く。差し引いた後の
因子 1 - (1 + r)^{-n} (r = K1/K2 または その 2 乗) は log1p / expm1 で求め、
桁落ちを避ける。
"""

import logging
import math
from typing import Callable

from acr_tool.ensemble.models import EnsembleParams
from acr_tool.errors.exceptions import (
    LengthMismatch,
    NoAsymptoticForm,
    NonpositiveMean,
    OutOfDomain,
)
from acr_tool.exponents.extreal import NEG_INF, ExtReal
from acr_tool.gf2core.models import WeightDistribution

from .models import LinearFunctional

logger = logging.getLogger(__name__)

_LN2 = math.log(2.0)
# 2^d がアンダーフローする境界
_UNDERFLOW_LOG2 = -1000.0


def _check_length(f: LinearFunctional, params: EnsembleParams) -> None:
    if f.n != params.n:
        raise LengthMismatch(params.n, f.n, what="符号長")


def _ln_one_plus_pow2(d: float) -> float:
    """ln(1 + 2^d)"""
    if d > 0:
        return d * _LN2 + math.log1p(2.0**-d)
    return math.log1p(2.0**d)


def _log2_tail_factor(n: int, d: float) -> float:
    """log2(1 - (1 + 2^d)^{-n})"""
    if d < _UNDERFLOW_LOG2:
        # 1 - (1 + t)^{-n} ≈ n t
        return math.log2(n) + d
    return math.log(-math.expm1(-n * _ln_one_plus_pow2(d))) / _LN2


def _log2_one_minus_pow2(x: float) -> float:
    """log2(1 - 2^x) (x < 0)"""
    return math.log(-math.expm1(x * _LN2)) / _LN2


def _pow2(value: ExtReal) -> float:
    """2^value (上限を超えれば inf)"""
    if value.is_neg_inf:
        return 0.0
    try:
        return 2.0**value.finite
    except OverflowError:
        return math.inf


def _scaled_binomial(n: int, w: int, m: int) -> float:
    """C(n,w) 2^{-m} (整数の真の除算で丸めは 1 回)"""
    try:
        return math.comb(n, w) / 2**m
    except OverflowError:
        return math.inf


def evaluate(f: LinearFunctional, wd: WeightDistribution) -> float:
    """F(H) = Σ_{w=1}^{n} Φ_w A_w(H)

    Raises:
        LengthMismatch: f.n != wd.n
    """
    return f.evaluate(wd)


def expectation_by_sum(f: LinearFunctional, params: EnsembleParams) -> float:
    """E[F] = Σ Φ_w C(n,w) 2^{-m}"""
    _check_length(f, params)
    n, m = params.n, params.m
    return math.fsum(
        phi * _scaled_binomial(n, w, m)
        for w, phi in enumerate(f.coefficient_vector(), start=1)
        if phi
    )


def variance_by_sum(f: LinearFunctional, params: EnsembleParams) -> float:
    """VAR[F] = Σ Φ_w^2 (1 - 2^{-m}) 2^{-m} C(n,w) (非対角の共分散は 0)"""
    _check_length(f, params)
    n, m = params.n, params.m
    keep = -math.expm1(-m * _LN2)
    return math.fsum(
        phi**2 * keep * _scaled_binomial(n, w, m)
        for w, phi in enumerate(f.coefficient_vector(), start=1)
        if phi
    )


def log2_exact_expectation(f: LinearFunctional, params: EnsembleParams) -> ExtReal:
    """log2 E[F]

    指数族: -m + n log2(K1 + K2) + log2(1 - (1 + K1/K2)^{-n})
    """
    _check_length(f, params)
    if not f.is_exponential:
        value = expectation_by_sum(f, params)
        if value <= 0:
            return NEG_INF
        return ExtReal(math.log2(value))
    n, m = params.n, params.m
    d = f.log2_k1 - f.log2_k2
    log_sum = f.log2_k2 + _ln_one_plus_pow2(d) / _LN2
    return ExtReal(-m + n * log_sum + _log2_tail_factor(n, d))


def log2_exact_variance(f: LinearFunctional, params: EnsembleParams) -> ExtReal:
    """log2 VAR[F]

    指数族: log2(1 - 2^{-m}) - m + n log2(K1^2 + K2^2)
            + log2(1 - (1 + (K1/K2)^2)^{-n})
    """
    _check_length(f, params)
    if not f.is_exponential:
        value = variance_by_sum(f, params)
        if value <= 0:
            return NEG_INF
        return ExtReal(math.log2(value))
    n, m = params.n, params.m
    d = 2.0 * (f.log2_k1 - f.log2_k2)
    log_square_sum = 2.0 * f.log2_k2 + _ln_one_plus_pow2(d) / _LN2
    return ExtReal(
        _log2_one_minus_pow2(-m) - m + n * log_square_sum + _log2_tail_factor(n, d)
    )


def exact_expectation(f: LinearFunctional, params: EnsembleParams) -> float:
    """E_{R_{n,m}}[F] (double の範囲を超えれば inf)"""
    if not f.is_exponential:
        return expectation_by_sum(f, params)
    return _pow2(log2_exact_expectation(f, params))


def exact_variance(f: LinearFunctional, params: EnsembleParams) -> float:
    """VAR_{R_{n,m}}[F] (double の範囲を超えれば inf)"""
    if not f.is_exponential:
        return variance_by_sum(f, params)
    return _pow2(log2_exact_variance(f, params))


def concentration_ratio_exponent(
    f: LinearFunctional, params: EnsembleParams
) -> ExtReal:
    """有限 n での (1/n) log2(VAR / E^2)"""
    log_mean = log2_exact_expectation(f, params)
    if log_mean.is_neg_inf:
        raise NonpositiveMean(exact_expectation(f, params))
    log_var = log2_exact_variance(f, params)
    if log_var.is_neg_inf:
        return NEG_INF
    return (log_var - log_mean * 2.0) / params.n


def expectation_exponent_finite(f: LinearFunctional, params: EnsembleParams) -> ExtReal:
    """有限 n での (1/n) log2 E[F]"""
    return log2_exact_expectation(f, params) / params.n


def phi_exponent(f: LinearFunctional, theta: float) -> ExtReal:
    """φ(θ) = lim (1/n) log Φ_{θn} = θ log K1 + (1-θ) log K2

    Raises:
        NoAsymptoticForm: 明示的な係数ベクトル
        OutOfDomain: θ が (0, 1] の外
    """
    if not 0.0 < theta <= 1.0:
        raise OutOfDomain("θ", theta, "0 < θ <= 1")
    if not f.is_exponential:
        raise NoAsymptoticForm(f.family.value)
    return ExtReal(theta * f.log2_k1 + (1.0 - theta) * f.log2_k2)


def phi_function(f: LinearFunctional) -> Callable[[float], ExtReal]:
    """ACR 計算に渡す θ -> φ(θ)"""
    if not f.is_exponential:
        raise NoAsymptoticForm(f.family.value)
    return lambda theta: phi_exponent(f, theta)
