"""
漸近集中率 (ACR) η = lim (1/n) log(VAR[F] / E[F]^2)

一般形はプロファイル (q, γ) 上の 2 つの sup の差として、ランダム
アンサンブルでは 1 変数の sup 2 つで、指数族係数では閉形式で計算する。
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple, Union

from acr_tool.errors.exceptions import DegenerateProfile, NonpositiveMean, OutOfDomain

from .entropy import check_rate, entropy, find_root
from .extreal import NEG_INF, ExtReal
from .optimizer import maximize, maximize_pair
from .profiles import ExponentProfile

logger = logging.getLogger(__name__)

PhiFunction = Callable[[float], Union[ExtReal, float]]


@dataclass(frozen=True)
class AcrResult:
    """η と、それを構成する指数と到達点"""

    eta: ExtReal
    variance_exponent: ExtReal
    expectation_exponent: ExtReal
    theta_expectation: Optional[float]
    theta_variance: Optional[Tuple[float, float]]
    grid: int
    method: str = "general"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "eta": self.eta,
            "variance_exponent": self.variance_exponent,
            "expectation_exponent": self.expectation_exponent,
            "theta_expectation": self.theta_expectation,
            "theta_variance": (
                list(self.theta_variance) if self.theta_variance else None
            ),
            "grid": self.grid,
        }


def _lift(phi: PhiFunction) -> Callable[[float], ExtReal]:
    """float を返す φ も受け付ける"""

    def lifted(theta: float) -> ExtReal:
        return ExtReal.of(phi(theta))

    return lifted


def acr_general(
    phi: PhiFunction,
    profile: ExponentProfile,
    grid: Optional[int] = None,
    passes: Optional[int] = None,
) -> AcrResult:
    """η = sup sup [φ(θ1) + φ(θ2) + γ(θ1,θ2)] - 2 sup [φ(θ) + H(θ) + q(θ)]

    γ が非対角で -∞ のプロファイルでは 2 重の sup を対角上の 1 変数 sup に縮める。

    Raises:
        DegenerateProfile: 期待値指数が全域で -∞
    """
    phi = _lift(phi)
    expectation = maximize(
        lambda t: phi(t) + entropy(t) + profile.q(t), grid, passes
    )
    if expectation.value.is_neg_inf:
        raise DegenerateProfile()

    diagonal = maximize(lambda t: phi(t) * 2.0 + profile.gamma_diag(t), grid, passes)
    variance_value = diagonal.value
    theta_variance = (
        (diagonal.argmax, diagonal.argmax) if diagonal.argmax is not None else None
    )
    if not profile.diagonal_only:
        off = maximize_pair(
            lambda t1, t2: phi(t1) + phi(t2) + profile.gamma(t1, t2), grid, passes
        )
        if off.value > variance_value:
            variance_value, theta_variance = off.value, off.argmax

    eta = variance_value - expectation.value * 2.0
    logger.debug(f"η({profile.name}) = {eta}")
    return AcrResult(
        eta=eta,
        variance_exponent=variance_value,
        expectation_exponent=expectation.value,
        theta_expectation=expectation.argmax,
        theta_variance=theta_variance,
        grid=expectation.grid,
        method=f"general:{profile.name}",
    )


def acr_random(
    phi: PhiFunction,
    rate: float,
    grid: Optional[int] = None,
    passes: Optional[int] = None,
) -> AcrResult:
    """ランダムアンサンブルの η = sup[2φ + H] - sup[2φ + 2H] + 1 - R"""
    check_rate(rate)
    phi = _lift(phi)
    doubled = maximize(lambda t: phi(t) * 2.0 + 2.0 * entropy(t), grid, passes)
    if doubled.value.is_neg_inf:
        raise DegenerateProfile()
    single = maximize(lambda t: phi(t) * 2.0 + entropy(t), grid, passes)

    offset = 1.0 - rate
    eta = single.value - doubled.value + offset
    variance = single.value - offset
    expectation = doubled.value * 0.5 - offset
    return AcrResult(
        eta=eta,
        variance_exponent=variance,
        expectation_exponent=expectation,
        theta_expectation=doubled.argmax,
        theta_variance=(
            (single.argmax, single.argmax) if single.argmax is not None else None
        ),
        grid=doubled.grid,
        method="random",
    )


def acr_exponential_family(k1: float, k2: float, rate: float) -> float:
    """Φ_w = K1^w K2^{n-w} の η = log((K1^2 + K2^2) / (K1 + K2)^2) + 1 - R"""
    if not k1 > 0:
        raise OutOfDomain("K1", k1, "K1 > 0")
    if not k2 > 0:
        raise OutOfDomain("K2", k2, "K2 > 0")
    check_rate(rate)
    # 比をとってから対数 (スケール不変)
    s = k1 + k2
    ratio = (k1 / s) ** 2 + (k2 / s) ** 2
    return math.log2(ratio) + 1.0 - rate


def _undetected_acr_objective(epsilon: float, rate: float) -> float:
    return math.log2(epsilon**2 + (1.0 - epsilon) ** 2) + 1.0 - rate


def undetected_threshold(rate: float, xtol: Optional[float] = None) -> float:
    """log(ε^2 + (1-ε)^2) + 1 - R = 0 の (0, 1/2) 内の根 ε'

    ε > ε' で検出不能誤り確率の η は負 (平均のまわりに集中する)。
    """
    check_rate(rate)
    return find_root(lambda e: _undetected_acr_objective(e, rate), 0.0, 0.5, xtol)


def undetected_threshold_closed_form(rate: float) -> float:
    """2 次方程式の解 ε' = (1 - √(2^R - 1)) / 2 (照合用)"""
    check_rate(rate)
    return (1.0 - math.sqrt(2.0**rate - 1.0)) / 2.0


def expectation_exponent_random(
    phi: PhiFunction,
    rate: float,
    grid: Optional[int] = None,
    passes: Optional[int] = None,
) -> ExtReal:
    """lim (1/n) log E[F] = sup[φ + H] - (1 - R)"""
    check_rate(rate)
    phi = _lift(phi)
    result = maximize(lambda t: phi(t) + entropy(t), grid, passes)
    if result.value.is_neg_inf:
        return NEG_INF
    return result.value - (1.0 - rate)


def undetected_error_exponent(rate: float) -> float:
    """E[P_U] = 2^{-m}(1 - (1-ε)^n) の誤り指数 -(1/n) log E[P_U] → 1 - R"""
    check_rate(rate)
    return 1.0 - rate


def deviation_exponent_bound(eta: ExtReal) -> ExtReal:
    """Chebyshev 上界から lim (1/n) log Pr[F/E ∉ (1-α, 1+α)] <= η"""
    return ExtReal.of(eta)


def chebyshev_deviation_bound(mean: float, variance: float, alpha: float) -> float:
    """Pr[F/E[F] ∉ (1-α, 1+α)] <= min(1, VAR / (α^2 E^2))

    Raises:
        NonpositiveMean: mean <= 0
        OutOfDomain: variance < 0 または α <= 0
    """
    if not mean > 0:
        raise NonpositiveMean(mean)
    if variance < 0:
        raise OutOfDomain("variance", variance, "variance >= 0")
    if not alpha > 0:
        raise OutOfDomain("α", alpha, "α > 0")
    return min(1.0, variance / (alpha**2 * mean**2))
