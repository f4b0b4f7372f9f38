"""
BSC 上の Bhattacharyya 上界と削減アンサンブルの誤り指数

B(H) = Σ A_w(H) D^w, D = 2√(ε(1-ε))。
"""

import logging
import math
from typing import Optional

from acr_tool.errors.exceptions import OutOfDomain

from .acr import acr_general
from .entropy import check_rate, entropy, find_root, gv_distance
from .extreal import ExtReal
from .optimizer import maximize
from .profiles import expurgated_profile

logger = logging.getLogger(__name__)


def _parameter(epsilon: float) -> float:
    return 2.0 * math.sqrt(epsilon * (1.0 - epsilon))


def _critical(epsilon: float) -> float:
    d = _parameter(epsilon)
    return d / (1.0 + d)


def bhattacharyya_parameter(epsilon: float) -> float:
    """D = 2√(ε(1-ε)) ∈ [0, 1]"""
    if not 0.0 <= epsilon <= 1.0:
        raise OutOfDomain("ε", epsilon, "0 <= ε <= 1")
    return _parameter(epsilon)


def bhattacharyya_error_exponent(rate: float, epsilon: float) -> float:
    """-(1/n) log E[B] の極限 1 - R - log(D + 1)

    ε = 0 (D = 0) と ε = 1/2 (D = 1) の端点も受け付ける。
    """
    check_rate(rate)
    if not 0.0 <= epsilon <= 0.5:
        raise OutOfDomain("ε", epsilon, "0 <= ε <= 1/2")
    return 1.0 - rate - math.log2(_parameter(epsilon) + 1.0)


def bhattacharyya_acr(rate: float, epsilon: float) -> float:
    """B(H) の η = log((D^2 + 1) / (D + 1)^2) + 1 - R

    命題の式の分子 4ε(ε-1)+1 ではなく、導出どおり D^2 + 1 = 4ε(1-ε) + 1 を用いる。
    """
    check_rate(rate)
    if not 0.0 <= epsilon <= 1.0:
        raise OutOfDomain("ε", epsilon, "0 <= ε <= 1")
    d = _parameter(epsilon)
    return math.log2((d * d + 1.0) / (d + 1.0) ** 2) + 1.0 - rate


def bhattacharyya_acr_stated(rate: float, epsilon: float) -> float:
    """命題に印字された分子 4ε(ε-1)+1 = (1-2ε)^2 による値 (比較用)"""
    check_rate(rate)
    if not 0.0 < epsilon < 1.0:
        raise OutOfDomain("ε", epsilon, "0 < ε < 1")
    numerator = 4.0 * epsilon * (epsilon - 1.0) + 1.0
    return math.log2(numerator / (_parameter(epsilon) + 1.0) ** 2) + 1.0 - rate


def theta_crit(epsilon: float) -> float:
    """θ_crit = D / (1 + D) ∈ (0, 1/2]"""
    if not 0.0 < epsilon < 1.0:
        raise OutOfDomain("ε", epsilon, "0 < ε < 1")
    return _critical(epsilon)


def _check_expurgated(rate: float, epsilon: float) -> None:
    check_rate(rate)
    if not 0.0 < epsilon <= 0.5:
        raise OutOfDomain("ε", epsilon, "0 < ε <= 1/2")


def expurgated_error_exponent(rate: float, epsilon: float) -> float:
    """削減アンサンブルの誤り指数

    min_{θ_GV <= θ <= 1-θ_GV} {1 - R - H(θ) - θ log D}。θ_crit >= θ_GV では
    無制約の指数 1 - R - log(D + 1) と一致し、θ_crit < θ_GV では端点
    θ_GV で -θ_GV log D となる。
    """
    _check_expurgated(rate, epsilon)
    theta_gv = gv_distance(rate)
    if _critical(epsilon) >= theta_gv:
        return bhattacharyya_error_exponent(rate, epsilon)
    return -theta_gv * math.log2(_parameter(epsilon))


def expurgated_error_exponent_grid(
    rate: float,
    epsilon: float,
    grid: Optional[int] = None,
    passes: Optional[int] = None,
) -> float:
    """同じ最小値を [θ_GV, 1-θ_GV] 上の格子探索で求める (照合用)"""
    _check_expurgated(rate, epsilon)
    theta_gv = gv_distance(rate)
    log_d = math.log2(_parameter(epsilon))
    result = maximize(
        lambda t: ExtReal(-(1.0 - rate - entropy(t) - t * log_d)),
        grid,
        passes,
        lower=theta_gv,
        upper=1.0 - theta_gv,
    )
    return -result.value.finite


def expurgated_acr(
    rate: float,
    epsilon: float,
    grid: Optional[int] = None,
    passes: Optional[int] = None,
) -> ExtReal:
    """削減アンサンブルにおける B(H) の η

    θ_crit < θ_GV では 0。そうでなければ削減プロファイル上の一般形で求める。
    """
    _check_expurgated(rate, epsilon)
    if _critical(epsilon) < gv_distance(rate):
        return ExtReal(0.0)
    log_d = math.log2(_parameter(epsilon))
    result = acr_general(
        lambda t: ExtReal(t * log_d), expurgated_profile(rate), grid, passes
    )
    return result.eta


def critical_crossover(rate: float, xtol: Optional[float] = None) -> float:
    """θ_crit(ε) = θ_GV(R) となる ε ∈ (0, 1/2) (2 つの分岐の境界)"""
    check_rate(rate)
    theta_gv = gv_distance(rate)
    return find_root(lambda e: _critical(e) - theta_gv, 0.0, 0.5, xtol)
