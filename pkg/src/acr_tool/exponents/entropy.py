"""
二値エントロピーと GV 距離

対数はすべて底 2。
"""

import logging
import math
from typing import Callable, Optional

from scipy.optimize import bisect

from acr_tool.errors.exceptions import OutOfDomain
from acr_tool.utils.config import get_setting

logger = logging.getLogger(__name__)


def check_rate(rate: float) -> None:
    if not 0.0 < rate < 1.0:
        raise OutOfDomain("R", rate, "0 < R < 1")


def check_theta(theta: float) -> None:
    if not 0.0 < theta <= 1.0:
        raise OutOfDomain("θ", theta, "0 < θ <= 1")


def entropy(x: float) -> float:
    """H(x) (定義域チェックなし、端点は 0)"""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def binary_entropy(x: float) -> float:
    """H(x) = -x log x - (1-x) log(1-x)

    Raises:
        OutOfDomain: x が [0, 1] の外
    """
    if not 0.0 <= x <= 1.0:
        raise OutOfDomain("x", x, "0 <= x <= 1")
    return entropy(x)


def weight_exponent(theta: float, rate: float) -> float:
    """lim (1/n) log E[A_{θn}] = H(θ) - (1-R)"""
    check_theta(theta)
    check_rate(rate)
    return entropy(theta) - (1.0 - rate)


def weight_distribution_acr(theta: float, rate: float) -> float:
    """A_{θn} の漸近集中率 1 - R - H(θ)"""
    check_theta(theta)
    check_rate(rate)
    return 1.0 - rate - entropy(theta)


def find_root(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    xtol: Optional[float] = None,
) -> float:
    """符号の変わる区間 [lower, upper] で二分法"""
    if xtol is None:
        xtol = float(get_setting("exponents", "root_xtol"))
    root = bisect(func, lower, upper, xtol=xtol, maxiter=200)
    logger.debug(f"二分法: [{lower:g}, {upper:g}] -> {root:.15g}")
    return root


def gv_distance(rate: float, xtol: Optional[float] = None) -> float:
    """相対 GV 距離 θ_GV: 1 - R - H(θ) = 0 の (0, 1/2) 内の根"""
    check_rate(rate)
    return find_root(lambda t: 1.0 - rate - entropy(t), 0.0, 0.5, xtol)
