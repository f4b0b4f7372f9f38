"""
区間上の上限 sup の数値計算

一様格子で走査したのち、最良格子点のまわりで黄金分割探索を行う。
目的関数は ExtReal を返し、-∞ の点も比較できる。同値は小さい θ を優先する。
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from acr_tool.errors.exceptions import OutOfDomain
from acr_tool.utils.config import get_setting

from .extreal import NEG_INF, ExtReal

logger = logging.getLogger(__name__)

Objective = Callable[[float], ExtReal]
PairObjective = Callable[[float, float], ExtReal]

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0

# θ → 0+ の端点の切り詰め
THETA_FLOOR = 1e-9
MIN_GRID = 64
# 2 変数走査の格子点数の上限
PAIR_GRID_LIMIT = 256


@dataclass(frozen=True)
class SupResult:
    """sup の推定値と到達点"""

    value: ExtReal
    argmax: Optional[float]
    grid: int
    grid_value: ExtReal = NEG_INF
    refinement_delta: float = 0.0


@dataclass(frozen=True)
class PairSupResult:
    value: ExtReal
    argmax: Optional[Tuple[float, float]]
    grid: int


def _resolve_grid(grid: Optional[int]) -> int:
    if grid is None:
        grid = int(get_setting("exponents", "grid"))
    if grid < MIN_GRID:
        raise OutOfDomain("grid", grid, f"grid >= {MIN_GRID}")
    return grid


def _resolve_passes(passes: Optional[int]) -> int:
    if passes is None:
        passes = int(get_setting("exponents", "refine_passes"))
    if passes < 0:
        raise OutOfDomain("passes", passes, "passes >= 0")
    return passes


def grid_points(grid: int, lower: float = 0.0, upper: float = 1.0) -> np.ndarray:
    """lower + (upper - lower) i / grid (lower = 0 のときは i >= 1)"""
    start = 1 if lower == 0.0 else 0
    return lower + (upper - lower) * np.arange(start, grid + 1) / grid


def golden_section_max(
    objective: Objective, a: float, b: float, tol: float
) -> Tuple[float, ExtReal]:
    """[a, b] 上の単峰関数の最大点を黄金分割で探す"""
    dist = b - a
    if dist <= tol:
        mid = (a + b) / 2.0
        return mid, objective(mid)

    iterations = int(math.ceil(math.log(tol / dist) / math.log(INV_PHI)))
    c = a + INV_PHI_SQ * dist
    d = a + INV_PHI * dist
    yc = objective(c)
    yd = objective(d)
    for _ in range(iterations - 1):
        dist *= INV_PHI
        if yc >= yd:
            b, d, yd = d, c, yc
            c = a + INV_PHI_SQ * dist
            yc = objective(c)
        else:
            a, c, yc = c, d, yd
            d = a + INV_PHI * dist
            yd = objective(d)
    return (c, yc) if yc >= yd else (d, yd)


def scan(objective: Objective, points: np.ndarray) -> Tuple[int, ExtReal]:
    """格子走査 (最初に現れた最大点の添字)"""
    best_index, best_value = -1, NEG_INF
    for i, theta in enumerate(points):
        value = objective(float(theta))
        if best_index < 0 or value > best_value:
            best_index, best_value = i, value
    return best_index, best_value


def maximize(
    objective: Objective,
    grid: Optional[int] = None,
    passes: Optional[int] = None,
    lower: float = 0.0,
    upper: float = 1.0,
) -> SupResult:
    """sup_{θ in (lower, upper]} objective(θ)

    Args:
        objective: θ -> ExtReal
        grid: 格子分割数 (None なら設定値、64 以上)
        passes: 黄金分割による精密化の回数 (None なら設定値)
        lower, upper: 探索区間 (lower = 0 は開端)

    Returns:
        SupResult (全点で -∞ なら value = -∞, argmax = None)
    """
    grid = _resolve_grid(grid)
    passes = _resolve_passes(passes)
    points = grid_points(grid, lower, upper)
    index, grid_value = scan(objective, points)
    if grid_value.is_neg_inf:
        return SupResult(NEG_INF, None, grid, NEG_INF)

    best_theta, best_value = float(points[index]), grid_value
    floor = max(lower, THETA_FLOOR)
    half_width = (upper - lower) / grid
    previous = grid_value
    delta = 0.0
    for k in range(passes):
        tol = 10.0 ** -(9 + 4 * k)
        a = max(floor, best_theta - half_width)
        b = min(upper, best_theta + half_width)
        theta, value = golden_section_max(objective, a, b, tol)
        if value > best_value:
            best_theta, best_value = theta, value
        if best_value.is_finite and previous.is_finite:
            delta = abs(best_value.finite - previous.finite)
        previous = best_value
        half_width = 10.0 * tol

    logger.debug(
        f"sup: grid={grid}, passes={passes}, argmax={best_theta:.12g}, "
        f"value={best_value}, delta={delta:.3g}"
    )
    return SupResult(best_value, best_theta, grid, grid_value, delta)


def maximize_pair(
    objective: PairObjective,
    grid: Optional[int] = None,
    passes: Optional[int] = None,
) -> PairSupResult:
    """θ1 < θ2 上の 2 変数 sup (対称な目的関数の非対角部分)

    粗い格子で走査したのち、座標ごとの黄金分割を交互に行う。
    """
    grid = min(_resolve_grid(grid), PAIR_GRID_LIMIT)
    passes = _resolve_passes(passes)
    points: List[float] = [float(t) for t in grid_points(grid)]

    best: Optional[Tuple[float, float]] = None
    best_value = NEG_INF
    for i, theta1 in enumerate(points):
        for theta2 in points[i + 1 :]:
            value = objective(theta1, theta2)
            if best is None or value > best_value:
                best, best_value = (theta1, theta2), value
    if best_value.is_neg_inf:
        return PairSupResult(NEG_INF, None, grid)

    half_width = 1.0 / grid
    for k in range(passes):
        tol = 10.0 ** -(9 + 4 * k)
        theta1, theta2 = best
        t1, v1 = golden_section_max(
            lambda t: objective(t, theta2),
            max(THETA_FLOOR, theta1 - half_width),
            min(theta2, theta1 + half_width),
            tol,
        )
        if v1 > best_value and t1 != theta2:
            best, best_value = (t1, theta2), v1
        theta1 = best[0]
        t2, v2 = golden_section_max(
            lambda t: objective(theta1, t),
            max(theta1, theta2 - half_width),
            min(1.0, theta2 + half_width),
            tol,
        )
        if v2 > best_value and t2 != theta1:
            best, best_value = (theta1, t2), v2
        half_width = 10.0 * tol
    return PairSupResult(best_value, best, grid)
