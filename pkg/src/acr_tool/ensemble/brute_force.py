"""
全 2^{nm} 行列の列挙による厳密モーメント (照合用オラクル)

行列番号 0..2^{nm}-1 を行優先・LSB先頭で解釈し (bit i*n+j = H[i][j])、
番号範囲ごとにシャード分割する。各シャードは重み分布ごとの出現数を返し、
集計は整数と有理数で行う。行列ごとの重み分布は 2^n と 2^m の小さい方を
走査して求める (m < n では行空間を列挙して MacWilliams 変換で戻す)。
"""

import logging
import math
from collections import Counter
from fractions import Fraction
from functools import partial
from typing import TYPE_CHECKING, Callable, Dict, List, Optional, Tuple

import numpy as np

from acr_tool.errors.exceptions import TooLarge, WeightOutOfRange
from acr_tool.gf2core.models import WeightDistribution
from acr_tool.performance.models import Shard
from acr_tool.performance.parallel_processor import ShardedExecutor
from acr_tool.utils.config import get_setting

from .models import EnsembleParams, MomentReport

if TYPE_CHECKING:
    from acr_tool.functionals.models import LinearFunctional

logger = logging.getLogger(__name__)

# 1 ブロックで扱う (行列数 x 2^n) 要素数の目安
_BLOCK_ELEMENTS = 1 << 20

WeightHistogram = Dict[Tuple[int, ...], int]


def _check_cap(params: EnsembleParams, cap: Optional[int]) -> None:
    if cap is None:
        cap = int(get_setting("ensemble", "brute_force_max_nm"))
    if params.nm > cap:
        raise TooLarge(params.nm, cap)


def krawtchouk_matrix(n: int) -> np.ndarray:
    """K[j, w] = Σ_s (-1)^s C(j,s) C(n-j, w-s) (整数, (n+1) x (n+1))"""
    K = np.zeros((n + 1, n + 1), dtype=np.int64)
    for j in range(n + 1):
        for w in range(n + 1):
            K[j, w] = sum(
                (-1) ** s * math.comb(j, s) * math.comb(n - j, w - s)
                for s in range(max(0, w - (n - j)), min(j, w) + 1)
            )
    return K


def _xor_span(generators: np.ndarray) -> np.ndarray:
    """生成元 (B x k) の全 2^k 通りの XOR (B x 2^k, 添字の bit t が生成元 t)"""
    count, k = generators.shape
    span = np.empty((count, 1 << k), dtype=np.uint64)
    span[:, 0] = 0
    for t in range(k):
        half = 1 << t
        span[:, half : 2 * half] = span[:, :half] ^ generators[:, t : t + 1]
    return span


def _per_matrix_histogram(values: np.ndarray, n: int) -> np.ndarray:
    """各行の値 (0..n) の出現数 (B x (n+1))"""
    count = values.shape[0]
    offsets = np.arange(count, dtype=np.int64)[:, None] * (n + 1)
    flat = (offsets + values).ravel()
    return np.bincount(flat, minlength=count * (n + 1)).reshape(count, n + 1)


def _columns_of(indices: np.ndarray, n: int, m: int) -> np.ndarray:
    """行列番号から各列を m ビット整数として取り出す (B x n)"""
    columns = np.zeros((indices.size, n), dtype=np.uint64)
    for i in range(m):
        for j in range(n):
            bit = (indices >> np.uint64(i * n + j)) & np.uint64(1)
            columns[:, j] |= bit << np.uint64(i)
    return columns


def _rows_of(indices: np.ndarray, n: int, m: int) -> np.ndarray:
    """行列番号から各行を n ビット整数として取り出す (B x m)"""
    mask = np.uint64((1 << n) - 1)
    return np.stack([(indices >> np.uint64(i * n)) & mask for i in range(m)], axis=1)


def _counts_by_syndrome(indices: np.ndarray, n: int, m: int) -> np.ndarray:
    """全 2^n ベクトルのシンドロームを調べて A_w を数える (n <= m 向け)"""
    syndromes = _xor_span(_columns_of(indices, n, m))
    weights = np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)
    # 非符号語は重み n+1 の仮の箱へ送る
    binned = np.where(syndromes == 0, weights[None, :], n + 1)
    return _per_matrix_histogram(binned, n + 1)[:, : n + 1]


def _counts_by_dual(
    indices: np.ndarray, n: int, m: int, krawtchouk: np.ndarray
) -> np.ndarray:
    """行空間の全 2^m 通りの和と MacWilliams 変換で A_w を数える (m < n 向け)

    A_w = 2^{-m} Σ_{u ∈ F_2^m} K_w(wt(u H)) (行空間の重複は 2^{m-rank} で相殺)
    """
    span = _xor_span(_rows_of(indices, n, m))
    dual_weights = np.bitwise_count(span).astype(np.int64)
    totals = _per_matrix_histogram(dual_weights, n) @ krawtchouk
    return totals >> m


def _histogram_shard(shard: Shard, params: EnsembleParams) -> WeightHistogram:
    """シャード内の全行列について重み分布を数え、分布ごとの出現数を返す"""
    n, m = params.n, params.m
    count_block: Callable[[np.ndarray], np.ndarray]
    if m < n:
        count_block = partial(
            _counts_by_dual, n=n, m=m, krawtchouk=krawtchouk_matrix(n)
        )
    else:
        count_block = partial(_counts_by_syndrome, n=n, m=m)
    block = max(1, _BLOCK_ELEMENTS >> min(n, m))
    histogram: Counter = Counter()

    for start in range(shard.start, shard.stop, block):
        stop = min(start + block, shard.stop)
        indices = np.arange(start, stop, dtype=np.uint64)
        counts = count_block(indices)
        distinct, multiplicity = np.unique(counts, axis=0, return_counts=True)
        for row, times in zip(distinct, multiplicity):
            histogram[tuple(int(c) for c in row)] += int(times)
    return dict(histogram)


def weight_distribution_histogram(
    params: EnsembleParams,
    workers: Optional[int] = None,
    show_progress: bool = False,
    cap: Optional[int] = None,
) -> WeightHistogram:
    """全 2^{nm} 行列の重み分布の出現数

    Returns:
        {(A_0, ..., A_n): 行列数} (合計は 2^{nm})

    Raises:
        TooLarge: nm が上限を超える場合
    """
    _check_cap(params, cap)
    total = 1 << params.nm
    logger.debug(f"全行列列挙: n={params.n}, m={params.m}, 行列数={total}")
    executor = ShardedExecutor(
        max_workers=workers, show_progress=show_progress, label="brute-force"
    )
    merged: Counter = Counter()
    for part in executor.map_shards(_histogram_shard, total, params):
        merged.update(part)
    return dict(sorted(merged.items()))


class EnsembleWeightMoments:
    """全列挙による E[A_w] と E[A_w1 A_w2] (厳密な有理数)"""

    def __init__(self, params: EnsembleParams, histogram: WeightHistogram):
        self.params = params
        self.histogram = histogram
        n = params.n
        denominator = 1 << params.nm
        first = [0] * (n + 1)
        second = [[0] * (n + 1) for _ in range(n + 1)]
        for counts, times in histogram.items():
            for w1 in range(n + 1):
                if not counts[w1]:
                    continue
                first[w1] += times * counts[w1]
                for w2 in range(n + 1):
                    second[w1][w2] += times * counts[w1] * counts[w2]
        self._first = [Fraction(v, denominator) for v in first]
        self._second = [[Fraction(v, denominator) for v in row] for row in second]

    def _check(self, w: int) -> None:
        if not 1 <= w <= self.params.n:
            raise WeightOutOfRange(w, self.params.n)

    def mean(self, w: int) -> Fraction:
        self._check(w)
        return self._first[w]

    def second_moment(self, w1: int, w2: int) -> Fraction:
        self._check(w1)
        self._check(w2)
        return self._second[w1][w2]

    def covariance(self, w1: int, w2: int) -> Fraction:
        return self.second_moment(w1, w2) - self.mean(w1) * self.mean(w2)

    def report(self, w1: int, w2: int) -> MomentReport:
        return MomentReport(
            mean=self.mean(w1),
            second_moment=self.second_moment(w1, w2),
            variance=self.covariance(w1, w1),
            covariance=self.covariance(w1, w2),
            secondary_mean=self.mean(w2),
        )


def brute_force_weight_moments(
    params: EnsembleParams,
    workers: Optional[int] = None,
    show_progress: bool = False,
    cap: Optional[int] = None,
) -> EnsembleWeightMoments:
    """全行列を1回走査して全ての重みの組のモーメントを求める"""
    return EnsembleWeightMoments(
        params, weight_distribution_histogram(params, workers, show_progress, cap)
    )


def brute_force_moments(
    params: EnsembleParams,
    w1: int,
    w2: int,
    workers: Optional[int] = None,
    cap: Optional[int] = None,
) -> MomentReport:
    """E[A_w1], E[A_w1 A_w2], COV[A_w1, A_w2] を全列挙で厳密に求める

    Raises:
        TooLarge: nm が上限 (既定 20) を超える場合
        WeightOutOfRange: w1, w2 が [1, n] の外
    """
    for w in (w1, w2):
        if not 1 <= w <= params.n:
            raise WeightOutOfRange(w, params.n)
    return brute_force_weight_moments(params, workers, cap=cap).report(w1, w2)


def brute_force_functional_moments(
    f: "LinearFunctional",
    params: EnsembleParams,
    histogram: Optional[WeightHistogram] = None,
    workers: Optional[int] = None,
    cap: Optional[int] = None,
) -> MomentReport:
    """全行列について F(H) を評価した厳密なアンサンブル平均と分散"""
    if histogram is None:
        histogram = weight_distribution_histogram(params, workers, cap=cap)
    total = 1 << params.nm
    values: List[Tuple[float, int]] = [
        (f.evaluate(WeightDistribution(params.n, counts)), times)
        for counts, times in histogram.items()
    ]
    mean = math.fsum(v * t for v, t in values) / total
    second = math.fsum(v * v * t for v, t in values) / total
    variance = math.fsum((v - mean) ** 2 * t for v, t in values) / total
    return MomentReport(
        mean=mean, second_moment=second, variance=variance, covariance=variance
    )
