"""
モンテカルロによる集中の実験

標本 i の行列は (seed, i) から決まるので、標本範囲をシャードに分けても
値の列は同じになる。統計量は固定順序の補償加算で求める。
"""

import logging
import math
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

from acr_tool.errors.exceptions import LengthMismatch, OutOfDomain
from acr_tool.gf2core.weights import weight_distribution
from acr_tool.performance.models import Shard
from acr_tool.performance.parallel_processor import ShardedExecutor
from acr_tool.utils.config import get_setting

from .models import EnsembleParams, MomentReport
from .sampler import sample_matrix_at

if TYPE_CHECKING:
    from acr_tool.functionals.models import LinearFunctional

logger = logging.getLogger(__name__)

_Payload = Tuple[EnsembleParams, "LinearFunctional", int, Optional[int]]


def _sample_shard(shard: Shard, payload: _Payload) -> List[float]:
    params, f, seed, limit_bits = payload
    return [
        f.evaluate(weight_distribution(sample_matrix_at(params, seed, i), limit_bits))
        for i in shard
    ]


def sample_functional_values(
    params: EnsembleParams,
    f: "LinearFunctional",
    samples: int,
    seed: int,
    workers: Optional[int] = None,
    limit_bits: Optional[int] = None,
    show_progress: bool = False,
) -> List[float]:
    """標本 0..samples-1 について F(H) を計算 (標本番号順)"""
    executor = ShardedExecutor(
        max_workers=workers, show_progress=show_progress, label="monte-carlo"
    )
    values: List[float] = []
    for part in executor.map_shards(
        _sample_shard, samples, (params, f, seed, limit_bits)
    ):
        values.extend(part)
    return values


def deviation_frequency(
    values: Sequence[float], reference_mean: float, alpha: float
) -> float:
    """Pr[F / E ∉ (1-α, 1+α)] の経験頻度"""
    if not alpha > 0:
        raise OutOfDomain("α", alpha, "α > 0")
    outside = sum(
        1 for v in values if not (1.0 - alpha) < v / reference_mean < (1.0 + alpha)
    )
    return outside / len(values)


def monte_carlo_functional(
    params: EnsembleParams,
    f: "LinearFunctional",
    samples: int,
    seed: int,
    alphas: Sequence[float] = (),
    reference_mean: Optional[float] = None,
    workers: Optional[int] = None,
    limit_bits: Optional[int] = None,
    show_progress: bool = False,
) -> MomentReport:
    """i.i.d. 標本による F(H) の平均・不偏分散・信頼半幅

    Args:
        params: アンサンブルパラメータ
        f: 線形汎関数
        samples: 標本数 (2 以上)
        seed: 乱数シード
        alphas: 逸脱頻度を求める α の一覧
        reference_mean: 逸脱頻度の基準 E[F] (None なら厳密な期待値)
        workers: ワーカー数
        limit_bits: 重み分布の列挙上限

    Returns:
        MomentReport (confidence_halfwidth は既定 5σ)

    Raises:
        OutOfDomain: samples < 2
        DimensionTooLarge: 標本行列の符号次元が列挙上限を超える場合
    """
    if samples < 2:
        raise OutOfDomain("samples", samples, "samples >= 2")
    if f.n != params.n:
        raise LengthMismatch(params.n, f.n, what="符号長")

    values = sample_functional_values(
        params, f, samples, seed, workers, limit_bits, show_progress
    )
    mean = math.fsum(values) / samples
    second = math.fsum(v * v for v in values) / samples
    variance = math.fsum((v - mean) ** 2 for v in values) / (samples - 1)
    sigmas = float(get_setting("ensemble", "confidence_sigmas"))
    halfwidth = sigmas * math.sqrt(variance / samples)

    if reference_mean is None:
        from acr_tool.functionals.evaluation import exact_expectation

        reference_mean = exact_expectation(f, params)

    frequencies = {}
    if alphas and reference_mean > 0:
        frequencies = {
            float(alpha): deviation_frequency(values, reference_mean, alpha)
            for alpha in alphas
        }
    logger.debug(
        f"モンテカルロ: n={params.n}, m={params.m}, samples={samples}, "
        f"mean={mean:.6g}"
    )
    return MomentReport(
        mean=mean,
        second_moment=second,
        variance=variance,
        covariance=variance,
        sample_count=samples,
        confidence_halfwidth=halfwidth,
        secondary_mean=reference_mean,
        deviation_frequency=frequencies,
    )
