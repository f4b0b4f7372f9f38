"""
重み分布の計算

零空間の基底から全符号語を列挙して重みごとに数える。
n <= 64 では下位基底の全組合せを numpy 配列として一括生成し、
上位基底は Gray 符号順 (1ステップにつき基底1本の XOR) で走査する。
"""

import logging
from typing import Iterator, List, Optional, Sequence

import numpy as np

from acr_tool.errors.exceptions import DimensionTooLarge
from acr_tool.utils.config import get_setting

from .linalg import nullspace_basis, syndrome_is_zero
from .models import BitMatrix, BitVector, WeightDistribution

logger = logging.getLogger(__name__)

_WORD_BITS = 64


def _resolve_limit(limit_bits: Optional[int]) -> int:
    if limit_bits is None:
        return int(get_setting("gf2core", "enumeration_limit_bits"))
    return limit_bits


def _basis_within_budget(H: BitMatrix, limit_bits: Optional[int]) -> List[int]:
    basis = list(nullspace_basis(H).rows)
    limit = _resolve_limit(limit_bits)
    if len(basis) > limit:
        raise DimensionTooLarge(len(basis), limit)
    return basis


def gray_code_walk(basis: Sequence[int]) -> Iterator[int]:
    """基底の全線形結合を Gray 符号順に生成 (先頭は零ベクトル)"""
    word = 0
    yield word
    for step in range(1, 1 << len(basis)):
        word ^= basis[(step & -step).bit_length() - 1]
        yield word


def _counts_gray_walk(basis: Sequence[int], n: int) -> List[int]:
    counts = [0] * (n + 1)
    for word in gray_code_walk(basis):
        counts[word.bit_count()] += 1
    return counts


def _counts_vectorized(basis: Sequence[int], n: int, low_bits: int) -> List[int]:
    split = min(len(basis), low_bits)
    low, high = basis[:split], basis[split:]

    table = np.zeros(1, dtype=np.uint64)
    for g in low:
        table = np.concatenate((table, table ^ np.uint64(g)))

    counts = np.zeros(n + 1, dtype=np.int64)
    for offset in gray_code_walk(high):
        weights = np.bitwise_count(table ^ np.uint64(offset))
        counts += np.bincount(weights, minlength=n + 1)
    return [int(c) for c in counts]


def weight_distribution(
    H: BitMatrix,
    limit_bits: Optional[int] = None,
    low_bits: Optional[int] = None,
) -> WeightDistribution:
    """符号 C(H) の重み分布を全符号語列挙で求める

    Args:
        H: 検査行列
        limit_bits: 列挙上限 (2^limit_bits 符号語)。None なら設定値
        low_bits: numpy で一括生成する下位基底の本数。None なら設定値

    Returns:
        重み分布 A_0..A_n

    Raises:
        DimensionTooLarge: n - rank(H) が列挙上限を超える場合
    """
    basis = _basis_within_budget(H, limit_bits)
    if H.n <= _WORD_BITS:
        if low_bits is None:
            low_bits = int(get_setting("gf2core", "vectorized_low_bits"))
        counts = _counts_vectorized(basis, H.n, low_bits)
    else:
        counts = _counts_gray_walk(basis, H.n)
    return WeightDistribution(H.n, tuple(counts))


def enumerate_codewords(
    H: BitMatrix, limit_bits: Optional[int] = None
) -> Iterator[BitVector]:
    """C(H) の全符号語を Gray 符号順に列挙"""
    basis = _basis_within_budget(H, limit_bits)
    return (BitVector(H.n, word) for word in gray_code_walk(basis))


def weight_distribution_naive(
    H: BitMatrix, limit_bits: Optional[int] = None
) -> WeightDistribution:
    """基底の組合せごとに符号語を作り直して数える (照合用)"""
    basis = _basis_within_budget(H, limit_bits)
    counts = [0] * (H.n + 1)
    for mask in range(1 << len(basis)):
        word = 0
        for i, g in enumerate(basis):
            if (mask >> i) & 1:
                word ^= g
        counts[bin(word).count("1")] += 1
    return WeightDistribution(H.n, tuple(counts))


def weight_distribution_by_filter(
    H: BitMatrix, limit_bits: Optional[int] = None
) -> WeightDistribution:
    """全 2^n ベクトルを検査して数える (零空間を使わない照合用)"""
    limit = _resolve_limit(limit_bits)
    if H.n > limit:
        raise DimensionTooLarge(H.n, limit)
    counts = [0] * (H.n + 1)
    for bits in range(1 << H.n):
        x = BitVector(H.n, bits)
        if syndrome_is_zero(H, x):
            counts[x.weight] += 1
    return WeightDistribution(H.n, tuple(counts))


def codeword_count(wd: WeightDistribution) -> int:
    """符号語数 M(H) = 1 + sum_{w>=1} A_w(H)"""
    return wd.total
