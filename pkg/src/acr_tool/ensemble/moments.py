"""
ランダム線形符号アンサンブルの厳密モーメント

E[A_w] = C(n,w) 2^{-m} と共分散の閉形式、およびその証明で使う
「hx = 0, hy = 0 を満たす行ベクトル h の個数」の計算を提供する。
h は行ベクトル、x, y は列ベクトルとして扱う。
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator, List, Optional

import numpy as np

from acr_tool.errors.exceptions import (
    LengthMismatch,
    OracleMismatch,
    OutOfDomain,
    WeightOutOfRange,
    ZeroVector,
)
from acr_tool.gf2core.models import BitVector
from acr_tool.utils.config import get_setting

from .models import (
    EnsembleParams,
    OrthogonalCaseTally,
    OverlapCase,
    PairOverlapProfile,
)

logger = logging.getLogger(__name__)


def _check_weight(params: EnsembleParams, w: int) -> None:
    if not 1 <= w <= params.n:
        raise WeightOutOfRange(w, params.n)


def expected_weight(params: EnsembleParams, w: int) -> Fraction:
    """E[A_w] = C(n,w) 2^{-m}

    Raises:
        WeightOutOfRange: w が [1, n] の外
    """
    _check_weight(params, w)
    return Fraction(comb(params.n, w), 2**params.m)


def covariance_weights(params: EnsembleParams, w1: int, w2: int) -> Fraction:
    """COV[A_w1, A_w2]

    w1 != w2 では 0、w1 = w2 = w では (1 - 2^{-m}) 2^{-m} C(n,w)。
    """
    _check_weight(params, w1)
    _check_weight(params, w2)
    if w1 != w2:
        return Fraction(0)
    p = Fraction(1, 2**params.m)
    return (1 - p) * p * comb(params.n, w1)


def second_moment_weights(params: EnsembleParams, w1: int, w2: int) -> Fraction:
    """E[A_w1 A_w2] = COV[A_w1, A_w2] + E[A_w1] E[A_w2]"""
    return covariance_weights(params, w1, w2) + expected_weight(
        params, w1
    ) * expected_weight(params, w2)


def _check_pair(x: BitVector, y: BitVector) -> None:
    if x.length != y.length:
        raise LengthMismatch(x.length, y.length, what="ベクトル長")
    if x.weight == 0:
        raise ZeroVector("x")
    if y.weight == 0:
        raise ZeroVector("y")


def overlap_profile(x: BitVector, y: BitVector) -> PairOverlapProfile:
    """(x, y) の添字集合 I_1..I_4 の大きさ"""
    if x.length != y.length:
        raise LengthMismatch(x.length, y.length, what="ベクトル長")
    both = (x.bits & y.bits).bit_count()
    only_x = (x.bits & ~y.bits).bit_count()
    only_y = (y.bits & ~x.bits).bit_count()
    return PairOverlapProfile(
        i1=only_x, i2=both, i3=only_y, i4=x.length - only_x - both - only_y
    )


def overlap_case(x: BitVector, y: BitVector) -> OverlapCase:
    """重なり方の分類 (重みの小さい方を x とみなす)"""
    _check_pair(x, y)
    if x.bits == y.bits:
        return OverlapCase.IDENTICAL
    profile = overlap_profile(x, y)
    smaller = min(profile.w1, profile.w2)
    if profile.i2 == 0:
        return OverlapCase.DISJOINT
    if profile.i2 == smaller:
        return OverlapCase.NESTED
    return OverlapCase.PARTIAL


def _closed_form_exponent(i1, i2, i3, i4, case: OverlapCase):
    """重なり方ごとの偶奇条件から log2 #{h} を求める

    各添字集合内の部分重み w_k(h) の偶奇を揃える数え方で、
    空でない集合ごとに半分 (2^{i_k - 1}) が条件を満たす。
    i1..i4 は int でも同じ形の整数配列でもよい。
    """
    if case is OverlapCase.IDENTICAL:
        return (i2 - 1) + i4
    if case is OverlapCase.PARTIAL:
        # 全部偶数 or 全部奇数
        return 1 + (i1 - 1) + (i2 - 1) + (i3 - 1) + i4
    if case is OverlapCase.DISJOINT:
        return (i1 - 1) + (i3 - 1) + i4
    # NESTED: 片方の台が他方を含む。空になるのは I_1 か I_3 のどちらか
    outer = np.where(i1 == 0, i3, i1)
    return (i2 - 1) + (outer - 1) + i4


def _closed_form_count(profile: PairOverlapProfile, case: OverlapCase) -> int:
    exponent = _closed_form_exponent(
        profile.i1, profile.i2, profile.i3, profile.i4, case
    )
    return 1 << int(exponent)


def count_orthogonal_rows_brute_force(x: BitVector, y: BitVector) -> int:
    """全 2^n 個の行ベクトル h を調べて #{h: hx = 0, hy = 0} を数える"""
    if x.length != y.length:
        raise LengthMismatch(x.length, y.length, what="ベクトル長")
    if x.length > 63:
        raise OutOfDomain("n", x.length, "n <= 63")
    h = np.arange(1 << x.length, dtype=np.uint64)
    x_parity = np.bitwise_count(h & np.uint64(x.bits)) & 1
    y_parity = np.bitwise_count(h & np.uint64(y.bits)) & 1
    return int(np.count_nonzero((x_parity | y_parity) == 0))


def count_orthogonal_rows(
    x: BitVector, y: BitVector, verify: Optional[bool] = None
) -> int:
    """#{h in F_2^n: hx = 0, hy = 0}

    x != y なら 2^{n-2}、x = y なら 2^{n-1}。

    Args:
        x, y: 非零ベクトル
        verify: True なら総当たりで照合する。None のときはデバッグログ
            有効時のみ照合 (n が設定上限以下の場合)

    Raises:
        ZeroVector: x または y が零ベクトル
        OracleMismatch: 照合で不一致
    """
    _check_pair(x, y)
    case = overlap_case(x, y)
    count = _closed_form_count(overlap_profile(x, y), case)

    if verify is None:
        verify = logger.isEnabledFor(logging.DEBUG)
    if verify and x.length <= int(get_setting("ensemble", "lemma_verify_max_n")):
        brute = count_orthogonal_rows_brute_force(x, y)
        if brute != count:
            raise OracleMismatch(f"#{{h: hx=0, hy=0}} ({x}, {y})", count, brute)
    return count


def orthogonal_count_table(n: int) -> np.ndarray:
    """全ての (x, y) について #{h: hx=0, hy=0} を総当たりで求める

    Z[x, h] = [hx = 0] の 0/1 行列を作り Z Z^T を計算する。

    Returns:
        2^n x 2^n の int64 配列 (添字はベクトルの int 表現)
    """
    if not 1 <= n <= 12:
        raise OutOfDomain("n", n, "1 <= n <= 12")
    vectors = np.arange(1 << n, dtype=np.uint32)
    parity = np.bitwise_count(np.bitwise_and.outer(vectors, vectors)) & 1
    annihilator = (parity == 0).astype(np.float32)
    table = annihilator @ annihilator.T
    return np.rint(table).astype(np.int64)


def count_annihilating_matrices(x: BitVector, y: BitVector, m: int) -> int:
    """#{H: Hx = 0^m, Hy = 0^m} (行ごとに独立なので m 乗)"""
    return count_orthogonal_rows(x, y, verify=False) ** m


def vectors_of_weight(n: int, w: int) -> Iterator[BitVector]:
    """重み w の長さ n ベクトルを全て生成"""
    for support in combinations(range(n), w):
        yield BitVector.from_support(n, support)


def second_moment_by_counting(params: EnsembleParams, w1: int, w2: int) -> Fraction:
    """E[A_w1 A_w2] を組 (x, y) ごとの行列数の和として求める

    sum_x sum_y #{H: Hx = 0, Hy = 0} / 2^{mn}
    """
    _check_weight(params, w1)
    _check_weight(params, w2)
    total = 0
    for x in vectors_of_weight(params.n, w1):
        for y in vectors_of_weight(params.n, w2):
            total += count_annihilating_matrices(x, y, params.m)
    return Fraction(total, 2 ** (params.m * params.n))


_CASE_ORDER = (
    OverlapCase.PARTIAL,
    OverlapCase.DISJOINT,
    OverlapCase.NESTED,
    OverlapCase.IDENTICAL,
)


def orthogonal_count_sweep(n: int) -> List[OrthogonalCaseTally]:
    """全ての非零ベクトル対について閉形式と総当たり表を照合する

    閉形式は重なり方ごとの数え方から求め、2^{n-2} (x != y) または
    2^{n-1} (x = y) とも一致することを確かめる。

    Returns:
        PARTIAL, DISJOINT, NESTED, IDENTICAL の順の集計
    """
    table = orthogonal_count_table(n)
    ys = np.arange(1, 1 << n, dtype=np.uint64)
    w2 = np.bitwise_count(ys).astype(np.int64)
    tallies = [OrthogonalCaseTally(n, case) for case in _CASE_ORDER]

    for x in range(1, 1 << n):
        w1 = x.bit_count()
        i2 = np.bitwise_count(ys & np.uint64(x)).astype(np.int64)
        i1 = w1 - i2
        i3 = w2 - i2
        i4 = n - w1 - w2 + i2

        identical = ys == np.uint64(x)
        disjoint = i2 == 0
        nested = ~identical & ~disjoint & (i2 == np.minimum(w1, w2))
        partial = ~identical & ~disjoint & ~nested
        masks = (partial, disjoint, nested, identical)

        closed = np.zeros_like(i2)
        for case, mask in zip(_CASE_ORDER, masks):
            exponent = _closed_form_exponent(
                i1[mask], i2[mask], i3[mask], i4[mask], case
            )
            closed[mask] = np.left_shift(np.int64(1), exponent)
        stated = np.where(identical, 1 << (n - 1), 1 << max(n - 2, 0))
        ok = (closed == table[x, 1:]) & (closed == stated)

        for tally, mask in zip(tallies, masks):
            tally.pairs += int(np.count_nonzero(mask))
            tally.passed += int(np.count_nonzero(mask & ok))
    summary = [(t.case.value, t.pairs) for t in tallies]
    logger.debug(f"補題の照合: n={n}, {summary}")
    return tallies
