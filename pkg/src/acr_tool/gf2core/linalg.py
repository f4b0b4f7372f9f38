"""
GF(2) 上の行簡約・階数・零空間

行は int に詰めたビット列として扱い、XOR で行基本変形を行う。
ピボット列は左端 (列 0) から順に選ぶ。
"""

import logging
from typing import List, Tuple

from acr_tool.errors.exceptions import LengthMismatch

from .models import BitMatrix, BitVector

logger = logging.getLogger(__name__)


def reduced_row_echelon(H: BitMatrix) -> Tuple[List[int], List[int]]:
    """簡約行階段形を求める

    Args:
        H: 検査行列

    Returns:
        (非零行のリスト, 各行のピボット列) の組
    """
    rows = [row for row in H.rows if row]
    pivot_cols: List[int] = []
    r = 0
    for col in range(H.n):
        if r == len(rows):
            break
        bit = 1 << col
        pivot = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivot_cols.append(col)
        r += 1
    return rows[:r], pivot_cols


def rank(H: BitMatrix) -> int:
    """GF(2) 上の行階数"""
    return len(reduced_row_echelon(H)[1])


def nullspace_basis(H: BitMatrix) -> BitMatrix:
    """零空間 C(H) の基底 (生成行列) を返す

    Returns:
        k x n 行列 (k = n - rank)。各行 g は H g^T = 0 を満たす
    """
    reduced, pivot_cols = reduced_row_echelon(H)
    pivot_set = set(pivot_cols)
    basis: List[int] = []
    for free in range(H.n):
        if free in pivot_set:
            continue
        vector = 1 << free
        for row, pivot in zip(reduced, pivot_cols):
            if (row >> free) & 1:
                vector |= 1 << pivot
        basis.append(vector)
    logger.debug(f"零空間: n={H.n}, rank={len(pivot_cols)}, k={len(basis)}")
    return BitMatrix(len(basis), H.n, tuple(basis))


def syndrome(H: BitMatrix, x: BitVector) -> int:
    """シンドローム Hx を m ビットの int で返す"""
    if x.length != H.n:
        raise LengthMismatch(H.n, x.length, what="ベクトル長")
    value = 0
    for i, row in enumerate(H.rows):
        value |= ((row & x.bits).bit_count() & 1) << i
    return value


def syndrome_is_zero(H: BitMatrix, x: BitVector) -> bool:
    """x が C(H) に属するか (Hx = 0^m)"""
    if x.length != H.n:
        raise LengthMismatch(H.n, x.length, what="ベクトル長")
    return all((row & x.bits).bit_count() % 2 == 0 for row in H.rows)
