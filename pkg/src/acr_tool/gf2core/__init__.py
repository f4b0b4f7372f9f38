"""
GF(2) 線形代数と重み分布計算

単一の検査行列 H に対する厳密計算を提供する
"""

from .linalg import (
    nullspace_basis,
    rank,
    reduced_row_echelon,
    syndrome,
    syndrome_is_zero,
)
from .models import BitMatrix, BitVector, WeightDistribution
from .weights import (
    codeword_count,
    enumerate_codewords,
    gray_code_walk,
    weight_distribution,
    weight_distribution_by_filter,
    weight_distribution_naive,
)

__all__ = [
    "BitMatrix",
    "BitVector",
    "WeightDistribution",
    "rank",
    "reduced_row_echelon",
    "nullspace_basis",
    "syndrome",
    "syndrome_is_zero",
    "weight_distribution",
    "weight_distribution_naive",
    "weight_distribution_by_filter",
    "enumerate_codewords",
    "gray_code_walk",
    "codeword_count",
]
