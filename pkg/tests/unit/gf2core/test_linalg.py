"""GF(2) 線形代数のテスト"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acr_tool.errors import LengthMismatch
from acr_tool.gf2core import (
    BitMatrix,
    BitVector,
    nullspace_basis,
    rank,
    reduced_row_echelon,
    syndrome,
    syndrome_is_zero,
)

HAMMING_7_4 = BitMatrix.from_strings(["1010101", "0110011", "0001111"])


@st.composite
def matrices(draw, max_n=8, max_m=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=1, max_value=max_m))
    rows = draw(
        st.lists(st.integers(0, (1 << n) - 1), min_size=m, max_size=m)
    )
    return BitMatrix.from_rows(n, rows)


class TestRank:
    """階数のテスト"""

    def test_hamming_rank(self):
        assert rank(HAMMING_7_4) == 3

    def test_zero_matrix(self):
        assert rank(BitMatrix.zeros(3, 4)) == 0

    def test_identity(self):
        assert rank(BitMatrix.identity(5)) == 5

    def test_dependent_rows(self):
        """行の XOR を加えても階数は変わらない"""
        H = BitMatrix.from_strings(["110", "011", "101"])
        assert rank(H) == 2

    def test_pivots_are_increasing(self):
        _, pivots = reduced_row_echelon(HAMMING_7_4)
        assert pivots == sorted(pivots)

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_rank_bounds(self, H):
        assert 0 <= rank(H) <= min(H.m, H.n)


class TestNullspace:
    """零空間のテスト"""

    def test_hamming_dimension(self):
        basis = nullspace_basis(HAMMING_7_4)
        assert (basis.m, basis.n) == (4, 7)

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_basis_vectors_are_codewords(self, H):
        """基底の各ベクトルは Hx = 0、本数は n - rank"""
        basis = nullspace_basis(H)
        assert basis.m == H.n - rank(H)
        for g in basis:
            assert syndrome_is_zero(H, g)
        assert rank(basis) == basis.m


class TestSyndrome:
    """シンドロームのテスト"""

    def test_syndrome_of_column(self):
        """単位ベクトル e_j のシンドロームは列 j"""
        for j in range(7):
            e = BitVector.from_support(7, [j])
            assert syndrome(HAMMING_7_4, e) == HAMMING_7_4.column(j)

    def test_codeword(self):
        x = BitVector.from_string("1110000")
        assert syndrome(HAMMING_7_4, x) == 0
        assert syndrome_is_zero(HAMMING_7_4, x)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            syndrome(HAMMING_7_4, BitVector.zeros(6))
        with pytest.raises(LengthMismatch):
            syndrome_is_zero(HAMMING_7_4, BitVector.zeros(8))
