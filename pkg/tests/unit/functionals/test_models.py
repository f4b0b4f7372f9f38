"""線形汎関数の係数族のテスト"""

import math

import pytest

from acr_tool.errors import LengthMismatch, OutOfDomain
from acr_tool.functionals import FunctionalFamily, LinearFunctional, evaluate
from acr_tool.gf2core import BitMatrix, weight_distribution

HAMMING_WD = weight_distribution(
    BitMatrix.from_strings(["1010101", "0110011", "0001111"])
)


class TestLinearFunctional:
    """LinearFunctional のテスト"""

    def test_codeword_count(self):
        """Φ_w = 1 で非零符号語数"""
        f = LinearFunctional.codeword_count(7)
        assert f.coefficient_vector() == (1.0,) * 7
        assert f.evaluate(HAMMING_WD) == 15.0

    def test_undetected_error(self):
        f = LinearFunctional.undetected_error(7, 0.1)
        expected = 7 * 0.1**3 * 0.9**4 + 7 * 0.1**4 * 0.9**3 + 0.1**7
        assert f.evaluate(HAMMING_WD) == pytest.approx(expected, rel=1e-12)
        assert f.k1 == pytest.approx(0.1)
        assert f.k2 == pytest.approx(0.9)

    def test_bhattacharyya(self):
        f = LinearFunctional.bhattacharyya(3, 0.11)
        d = 2.0 * math.sqrt(0.11 * 0.89)
        assert f.coefficient(2) == pytest.approx(d**2)
        assert f.family is FunctionalFamily.BHATTACHARYYA
        assert f.epsilon == 0.11

    def test_exponential_family(self):
        f = LinearFunctional.exponential_family(4, 3.0, 0.5)
        assert f.coefficient(1) == pytest.approx(3.0 * 0.5**3)
        assert f.is_exponential
        assert f.label == "expfam:3:0.5"

    def test_explicit(self):
        f = LinearFunctional.explicit([1, 0, 2, 0, 0, 0, 1])
        assert not f.is_exponential
        # 1*0 + 2*7 + 1*1
        assert evaluate(f, HAMMING_WD) == 15.0
        assert f.label == "explicit(n=7)"

    def test_zero_functional(self):
        assert LinearFunctional.explicit([0.0, 0.0]).is_zero()
        assert not LinearFunctional.codeword_count(2).is_zero()

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            LinearFunctional.codeword_count(6).evaluate(HAMMING_WD)

    @pytest.mark.parametrize("epsilon", [0.0, 1.0, -0.1])
    def test_epsilon_domain(self, epsilon):
        with pytest.raises(OutOfDomain):
            LinearFunctional.undetected_error(4, epsilon)
        with pytest.raises(OutOfDomain):
            LinearFunctional.bhattacharyya(4, epsilon)

    def test_nonpositive_k(self):
        with pytest.raises(OutOfDomain):
            LinearFunctional.exponential_family(3, 0.0, 1.0)

    def test_nonfinite_coefficients(self):
        with pytest.raises(OutOfDomain):
            LinearFunctional.explicit([1.0, math.inf])
