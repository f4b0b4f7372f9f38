"""線形汎関数の厳密モーメントのテスト"""

import math

import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from acr_tool.ensemble import EnsembleParams
from acr_tool.errors import (
    LengthMismatch,
    NoAsymptoticForm,
    NonpositiveMean,
    OutOfDomain,
)
from acr_tool.exponents import bhattacharyya_error_exponent
from acr_tool.functionals import (
    LinearFunctional,
    concentration_ratio_exponent,
    exact_expectation,
    exact_variance,
    expectation_by_sum,
    expectation_exponent_finite,
    log2_exact_expectation,
    log2_exact_variance,
    phi_exponent,
    phi_function,
    variance_by_sum,
)


class TestExactMoments:
    """E[F], VAR[F] の閉形式"""

    def test_codeword_count(self):
        """E = 2^{-m}(2^n - 1), VAR = (1 - 2^{-m}) 2^{-m} (2^n - 1)"""
        params = EnsembleParams(10, 5)
        f = LinearFunctional.codeword_count(10)
        assert exact_expectation(f, params) == pytest.approx(1023 / 32, rel=1e-12)
        assert exact_variance(f, params) == pytest.approx(
            (1 - 1 / 32) / 32 * 1023, rel=1e-12
        )

    def test_undetected_error_expectation(self):
        """E[P_U] = 2^{-m}(1 - (1-ε)^n)"""
        params = EnsembleParams(12, 4)
        f = LinearFunctional.undetected_error(12, 0.05)
        assert exact_expectation(f, params) == pytest.approx(
            (1 - 0.95**12) / 16, rel=1e-12
        )

    @given(
        n=st.integers(1, 40),
        m=st.integers(1, 40),
        k1=st.floats(0.01, 10.0),
        k2=st.floats(0.01, 10.0),
    )
    @example(n=3, m=1, k1=0.0625, k2=5.0)
    @settings(max_examples=100, deadline=None)
    def test_closed_form_matches_sum(self, n, m, k1, k2):
        """指数族の閉形式と係数ごとの和が一致"""
        params = EnsembleParams(n, m)
        f = LinearFunctional.exponential_family(n, k1, k2)
        assert exact_expectation(f, params) == pytest.approx(
            expectation_by_sum(f, params), rel=1e-12
        )
        assert exact_variance(f, params) == pytest.approx(
            variance_by_sum(f, params), rel=1e-12
        )

    def test_explicit_uses_sum(self):
        params = EnsembleParams(3, 1)
        f = LinearFunctional.explicit([1.0, 2.0, 3.0])
        # Σ Φ_w C(3,w) / 2 = (3 + 6 + 3) / 2
        assert exact_expectation(f, params) == pytest.approx(6.0)
        assert log2_exact_expectation(f, params).finite == pytest.approx(
            math.log2(6.0)
        )

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            exact_expectation(LinearFunctional.codeword_count(4), EnsembleParams(5, 2))

    def test_log_domain_for_large_n(self):
        """n = 3000 でも対数領域ではオーバーフローしない"""
        params = EnsembleParams(3000, 1500)
        f = LinearFunctional.codeword_count(3000)
        assert log2_exact_expectation(f, params).finite == pytest.approx(1500.0)
        assert log2_exact_variance(f, params).finite == pytest.approx(1500.0)

    def test_overflow_gives_inf(self):
        """2^1024 を超える E, VAR は inf、対数は有限"""
        params = EnsembleParams(3000, 1000)
        f = LinearFunctional.codeword_count(3000)
        assert exact_expectation(f, params) == math.inf
        assert exact_variance(f, params) == math.inf
        assert log2_exact_expectation(f, params).finite == pytest.approx(2000.0)

    def test_explicit_large_n_overflows_to_inf(self):
        params = EnsembleParams(2000, 10)
        f = LinearFunctional.explicit([1.0] * 2000)
        assert expectation_by_sum(f, params) == math.inf

    def test_small_ratio_keeps_precision(self):
        """K1 << K2 でも差し引き項で桁落ちしない"""
        params = EnsembleParams(3, 1)
        f = LinearFunctional.exponential_family(3, 0.0625, 5.0)
        expected = sum(
            math.comb(3, w) * (0.0625**w * 5.0 ** (3 - w)) ** 2 for w in (1, 2, 3)
        ) / 4
        assert exact_variance(f, params) == pytest.approx(expected, rel=1e-12)

    def test_bhattacharyya_error_exponent_limit(self):
        """-(1/n) log E[B] は n = 1000 で誤り指数に 10^-2 以内"""
        rate, epsilon = 0.5, 0.11
        params = EnsembleParams.from_rate(1000, rate)
        f = LinearFunctional.bhattacharyya(1000, epsilon)
        finite = -expectation_exponent_finite(f, params).finite
        assert abs(finite - bhattacharyya_error_exponent(rate, epsilon)) <= 1e-2


class TestConcentrationRatio:
    """有限 n の (1/n) log(VAR / E^2)"""

    def test_codeword_count(self):
        n, m = 10, 5
        f = LinearFunctional.codeword_count(n)
        ratio = (1 - 2**-m) * 2**m / (2**n - 1)
        value = concentration_ratio_exponent(f, EnsembleParams(n, m))
        assert value.finite == pytest.approx(math.log2(ratio) / n, rel=1e-12)

    def test_approaches_minus_rate(self):
        """count (m = n/2) では下から -R に近づく"""
        f_values = [
            concentration_ratio_exponent(
                LinearFunctional.codeword_count(n), EnsembleParams(n, n // 2)
            ).finite
            for n in (10, 100, 1000)
        ]
        assert f_values[0] < f_values[1]
        assert all(v <= -0.5 + 1e-12 for v in f_values)
        assert f_values[2] == pytest.approx(-0.5, abs=1e-9)

    @pytest.mark.parametrize("n", [16, 24, 32])
    @pytest.mark.parametrize("rate", [0.25, 0.5, 0.75])
    def test_close_to_minus_rate_at_moderate_n(self, n, rate):
        params = EnsembleParams.from_rate(n, rate)
        f = LinearFunctional.codeword_count(n)
        value = concentration_ratio_exponent(f, params)
        assert value.finite == pytest.approx(-rate, abs=0.05)

    def test_zero_mean(self):
        f = LinearFunctional.explicit([0.0, 0.0, 0.0])
        with pytest.raises(NonpositiveMean):
            concentration_ratio_exponent(f, EnsembleParams(3, 1))


class TestPhi:
    """係数の指数 φ(θ)"""

    def test_undetected(self):
        f = LinearFunctional.undetected_error(10, 0.2)
        value = phi_exponent(f, 0.25)
        assert value.finite == pytest.approx(
            0.25 * math.log2(0.2) + 0.75 * math.log2(0.8)
        )

    def test_phi_function(self):
        f = LinearFunctional.codeword_count(1)
        phi = phi_function(f)
        assert phi(0.5).finite == 0.0

    def test_explicit_has_no_asymptotic_form(self):
        f = LinearFunctional.explicit([1.0, 2.0])
        with pytest.raises(NoAsymptoticForm):
            phi_exponent(f, 0.5)
        with pytest.raises(NoAsymptoticForm):
            phi_function(f)

    @pytest.mark.parametrize("theta", [0.0, 1.5])
    def test_theta_domain(self, theta):
        with pytest.raises(OutOfDomain):
            phi_exponent(LinearFunctional.codeword_count(3), theta)
