"""漸近集中率 η のテスト"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acr_tool.errors import DegenerateProfile, NonpositiveMean, OutOfDomain
from acr_tool.exponents import (
    NEG_INF,
    ExtReal,
    acr_exponential_family,
    acr_general,
    acr_random,
    chebyshev_deviation_bound,
    deviation_exponent_bound,
    expectation_exponent_random,
    random_profile,
    undetected_error_exponent,
    undetected_threshold,
    undetected_threshold_closed_form,
)

# R -> ε' (小数点以下 6 桁)
PUBLISHED_THRESHOLDS = {
    0.1: 0.366047,
    0.2: 0.307193,
    0.3: 0.259613,
    0.4: 0.217375,
    0.5: 0.178203,
    0.6: 0.140933,
    0.7: 0.104872,
    0.8: 0.069564,
    0.9: 0.034687,
}


def exponential_phi(k1, k2):
    log_k1, log_k2 = math.log2(k1), math.log2(k2)
    return lambda t: t * log_k1 + (1.0 - t) * log_k2


class TestUndetectedThreshold:
    """検出不能誤り確率のしきい値 ε'"""

    @pytest.mark.parametrize("rate, expected", sorted(PUBLISHED_THRESHOLDS.items()))
    def test_published_values(self, rate, expected):
        assert undetected_threshold(rate) == pytest.approx(expected, abs=5e-7)

    @pytest.mark.parametrize("rate", [0.05, 0.25, 0.5, 0.75, 0.95])
    def test_closed_form(self, rate):
        assert undetected_threshold(rate) == pytest.approx(
            undetected_threshold_closed_form(rate), abs=1e-10
        )

    def test_eta_vanishes_at_threshold(self):
        rate = 0.5
        epsilon = undetected_threshold(rate)
        eta = acr_exponential_family(epsilon, 1.0 - epsilon, rate)
        assert eta == pytest.approx(0.0, abs=1e-10)

    def test_sign_change(self):
        epsilon = undetected_threshold(0.5)
        assert acr_exponential_family(epsilon + 0.01, 1 - epsilon - 0.01, 0.5) < 0
        assert acr_exponential_family(epsilon - 0.01, 1 - epsilon + 0.01, 0.5) > 0

    def test_decreasing_in_rate(self):
        values = [undetected_threshold(r) for r in sorted(PUBLISHED_THRESHOLDS)]
        assert all(a > b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("rate", [0.0, 1.0])
    def test_rate_out_of_domain(self, rate):
        with pytest.raises(OutOfDomain):
            undetected_threshold(rate)


class TestAcrExponentialFamily:
    """閉形式 η のテスト"""

    @pytest.mark.parametrize("rate", [0.1, 0.5, 0.9])
    def test_count_is_minus_rate(self, rate):
        assert acr_exponential_family(1.0, 1.0, rate) == pytest.approx(-rate)

    def test_scale_invariance(self):
        assert acr_exponential_family(3.0, 5.0, 0.4) == pytest.approx(
            acr_exponential_family(3e-200, 5e-200, 0.4)
        )

    @pytest.mark.parametrize("k1, k2", [(0.0, 1.0), (1.0, -1.0)])
    def test_nonpositive_base(self, k1, k2):
        with pytest.raises(OutOfDomain):
            acr_exponential_family(k1, k2, 0.5)

    def test_undetected_error_exponent(self):
        assert undetected_error_exponent(0.3) == pytest.approx(0.7)


class TestAcrRandom:
    """ランダムアンサンブルの η"""

    @pytest.mark.parametrize("rate", [0.25, 0.5, 0.75])
    def test_count(self, rate):
        result = acr_random(lambda t: 0.0, rate)
        assert result.eta.finite == pytest.approx(-rate, abs=1e-6)
        assert result.method == "random"
        assert result.theta_expectation == pytest.approx(0.5, abs=1e-6)

    @settings(max_examples=100, deadline=None)
    @given(
        k1=st.floats(min_value=0.2, max_value=5.0),
        k2=st.floats(min_value=0.2, max_value=5.0),
        rate=st.floats(min_value=0.05, max_value=0.95),
    )
    def test_agrees_with_closed_form(self, k1, k2, rate):
        phi = exponential_phi(k1, k2)
        expected = acr_exponential_family(k1, k2, rate)
        random_eta = acr_random(phi, rate, grid=512).eta.finite
        general_eta = acr_general(phi, random_profile(rate), grid=512).eta.finite
        assert random_eta == pytest.approx(expected, abs=1e-6)
        assert general_eta == pytest.approx(random_eta, abs=1e-9)

    def test_degenerate(self):
        with pytest.raises(DegenerateProfile):
            acr_random(lambda t: NEG_INF, 0.5)

    def test_expectation_exponent(self):
        assert expectation_exponent_random(lambda t: 0.0, 0.5).finite == pytest.approx(
            0.5
        )
        assert expectation_exponent_random(lambda t: NEG_INF, 0.5) is NEG_INF


class TestAcrGeneral:
    """プロファイル上の一般形"""

    def test_random_profile_count(self):
        result = acr_general(lambda t: ExtReal(0.0), random_profile(0.3))
        assert result.eta.finite == pytest.approx(-0.3, abs=1e-9)
        assert result.expectation_exponent.finite == pytest.approx(0.3, abs=1e-9)
        assert result.method.startswith("general:random")

    def test_to_dict(self):
        data = acr_general(lambda t: 0.0, random_profile(0.5), grid=64).to_dict()
        assert set(data) == {
            "method",
            "eta",
            "variance_exponent",
            "expectation_exponent",
            "theta_expectation",
            "theta_variance",
            "grid",
        }
        assert data["grid"] == 64
        assert len(data["theta_variance"]) == 2

    def test_degenerate(self):
        with pytest.raises(DegenerateProfile):
            acr_general(lambda t: NEG_INF, random_profile(0.5))


class TestChebyshev:
    """Chebyshev による逸脱確率の上界"""

    def test_bound(self):
        assert chebyshev_deviation_bound(10.0, 0.5, 0.5) == pytest.approx(0.02)

    def test_capped_at_one(self):
        assert chebyshev_deviation_bound(1.0, 4.0, 0.5) == 1.0

    def test_errors(self):
        with pytest.raises(NonpositiveMean):
            chebyshev_deviation_bound(0.0, 1.0, 0.5)
        with pytest.raises(OutOfDomain):
            chebyshev_deviation_bound(1.0, -1.0, 0.5)
        with pytest.raises(OutOfDomain):
            chebyshev_deviation_bound(1.0, 1.0, 0.0)

    def test_exponent_bound(self):
        assert deviation_exponent_bound(ExtReal(-0.2)) == ExtReal(-0.2)
        assert deviation_exponent_bound(NEG_INF) is NEG_INF
