"""全行列列挙オラクルのテスト"""

from fractions import Fraction
from math import comb

import pytest

from acr_tool.ensemble import (
    EnsembleParams,
    brute_force_functional_moments,
    brute_force_moments,
    brute_force_weight_moments,
    covariance_weights,
    expected_weight,
    krawtchouk_matrix,
    weight_distribution_histogram,
)
from acr_tool.errors import TooLarge, WeightOutOfRange
from acr_tool.functionals import LinearFunctional, exact_expectation, exact_variance
from acr_tool.gf2core import BitMatrix, weight_distribution
from acr_tool.utils.config import set_config_manager


def all_params(max_nm):
    return [
        EnsembleParams(n, m)
        for n in range(1, max_nm + 1)
        for m in range(1, max_nm // n + 1)
    ]


class TestHistogram:
    """重み分布ヒストグラム"""

    def test_total_matrix_count(self):
        params = EnsembleParams(3, 2)
        histogram = weight_distribution_histogram(params)
        assert sum(histogram.values()) == 2**6

    @pytest.mark.parametrize(
        "n, m", [(3, 2), (2, 3), (4, 1), (1, 4), (3, 3), (5, 2), (2, 5)]
    )
    def test_matches_per_matrix_enumeration(self, n, m):
        """行列ごとに weight_distribution を呼んだ結果と一致 (m < n と m >= n)"""
        params = EnsembleParams(n, m)
        expected = {}
        for index in range(1 << params.nm):
            wd = weight_distribution(BitMatrix.from_index(index, n, m))
            expected[wd.counts] = expected.get(wd.counts, 0) + 1
        assert weight_distribution_histogram(params) == expected

    def test_cap(self):
        with pytest.raises(TooLarge):
            weight_distribution_histogram(EnsembleParams(3, 2), cap=5)

    def test_default_cap(self):
        with pytest.raises(TooLarge):
            weight_distribution_histogram(EnsembleParams(7, 3))

    @pytest.mark.parametrize("mode", ["thread", "process"])
    def test_independent_of_sharding(self, monkeypatch, mode):
        """シャード分割とワーカー数によらず同じ結果"""
        params = EnsembleParams(4, 3)
        expected = weight_distribution_histogram(params, workers=1)
        monkeypatch.setenv("ACR_TOOL_COMPUTATION_PARALLEL_SHARD_SIZE", "100")
        monkeypatch.setenv("ACR_TOOL_COMPUTATION_PARALLEL_MODE", mode)
        set_config_manager(None)
        assert weight_distribution_histogram(params, workers=2) == expected


class TestKrawtchouk:
    """Krawtchouk 行列"""

    @pytest.mark.parametrize("n", [1, 4, 9, 16])
    def test_first_row_is_binomial(self, n):
        K = krawtchouk_matrix(n)
        assert [int(v) for v in K[0]] == [comb(n, w) for w in range(n + 1)]

    @pytest.mark.parametrize("n", [1, 4, 9, 16])
    def test_orthogonality(self, n):
        """Σ_j C(n,j) K_w(j) = 2^n [w = 0]"""
        K = krawtchouk_matrix(n)
        for w in range(n + 1):
            total = sum(comb(n, j) * int(K[j, w]) for j in range(n + 1))
            assert total == (1 << n if w == 0 else 0)


class TestBruteForceMoments:
    """閉形式との厳密一致"""

    def test_small_diagonal(self):
        """n=2, m=1: 4 行列で COV[A_1, A_1] = 1/2"""
        report = brute_force_moments(EnsembleParams(2, 1), 1, 1)
        assert report.covariance == Fraction(1, 2)
        assert report.mean == Fraction(1, 1)

    def test_weight_out_of_range(self):
        with pytest.raises(WeightOutOfRange):
            brute_force_moments(EnsembleParams(2, 1), 0, 1)

    @pytest.mark.parametrize("params", all_params(10), ids=str)
    def test_matches_closed_form(self, params):
        moments = brute_force_weight_moments(params)
        for w1 in range(1, params.n + 1):
            assert moments.mean(w1) == expected_weight(params, w1)
            for w2 in range(1, params.n + 1):
                assert moments.covariance(w1, w2) == covariance_weights(
                    params, w1, w2
                )

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "params", [p for p in all_params(16) if p.nm > 10], ids=str
    )
    def test_matches_closed_form_up_to_nm_16(self, params):
        moments = brute_force_weight_moments(params)
        for w1 in range(1, params.n + 1):
            assert moments.mean(w1) == expected_weight(params, w1)
            for w2 in range(1, params.n + 1):
                assert moments.covariance(w1, w2) == covariance_weights(
                    params, w1, w2
                )

    def test_report(self):
        params = EnsembleParams(3, 2)
        report = brute_force_weight_moments(params).report(1, 2)
        assert report.mean == expected_weight(params, 1)
        assert report.secondary_mean == expected_weight(params, 2)
        assert report.covariance == 0
        assert report.is_exact


class TestFunctionalMoments:
    """汎関数の厳密モーメント"""

    @pytest.mark.parametrize(
        "f",
        [
            LinearFunctional.codeword_count(4),
            LinearFunctional.undetected_error(4, 0.2),
            LinearFunctional.bhattacharyya(4, 0.1),
            LinearFunctional.explicit([0.5, -1.0, 2.0, 3.0]),
        ],
        ids=lambda f: f.label,
    )
    def test_matches_exact(self, f):
        params = EnsembleParams(4, 3)
        report = brute_force_functional_moments(f, params)
        assert report.mean == pytest.approx(exact_expectation(f, params), rel=1e-12)
        assert report.variance == pytest.approx(exact_variance(f, params), rel=1e-12)

    def test_reuses_histogram(self):
        params = EnsembleParams(3, 2)
        histogram = weight_distribution_histogram(params)
        f = LinearFunctional.codeword_count(3)
        assert brute_force_functional_moments(f, params, histogram) == (
            brute_force_functional_moments(f, params)
        )

    @pytest.mark.slow
    @pytest.mark.parametrize("params", all_params(16), ids=str)
    def test_matches_exact_up_to_nm_16(self, params):
        """count・未検出誤り・Bhattacharyya の全行列モーメントが閉形式と一致"""
        n = params.n
        histogram = weight_distribution_histogram(params)
        for f in (
            LinearFunctional.codeword_count(n),
            LinearFunctional.undetected_error(n, 0.3),
            LinearFunctional.bhattacharyya(n, 0.3),
        ):
            report = brute_force_functional_moments(f, params, histogram)
            assert report.mean == pytest.approx(exact_expectation(f, params), rel=1e-9)
            assert report.variance == pytest.approx(exact_variance(f, params), rel=1e-9)
