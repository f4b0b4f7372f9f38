"""
ランダム線形符号アンサンブル R_{n,m}
"""

from .models import (
    EnsembleParams,
    MomentReport,
    Number,
    OrthogonalCaseTally,
    OverlapCase,
    PairOverlapProfile,
)
from .moments import (
    count_annihilating_matrices,
    count_orthogonal_rows,
    count_orthogonal_rows_brute_force,
    covariance_weights,
    expected_weight,
    orthogonal_count_sweep,
    orthogonal_count_table,
    overlap_case,
    overlap_profile,
    second_moment_by_counting,
    second_moment_weights,
    vectors_of_weight,
)
from .brute_force import (
    EnsembleWeightMoments,
    brute_force_functional_moments,
    brute_force_moments,
    brute_force_weight_moments,
    krawtchouk_matrix,
    weight_distribution_histogram,
)
from .sampler import sample_matrix, sample_matrix_at, stream_generator
from .monte_carlo import (
    deviation_frequency,
    monte_carlo_functional,
    sample_functional_values,
)

__all__ = [
    "EnsembleParams",
    "EnsembleWeightMoments",
    "MomentReport",
    "Number",
    "OrthogonalCaseTally",
    "OverlapCase",
    "PairOverlapProfile",
    "brute_force_functional_moments",
    "brute_force_moments",
    "brute_force_weight_moments",
    "count_annihilating_matrices",
    "count_orthogonal_rows",
    "count_orthogonal_rows_brute_force",
    "covariance_weights",
    "deviation_frequency",
    "expected_weight",
    "krawtchouk_matrix",
    "monte_carlo_functional",
    "orthogonal_count_sweep",
    "orthogonal_count_table",
    "overlap_case",
    "overlap_profile",
    "sample_functional_values",
    "sample_matrix",
    "sample_matrix_at",
    "second_moment_by_counting",
    "second_moment_weights",
    "stream_generator",
    "vectors_of_weight",
]
