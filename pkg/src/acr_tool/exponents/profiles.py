"""
アンサンブルの指数プロファイル q(θ), γ(θ1, θ2)

E[A_{θn}] ≐ 2^{n(H(θ) + q(θ))}、COV[A_{θ1 n}, A_{θ2 n}] ≐ 2^{n γ(θ1, θ2)}。
"""

from dataclasses import dataclass
from typing import Callable, Optional

from .entropy import check_rate, entropy, gv_distance
from .extreal import NEG_INF, ExtReal

ThetaFunction = Callable[[float], ExtReal]
PairFunction = Callable[[float, float], ExtReal]


@dataclass(frozen=True)
class ExponentProfile:
    """q と γ の組

    gamma_off が None のとき非対角の γ は -∞ (対分の独立性)。
    """

    name: str
    q: ThetaFunction
    gamma_diag: ThetaFunction
    gamma_off: Optional[PairFunction] = None

    @property
    def diagonal_only(self) -> bool:
        return self.gamma_off is None

    def gamma(self, theta1: float, theta2: float) -> ExtReal:
        if theta1 == theta2:
            return self.gamma_diag(theta1)
        if self.gamma_off is None:
            return NEG_INF
        # γ(θ1, θ2) = γ(θ2, θ1)
        low, high = sorted((theta1, theta2))
        return self.gamma_off(low, high)


def random_profile(rate: float) -> ExponentProfile:
    """R_{n,m}: q ≡ -(1-R), γ_diag = H(θ) - (1-R)"""
    check_rate(rate)
    offset = 1.0 - rate
    return ExponentProfile(
        name=f"random(R={rate:g})",
        q=lambda theta: ExtReal(-offset),
        gamma_diag=lambda theta: ExtReal(entropy(theta) - offset),
    )


def expurgated_profile(rate: float) -> ExponentProfile:
    """削減アンサンブル: [θ_GV, 1-θ_GV] の外では q = γ_diag = -∞"""
    check_rate(rate)
    offset = 1.0 - rate
    theta_gv = gv_distance(rate)

    def inside(theta: float) -> bool:
        return theta_gv <= theta <= 1.0 - theta_gv

    return ExponentProfile(
        name=f"expurgated(R={rate:g})",
        q=lambda theta: ExtReal(-offset) if inside(theta) else NEG_INF,
        gamma_diag=lambda theta: (
            ExtReal(entropy(theta) - offset) if inside(theta) else NEG_INF
        ),
    )
