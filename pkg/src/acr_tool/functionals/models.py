"""
重み分布の線形結合 F(H) = Σ_{w=1}^{n} Φ_w A_w(H) の係数族
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from acr_tool.errors.exceptions import LengthMismatch, OutOfDomain
from acr_tool.gf2core.models import WeightDistribution


class FunctionalFamily(str, Enum):
    """係数族の種類"""

    EXPLICIT = "explicit"
    EXPONENTIAL = "expfam"
    CODEWORD_COUNT = "count"
    UNDETECTED_ERROR = "undetected"
    BHATTACHARYYA = "bhattacharyya"


def _bhattacharyya_parameter(epsilon: float) -> float:
    return 2.0 * math.sqrt(epsilon * (1.0 - epsilon))


@dataclass(frozen=True)
class LinearFunctional:
    """線形汎関数 F の係数 Φ_1..Φ_n

    指数族 Φ_w = K1^w K2^{n-w} (プリセットを含む) は (log2 K1, log2 K2) で
    保持し、係数は対数領域で計算してから一度だけ指数化する。
    """

    n: int
    family: FunctionalFamily
    coefficients: Optional[Tuple[float, ...]] = None
    log2_k1: Optional[float] = None
    log2_k2: Optional[float] = None
    epsilon: Optional[float] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise OutOfDomain("n", self.n, "n >= 1")
        if self.family is FunctionalFamily.EXPLICIT:
            if self.coefficients is None:
                raise OutOfDomain("coefficients", None, "Φ_1..Φ_n")
            if len(self.coefficients) != self.n:
                raise LengthMismatch(self.n, len(self.coefficients), what="係数の個数")
            if not all(math.isfinite(c) for c in self.coefficients):
                raise OutOfDomain("coefficients", self.coefficients, "有限の実数")
        elif self.log2_k1 is None or self.log2_k2 is None:
            raise OutOfDomain("log2_k", (self.log2_k1, self.log2_k2), "有限の実数")

    # ---- 生成 ----

    @classmethod
    def explicit(cls, coefficients: Sequence[float]) -> "LinearFunctional":
        """係数ベクトル Φ_1..Φ_n を直接与える"""
        coefficients = tuple(float(c) for c in coefficients)
        return cls(len(coefficients), FunctionalFamily.EXPLICIT, coefficients)

    @classmethod
    def exponential_family(
        cls, n: int, k1: float, k2: float, family: Optional[FunctionalFamily] = None
    ) -> "LinearFunctional":
        """Φ_w = K1^w K2^{n-w} (K1, K2 > 0)"""
        if not k1 > 0:
            raise OutOfDomain("K1", k1, "K1 > 0")
        if not k2 > 0:
            raise OutOfDomain("K2", k2, "K2 > 0")
        return cls(
            n,
            family or FunctionalFamily.EXPONENTIAL,
            log2_k1=math.log2(k1),
            log2_k2=math.log2(k2),
        )

    @classmethod
    def codeword_count(cls, n: int) -> "LinearFunctional":
        """非零符号語数 M(H) - 1 (Φ_w = 1)"""
        return cls(n, FunctionalFamily.CODEWORD_COUNT, log2_k1=0.0, log2_k2=0.0)

    @classmethod
    def undetected_error(cls, n: int, epsilon: float) -> "LinearFunctional":
        """BSC(ε) の検出不能誤り確率 Φ_w = ε^w (1-ε)^{n-w}"""
        if not 0.0 < epsilon < 1.0:
            raise OutOfDomain("ε", epsilon, "0 < ε < 1")
        return cls(
            n,
            FunctionalFamily.UNDETECTED_ERROR,
            log2_k1=math.log2(epsilon),
            log2_k2=math.log2(1.0 - epsilon),
            epsilon=epsilon,
        )

    @classmethod
    def bhattacharyya(cls, n: int, epsilon: float) -> "LinearFunctional":
        """Bhattacharyya 上界 B(H) (Φ_w = D^w, D = 2√(ε(1-ε)))"""
        if not 0.0 < epsilon < 1.0:
            raise OutOfDomain("ε", epsilon, "0 < ε < 1")
        return cls(
            n,
            FunctionalFamily.BHATTACHARYYA,
            log2_k1=math.log2(_bhattacharyya_parameter(epsilon)),
            log2_k2=0.0,
            epsilon=epsilon,
        )

    # ---- 属性 ----

    @property
    def is_exponential(self) -> bool:
        """指数族 K1^w K2^{n-w} に帰着するか"""
        return self.family is not FunctionalFamily.EXPLICIT

    @property
    def k1(self) -> float:
        return 2.0**self.log2_k1

    @property
    def k2(self) -> float:
        return 2.0**self.log2_k2

    @property
    def label(self) -> str:
        if self.family is FunctionalFamily.EXPLICIT:
            return f"explicit(n={self.n})"
        if self.family is FunctionalFamily.CODEWORD_COUNT:
            return "count"
        if self.epsilon is not None:
            return f"{self.family.value}:{self.epsilon:g}"
        return f"expfam:{self.k1:g}:{self.k2:g}"

    def log2_coefficient(self, w: int) -> float:
        """log2 Φ_w (指数族のみ)"""
        return w * self.log2_k1 + (self.n - w) * self.log2_k2

    def coefficient(self, w: int) -> float:
        """Φ_w (1 <= w <= n)"""
        if self.family is FunctionalFamily.EXPLICIT:
            return self.coefficients[w - 1]
        return 2.0 ** self.log2_coefficient(w)

    def coefficient_vector(self) -> Tuple[float, ...]:
        return tuple(self.coefficient(w) for w in range(1, self.n + 1))

    def is_zero(self) -> bool:
        return self.family is FunctionalFamily.EXPLICIT and not any(self.coefficients)

    def evaluate(self, wd: WeightDistribution) -> float:
        """F(H) = Σ_{w>=1} Φ_w A_w(H) (補償加算)"""
        if wd.n != self.n:
            raise LengthMismatch(self.n, wd.n, what="符号長")
        return math.fsum(
            self.coefficient(w) * wd.counts[w]
            for w in range(1, self.n + 1)
            if wd.counts[w]
        )
