"""
アンサンブル関連のデータモデル
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from acr_tool.errors.exceptions import OutOfDomain

Number = Union[Fraction, float]


@dataclass(frozen=True)
class EnsembleParams:
    """ランダム線形符号アンサンブル R_{n,m} のパラメータ"""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise OutOfDomain("n", self.n, "n >= 1")
        if self.m < 1:
            raise OutOfDomain("m", self.m, "m >= 1")

    @classmethod
    def from_rate(cls, n: int, rate: float) -> "EnsembleParams":
        """設計符号化率 R から m = round((1-R)n) を決めて生成"""
        if not 0.0 < rate < 1.0:
            raise OutOfDomain("R", rate, "0 < R < 1")
        return cls(n, max(1, round((1.0 - rate) * n)))

    @property
    def rate(self) -> float:
        """設計符号化率 R = 1 - m/n"""
        return 1.0 - self.m / self.n

    @property
    def nm(self) -> int:
        return self.n * self.m


class OverlapCase(str, Enum):
    """ベクトル対 (x, y) の台の重なり方 (w1 <= w2 に並べたとき)"""

    PARTIAL = "partial"  # 0 < i2 < w1
    DISJOINT = "disjoint"  # i2 = 0
    NESTED = "nested"  # i2 = w1, x != y
    IDENTICAL = "identical"  # x = y


@dataclass(frozen=True)
class PairOverlapProfile:
    """添字集合 I_1..I_4 の大きさ

    I_1: x=1,y=0 / I_2: x=1,y=1 / I_3: x=0,y=1 / I_4: x=0,y=0
    """

    i1: int
    i2: int
    i3: int
    i4: int

    @property
    def n(self) -> int:
        return self.i1 + self.i2 + self.i3 + self.i4

    @property
    def w1(self) -> int:
        return self.i1 + self.i2

    @property
    def w2(self) -> int:
        return self.i2 + self.i3


@dataclass
class MomentReport:
    """モーメント計算結果

    厳密計算では Fraction、モンテカルロでは float を保持する。
    """

    mean: Number
    second_moment: Number
    variance: Number
    covariance: Number
    sample_count: int = 0
    confidence_halfwidth: Optional[float] = None
    secondary_mean: Optional[Number] = None
    deviation_frequency: Dict[float, float] = field(default_factory=dict)

    @property
    def is_exact(self) -> bool:
        return self.sample_count == 0

    def ratio(self) -> float:
        """VAR / E^2 (平均が 0 なら inf)"""
        if self.mean == 0:
            return float("inf")
        return float(self.variance) / float(self.mean) ** 2

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式で出力"""
        return {
            "mean": self.mean,
            "second_moment": self.second_moment,
            "variance": self.variance,
            "covariance": self.covariance,
            "secondary_mean": self.secondary_mean,
            "sample_count": self.sample_count,
            "confidence_halfwidth": self.confidence_halfwidth,
            "deviation_frequency": dict(self.deviation_frequency),
        }


@dataclass
class OrthogonalCaseTally:
    """重なり方ごとの #{h: hx=0, hy=0} 照合結果"""

    n: int
    case: OverlapCase
    pairs: int = 0
    passed: int = 0

    @property
    def all_passed(self) -> bool:
        return self.pairs == self.passed
