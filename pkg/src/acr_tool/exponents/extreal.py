"""
拡張実数 R ∪ {-∞}

指数 (1/n) log の極限値は -∞ を取りうる。浮動小数点の -inf や NaN を
そのまま伝播させず、タグ付きの値として明示的に演算する。
"""

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Union

from acr_tool.errors.exceptions import DegenerateProfile, OutOfDomain

Scalar = Union[int, float]


@total_ordering
@dataclass(frozen=True)
class ExtReal:
    """有限の実数または -∞ (finite=None)"""

    finite: Optional[float] = None

    def __post_init__(self) -> None:
        if self.finite is not None and not math.isfinite(self.finite):
            raise OutOfDomain("finite", self.finite, "有限の実数")

    @classmethod
    def of(cls, value: Union["ExtReal", Scalar]) -> "ExtReal":
        """float から変換 (-inf は -∞、NaN と +inf は拒否)"""
        if isinstance(value, ExtReal):
            return value
        value = float(value)
        if value == -math.inf:
            return NEG_INF
        return cls(value)

    @property
    def is_neg_inf(self) -> bool:
        return self.finite is None

    @property
    def is_finite(self) -> bool:
        return self.finite is not None

    def to_float(self) -> float:
        return -math.inf if self.finite is None else self.finite

    def __add__(self, other: Union["ExtReal", Scalar]) -> "ExtReal":
        other = ExtReal.of(other)
        if self.is_neg_inf or other.is_neg_inf:
            return NEG_INF
        return ExtReal(self.finite + other.finite)

    __radd__ = __add__

    def __sub__(self, other: Union["ExtReal", Scalar]) -> "ExtReal":
        other = ExtReal.of(other)
        if other.is_neg_inf:
            raise DegenerateProfile("-∞ を減算することはできません")
        if self.is_neg_inf:
            return NEG_INF
        return ExtReal(self.finite - other.finite)

    def __mul__(self, scale: Scalar) -> "ExtReal":
        # 正のスカラー倍のみ (0 * -∞ は未定義)
        if isinstance(scale, ExtReal) or not scale > 0:
            raise OutOfDomain("scale", scale, "scale > 0")
        if self.is_neg_inf:
            return NEG_INF
        return ExtReal(self.finite * scale)

    __rmul__ = __mul__

    def __truediv__(self, scale: Scalar) -> "ExtReal":
        if not scale > 0:
            raise OutOfDomain("scale", scale, "scale > 0")
        return self * (1.0 / scale)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ExtReal):
            return NotImplemented
        if self.is_neg_inf:
            return other.is_finite
        if other.is_neg_inf:
            return False
        return self.finite < other.finite

    def __str__(self) -> str:
        return "-inf" if self.finite is None else repr(self.finite)


NEG_INF = ExtReal(None)
ZERO = ExtReal(0.0)


def ext_max(*values: ExtReal) -> ExtReal:
    """max(-∞, x) = x"""
    best = NEG_INF
    for value in values:
        if best < value:
            best = value
    return best
