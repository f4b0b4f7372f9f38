"""
CLI 用の汎関数指定文字列の解析

    count                 Φ_w = 1
    undetected:EPS        Φ_w = ε^w (1-ε)^{n-w}
    bhattacharyya:EPS     Φ_w = D^w
    expfam:K1:K2          Φ_w = K1^w K2^{n-w}
    explicit:@file.csv    係数ベクトルを CSV から読む (列 phi、任意で列 w)
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple

import pandas as pd

from acr_tool.errors.exceptions import FunctionalSpecError, LengthMismatch

from .models import FunctionalFamily, LinearFunctional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FunctionalSpec:
    """長さ n を決める前の汎関数指定"""

    text: str
    family: FunctionalFamily
    parameters: Tuple[float, ...] = ()
    coefficients: Optional[Tuple[float, ...]] = field(default=None, compare=False)

    @property
    def has_asymptotic_form(self) -> bool:
        return self.family is not FunctionalFamily.EXPLICIT

    @property
    def epsilon(self) -> Optional[float]:
        if self.family in (
            FunctionalFamily.UNDETECTED_ERROR,
            FunctionalFamily.BHATTACHARYYA,
        ):
            return self.parameters[0]
        return None

    def build(self, n: int) -> LinearFunctional:
        """符号長 n の LinearFunctional を作る"""
        if self.family is FunctionalFamily.CODEWORD_COUNT:
            return LinearFunctional.codeword_count(n)
        if self.family is FunctionalFamily.UNDETECTED_ERROR:
            return LinearFunctional.undetected_error(n, self.parameters[0])
        if self.family is FunctionalFamily.BHATTACHARYYA:
            return LinearFunctional.bhattacharyya(n, self.parameters[0])
        if self.family is FunctionalFamily.EXPONENTIAL:
            k1, k2 = self.parameters
            return LinearFunctional.exponential_family(n, k1, k2)
        if len(self.coefficients) != n:
            raise LengthMismatch(n, len(self.coefficients), what="係数の個数")
        return LinearFunctional.explicit(self.coefficients)


def _parse_float(spec: str, token: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise FunctionalSpecError(spec, f"数値ではありません: {token!r}")


def _parse_epsilon(spec: str, args: Tuple[str, ...]) -> Tuple[float]:
    if len(args) != 1:
        raise FunctionalSpecError(spec, "EPS を1つ指定してください")
    epsilon = _parse_float(spec, args[0])
    if not 0.0 < epsilon < 1.0:
        raise FunctionalSpecError(spec, "EPS は 0 < EPS < 1 である必要があります")
    return (epsilon,)


def read_coefficients(path: Path) -> Tuple[float, ...]:
    """係数 CSV を読む

    列 phi は必須。列 w があれば w = 1..n の順に並べ替え、欠番を拒否する。
    """
    spec = f"explicit:@{path}"
    try:
        df = pd.read_csv(path)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise FunctionalSpecError(spec, f"CSV を読めません: {e}")

    columns = {str(c).strip().lower(): c for c in df.columns}
    if "phi" not in columns:
        raise FunctionalSpecError(spec, "列 phi がありません")
    if "w" in columns:
        df = df.sort_values(columns["w"])
        try:
            weights = [int(w) for w in df[columns["w"]]]
        except ValueError:
            raise FunctionalSpecError(spec, "列 w に整数でない値があります")
        if weights != list(range(1, len(weights) + 1)):
            raise FunctionalSpecError(spec, "列 w は 1..n の連番である必要があります")

    phi = pd.to_numeric(df[columns["phi"]], errors="coerce")
    if phi.isna().any() or len(phi) == 0:
        raise FunctionalSpecError(spec, "phi に数値でない値または空の行があります")
    logger.debug(f"係数 CSV 読み込み: {path} ({len(phi)} 行)")
    return tuple(float(v) for v in phi)


def parse_functional_spec(text: str) -> FunctionalSpec:
    """指定文字列を FunctionalSpec に変換

    Raises:
        FunctionalSpecError: 書式・値の誤り
    """
    spec = text.strip()
    name, _, rest = spec.partition(":")
    name = name.lower()
    args = tuple(rest.split(":")) if rest else ()

    if name == FunctionalFamily.CODEWORD_COUNT.value:
        if args:
            raise FunctionalSpecError(spec, "count は引数を取りません")
        return FunctionalSpec(spec, FunctionalFamily.CODEWORD_COUNT)
    if name == FunctionalFamily.UNDETECTED_ERROR.value:
        return FunctionalSpec(
            spec, FunctionalFamily.UNDETECTED_ERROR, _parse_epsilon(spec, args)
        )
    if name == FunctionalFamily.BHATTACHARYYA.value:
        return FunctionalSpec(
            spec, FunctionalFamily.BHATTACHARYYA, _parse_epsilon(spec, args)
        )
    if name == FunctionalFamily.EXPONENTIAL.value:
        if len(args) != 2:
            raise FunctionalSpecError(spec, "expfam:K1:K2 の形式で指定してください")
        k1, k2 = (_parse_float(spec, a) for a in args)
        if not (k1 > 0 and k2 > 0):
            raise FunctionalSpecError(spec, "K1, K2 は正である必要があります")
        return FunctionalSpec(spec, FunctionalFamily.EXPONENTIAL, (k1, k2))
    if name == FunctionalFamily.EXPLICIT.value:
        if not rest.startswith("@") or len(rest) < 2:
            raise FunctionalSpecError(spec, "explicit:@file.csv の形式で指定してください")
        coefficients = read_coefficients(Path(rest[1:]))
        return FunctionalSpec(
            spec, FunctionalFamily.EXPLICIT, coefficients=coefficients
        )
    raise FunctionalSpecError(spec, f"未知の汎関数です: {name!r}")
