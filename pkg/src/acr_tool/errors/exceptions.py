"""
カスタム例外クラス

アプリケーション固有の例外を定義
"""

from typing import Any, Dict, Optional


class AcrToolError(Exception):
    """ACRツール基底例外クラス"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details or {}

    def __reduce__(self):
        # サブクラスの __init__ 引数に依存せずワーカープロセスから復元する
        return (
            _rebuild_error,
            (type(self), self.message, self.error_code, self.details),
        )


def _rebuild_error(
    cls: type, message: str, error_code: Optional[str], details: Dict[str, Any]
) -> "AcrToolError":
    error = cls.__new__(cls)
    AcrToolError.__init__(error, message, error_code, details)
    return error


class SystemError(AcrToolError):
    """システムエラー (SYS-XXX)"""

    pass


class DataError(AcrToolError):
    """データエラー (DATA-XXX)"""

    pass


class ComputationError(AcrToolError):
    """計算エラー (COMP-XXX)"""

    pass


class UserError(AcrToolError):
    """ユーザーエラー (USER-XXX)"""

    pass


# --- 入力・定義域エラー ---


class OutOfDomain(UserError):
    """引数が定義域外"""

    def __init__(self, name: str, value: Any, domain: str):
        super().__init__(
            f"{name}={value} は定義域 {domain} の外です",
            error_code="USER-101",
            details={"name": name, "value": value, "domain": domain},
        )
        self.name = name
        self.value = value
        self.domain = domain


class WeightOutOfRange(UserError):
    """重みが [1, n] の範囲外"""

    def __init__(self, weight: int, n: int):
        super().__init__(
            f"重み w={weight} は 1 <= w <= n={n} を満たす必要があります",
            error_code="USER-102",
            details={"weight": weight, "n": n},
        )
        self.weight = weight
        self.n = n


class LengthMismatch(UserError):
    """ベクトル長・符号長の不一致"""

    def __init__(self, expected: int, actual: int, what: str = "length"):
        super().__init__(
            f"{what} が一致しません: 期待値 {expected}, 実際 {actual}",
            error_code="USER-103",
            details={"expected": expected, "actual": actual},
        )
        self.expected = expected
        self.actual = actual


class ZeroVector(UserError):
    """重み0のベクトルが渡された"""

    def __init__(self, which: str):
        super().__init__(
            f"{which} は非零ベクトルである必要があります",
            error_code="USER-104",
            details={"which": which},
        )


class NonpositiveMean(UserError):
    """Chebyshev評価で平均が正でない"""

    def __init__(self, mean: float):
        super().__init__(
            f"平均は正である必要があります: {mean}",
            error_code="USER-105",
            details={"mean": mean},
        )


class FunctionalSpecError(UserError):
    """線形汎関数指定文字列の形式エラー"""

    def __init__(self, spec: str, reason: str):
        super().__init__(
            f"汎関数指定 '{spec}' が不正です: {reason}",
            error_code="USER-106",
            details={"spec": spec, "reason": reason},
        )


class MatrixFormatError(DataError):
    """行列テキスト形式の解析エラー"""

    def __init__(self, reason: str, line_number: Optional[int] = None):
        super().__init__(
            f"行列テキストの形式が不正です: {reason}",
            error_code="DATA-201",
            details={"line_number": line_number},
        )
        self.line_number = line_number


# --- 計算エラー ---


class EnumerationBudgetError(ComputationError):
    """列挙予算超過の基底"""

    pass


class DimensionTooLarge(EnumerationBudgetError):
    """符号次元が列挙上限を超えた"""

    def __init__(self, dimension: int, limit_bits: int):
        super().__init__(
            f"符号次元 {dimension} が列挙上限 2^{limit_bits} を超えています",
            error_code="COMP-301",
            details={"dimension": dimension, "limit_bits": limit_bits},
        )
        self.dimension = dimension
        self.limit_bits = limit_bits


class TooLarge(EnumerationBudgetError):
    """全行列列挙の規模 (nm) が上限を超えた"""

    def __init__(self, nm: int, cap: int):
        super().__init__(
            f"n*m={nm} が全列挙上限 {cap} を超えています",
            error_code="COMP-302",
            details={"nm": nm, "cap": cap},
        )
        self.nm = nm
        self.cap = cap


class DegenerateProfile(ComputationError):
    """期待値指数が至る所 -inf"""

    def __init__(self, message: str = "期待値指数が全域で -inf です (汎関数が漸近的に消失)"):
        super().__init__(message, error_code="COMP-303")


class NoAsymptoticForm(ComputationError):
    """係数族に漸近形が存在しない"""

    def __init__(self, family: str):
        super().__init__(
            f"係数族 {family} には漸近指数 phi(theta) が定義されません",
            error_code="COMP-304",
            details={"family": family},
        )
        self.family = family


class OracleMismatch(ComputationError):
    """閉形式と総当たりオラクルの不一致"""

    def __init__(self, what: str, closed_form: Any, brute_force: Any):
        super().__init__(
            f"{what}: 閉形式 {closed_form} と総当たり {brute_force} が一致しません",
            error_code="COMP-305",
            details={"closed_form": closed_form, "brute_force": brute_force},
        )


class ConfigError(SystemError):
    """設定に関するエラー"""

    def __init__(self, message: str):
        super().__init__(message, error_code="SYS-001")
