"""
エラーハンドリング統合モジュール

例外階層・メッセージ整形・終了コード判定を提供する
"""

from .exceptions import (
    AcrToolError,
    ComputationError,
    ConfigError,
    DataError,
    DegenerateProfile,
    DimensionTooLarge,
    EnumerationBudgetError,
    FunctionalSpecError,
    LengthMismatch,
    MatrixFormatError,
    NoAsymptoticForm,
    NonpositiveMean,
    OracleMismatch,
    OutOfDomain,
    SystemError,
    TooLarge,
    UserError,
    WeightOutOfRange,
    ZeroVector,
)
from .messages import (
    EXIT_INTERNAL_ERROR,
    EXIT_SUCCESS,
    EXIT_USAGE_ERROR,
    EXIT_VERIFICATION_FAILED,
    MessageFormatter,
    exit_code_for,
)

__all__ = [
    "AcrToolError",
    "SystemError",
    "DataError",
    "ComputationError",
    "UserError",
    "OutOfDomain",
    "WeightOutOfRange",
    "LengthMismatch",
    "ZeroVector",
    "NonpositiveMean",
    "FunctionalSpecError",
    "MatrixFormatError",
    "EnumerationBudgetError",
    "DimensionTooLarge",
    "TooLarge",
    "DegenerateProfile",
    "NoAsymptoticForm",
    "OracleMismatch",
    "ConfigError",
    "MessageFormatter",
    "exit_code_for",
    "EXIT_SUCCESS",
    "EXIT_INTERNAL_ERROR",
    "EXIT_VERIFICATION_FAILED",
    "EXIT_USAGE_ERROR",
]
