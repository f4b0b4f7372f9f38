"""
メッセージフォーマッター

ユーザーフレンドリーなエラーメッセージと終了コードを提供
"""

from typing import Dict, List, Type

from .exceptions import (
    AcrToolError,
    ComputationError,
    DataError,
    DegenerateProfile,
    DimensionTooLarge,
    FunctionalSpecError,
    LengthMismatch,
    NoAsymptoticForm,
    OracleMismatch,
    OutOfDomain,
    TooLarge,
    UserError,
    WeightOutOfRange,
)

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE_ERROR = 2
EXIT_INTERNAL_ERROR = 3


class MessageFormatter:
    """メッセージフォーマッター"""

    def __init__(self, language: str = "ja"):
        self.language = language

        # 解決方法マッピング
        self._solution_map: Dict[Type[AcrToolError], List[str]] = {
            OutOfDomain: ["引数の値が定義域に入っているか確認してください"],
            WeightOutOfRange: ["重みは 1 以上 n 以下を指定してください"],
            LengthMismatch: ["行列の列数とベクトル長を揃えてください"],
            FunctionalSpecError: [
                "count, undetected:EPS, bhattacharyya:EPS, expfam:K1:K2, "
                "explicit:@file.csv のいずれかを指定してください"
            ],
            DimensionTooLarge: [
                "n を小さくするか m を大きくしてください",
                "ACR_TOOL_COMPUTATION_GF2CORE_ENUMERATION_LIMIT_BITS で上限を変更できます",
            ],
            TooLarge: ["n*m を 20 以下にしてください"],
            NoAsymptoticForm: ["漸近解析には指数族またはプリセット汎関数を使用してください"],
            DegenerateProfile: ["汎関数の係数がアンサンブル上で消失していないか確認してください"],
        }

    def format_message(self, exception: Exception) -> str:
        """メッセージフォーマット"""
        if isinstance(exception, AcrToolError):
            code = f"[{exception.error_code}] " if exception.error_code else ""
            lines = [f"{code}{exception.message}"]
            suggestions = self.get_solution_suggestions(exception)
            if suggestions:
                lines.append("解決方法: " + " / ".join(suggestions))
            return "\n".join(lines)

        return f"エラーが発生しました: {str(exception)}"

    def get_solution_suggestions(self, exception: Exception) -> List[str]:
        """解決方法の提案"""
        for error_type, suggestions in self._solution_map.items():
            if isinstance(exception, error_type):
                return suggestions
        return []


def exit_code_for(exception: Exception) -> int:
    """例外から終了コードを決定

    照合の不一致は 1、利用者の入力に起因するもの (定義域・書式・予算・
    漸近形なし) は 2、設定不備などそれ以外の想定外エラーは 3 とする。
    """
    if isinstance(exception, OracleMismatch):
        return EXIT_VERIFICATION_FAILED
    if isinstance(exception, (UserError, DataError, ComputationError)):
        return EXIT_USAGE_ERROR
    return EXIT_INTERNAL_ERROR
