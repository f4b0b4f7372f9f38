"""
メッセージフォーマッターと終了コードのテスト
"""

import pytest

from acr_tool.errors import (
    EXIT_INTERNAL_ERROR,
    EXIT_USAGE_ERROR,
    EXIT_VERIFICATION_FAILED,
    ConfigError,
    DegenerateProfile,
    DimensionTooLarge,
    FunctionalSpecError,
    MatrixFormatError,
    MessageFormatter,
    NoAsymptoticForm,
    OracleMismatch,
    OutOfDomain,
    TooLarge,
    exit_code_for,
)


class TestMessageFormatter:
    """メッセージフォーマッターのテスト"""

    def setup_method(self):
        self.formatter = MessageFormatter(language="ja")

    def test_error_code_prefix(self):
        message = self.formatter.format_message(OutOfDomain("R", 1.5, "0 < R < 1"))
        first_line = message.splitlines()[0]
        assert first_line.startswith("[USER-101] ")
        assert "R=1.5" in first_line

    def test_solution_suggestion(self):
        message = self.formatter.format_message(DimensionTooLarge(40, 28))
        assert "解決方法:" in message
        assert "ENUMERATION_LIMIT_BITS" in message

    def test_no_suggestion(self):
        message = self.formatter.format_message(MatrixFormatError("ヘッダー行がありません", 1))
        assert message == "[DATA-201] 行列テキストの形式が不正です: ヘッダー行がありません"

    def test_foreign_exception(self):
        message = self.formatter.format_message(ValueError("boom"))
        assert message == "エラーが発生しました: boom"

    def test_suggestions_follow_hierarchy(self):
        suggestions = self.formatter.get_solution_suggestions(
            FunctionalSpecError("foo", "未知の汎関数です")
        )
        assert suggestions and "expfam:K1:K2" in suggestions[0]
        assert self.formatter.get_solution_suggestions(RuntimeError()) == []


class TestExitCode:
    """exit_code_for のテスト"""

    @pytest.mark.parametrize(
        "error",
        [
            OutOfDomain("n", 0, "n >= 1"),
            FunctionalSpecError("x", "y"),
            MatrixFormatError("z"),
            TooLarge(30, 20),
            DimensionTooLarge(40, 28),
            NoAsymptoticForm("explicit"),
            DegenerateProfile(),
        ],
    )
    def test_usage_errors(self, error):
        assert exit_code_for(error) == EXIT_USAGE_ERROR

    def test_oracle_mismatch(self):
        error = OracleMismatch("covariance", 0.5, 0.25)
        assert exit_code_for(error) == EXIT_VERIFICATION_FAILED

    def test_unexpected(self):
        assert exit_code_for(RuntimeError("unexpected")) == EXIT_INTERNAL_ERROR

    def test_config_error_is_internal(self):
        assert exit_code_for(ConfigError("壊れた設定")) == EXIT_INTERNAL_ERROR
