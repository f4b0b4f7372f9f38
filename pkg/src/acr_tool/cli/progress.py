"""進捗・メッセージ表示機能

結果データは標準出力、進捗やメッセージは標準エラーに出す。
"""

from datetime import datetime
from typing import Any, Dict, Optional

import click

# 詳細モード時の行頭ラベル
_LEVEL_LABELS = {0: "", 1: "[INFO] ", 2: "[DEBUG] "}


class ProgressReporter:
    """-v / -q に応じて標準エラーへの出力量を切り替える"""

    def __init__(self, quiet: bool = False, verbose: int = 0):
        """初期化

        Args:
            quiet: 静寂モード (エラー以外を抑止)
            verbose: 詳細レベル (0=通常, 1=詳細, 2以上=デバッグ)
        """
        self.quiet = quiet
        self.verbose = verbose

    @property
    def show_bars(self) -> bool:
        """シャード進捗バーを表示するか"""
        return not self.quiet and self.verbose > 0

    def accepts(self, level: int) -> bool:
        if self.quiet:
            return False
        return level <= self.verbose

    def echo(self, message: str, level: int = 0) -> None:
        """レベル付きメッセージ表示

        Args:
            message: メッセージ
            level: メッセージレベル (0=通常, 1=詳細, 2=デバッグ)
        """
        if not self.accepts(level):
            return
        click.echo(f"{self._prefix(level)}{message}", err=True)

    def echo_warning(self, message: str) -> None:
        self._styled("⚠️  ", message, "yellow", always=False)

    def echo_error(self, message: str) -> None:
        # 静寂モードでも表示
        self._styled("❌ ", message, "red", always=True)

    def _styled(self, mark: str, message: str, color: str, always: bool) -> None:
        if self.quiet and not always:
            return
        click.echo(click.style(f"{mark}{message}", fg=color), err=True)

    def _prefix(self, level: int) -> str:
        if self.verbose == 0:
            return ""
        label = _LEVEL_LABELS.get(min(level, 2), "")
        return f"[{datetime.now().strftime('%H:%M:%S')}] {label}"


def _seconds(duration_ms: Optional[int]) -> str:
    if duration_ms is None:
        return "-"
    return f"{duration_ms / 1000:.2f}秒"


def show_run_summary(progress: ProgressReporter, stats: Dict[str, Any]) -> None:
    """実行サマリー表示

    Args:
        progress: ProgressReporter インスタンス
        stats: 実行統計 (rows, failures, duration_ms, output)
    """
    if not progress.accepts(1):
        failures = stats.get("failures", 0)
        if failures:
            progress.echo_warning(f"不一致: {failures:,}件")
        return

    progress.echo("📊 実行結果サマリー:", level=1)
    progress.echo(f"   出力行数: {stats.get('rows', 0):,}行", level=1)
    failures = stats.get("failures", 0)
    if failures:
        progress.echo_warning(f"不一致: {failures:,}件")
    else:
        progress.echo("   不一致: 0件", level=1)
    progress.echo(f"   処理時間: {_seconds(stats.get('duration_ms'))}", level=1)
    if stats.get("output"):
        progress.echo(f"   出力先: {stats['output']}", level=1)
