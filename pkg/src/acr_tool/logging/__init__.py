"""
ログ機能パッケージ

構造化ログ出力と処理時間計測
"""

from .performance_tracker import PerformanceTracker
from .structured_logger import StructuredLogger

__all__ = [
    "StructuredLogger",
    "PerformanceTracker",
]
