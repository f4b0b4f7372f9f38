"""
処理時間計測機能
"""

import time
from typing import Optional


class PerformanceTracker:
    """処理時間計測 (コンテキストマネージャー)"""

    def __init__(self, threshold_ms: Optional[int] = None):
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None
        self.duration_ms: Optional[int] = None
        self.threshold_ms = threshold_ms

    def __enter__(self) -> "PerformanceTracker":
        """コンテキストマネージャー入口"""
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        """コンテキストマネージャー出口"""
        self.end_time = time.perf_counter()
        if self.start_time is not None:
            self.duration_ms = int((self.end_time - self.start_time) * 1000)

    def check_threshold(self) -> str:
        """閾値チェック"""
        if (
            self.threshold_ms is not None
            and self.duration_ms is not None
            and self.duration_ms > self.threshold_ms
        ):
            return "WARNING"
        return "OK"
