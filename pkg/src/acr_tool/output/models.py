"""出力関連のデータモデル"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, Optional


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


@dataclass
class ExportResult:
    """出力結果"""

    success: bool
    output_format: OutputFormat
    record_count: int
    file_path: Optional[Path] = None
    content: str = ""
    file_size: int = 0
    processing_time: float = 0.0
    errors: List[str] = field(default_factory=list)

    def add_error(self, error: str) -> None:
        """エラーを追加"""
        self.errors.append(error)
        self.success = False
