"""
結果出力モジュール
"""

from .models import ExportResult, OutputFormat
from .result_exporter import ResultExporter, to_csv_cell, to_json_value

__all__ = [
    "ExportResult",
    "OutputFormat",
    "ResultExporter",
    "to_csv_cell",
    "to_json_value",
]
