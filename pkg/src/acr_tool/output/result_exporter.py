"""結果の CSV / JSON 出力

同じ入力に対して常にバイト単位で同一の出力を作る。
    - float は最短の往復表現 (repr)
    - 厳密な有理数は "p/q" の文字列
    - -∞ は "-inf"
"""

import io
import json
import logging
import math
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

import pandas as pd

from acr_tool.exponents.extreal import ExtReal
from acr_tool.utils.config import get_setting

from .models import ExportResult, OutputFormat

logger = logging.getLogger(__name__)

Row = Mapping[str, Any]


def _format_float(value: float) -> str:
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "-inf" if value < 0 else "inf"
    return repr(value)


def to_json_value(value: Any) -> Any:
    """JSON に載せる値へ変換"""
    if isinstance(value, ExtReal):
        return "-inf" if value.is_neg_inf else value.finite
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else _format_float(value)
    if isinstance(value, Mapping):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    if isinstance(value, Path):
        return str(value)
    return str(value)


def to_csv_cell(value: Any) -> str:
    """CSV のセル文字列へ変換"""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, ExtReal):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, (list, tuple)):
        return " ".join(to_csv_cell(v) for v in value)
    return str(value)


def _columns(rows: Sequence[Row]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


class ResultExporter:
    """コマンド結果の出力"""

    def __init__(self, schema_version: Optional[int] = None):
        if schema_version is None:
            schema_version = int(get_setting("output", "schema_version"))
        self.schema_version = schema_version

    def render_csv(self, rows: Sequence[Row]) -> str:
        """ヘッダー付き CSV (行末は LF)"""
        columns = _columns(rows)
        if not columns:
            return ""
        df = pd.DataFrame(
            [[to_csv_cell(row.get(c)) for c in columns] for row in rows],
            columns=columns,
            dtype=str,
        )
        buffer = io.StringIO()
        df.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    def render_json(
        self, rows: Sequence[Row], command: str, parameters: Dict[str, Any]
    ) -> str:
        """{"schema_version", "command", "parameters", "rows"} をキー順で出力"""
        document = {
            "schema_version": self.schema_version,
            "command": command,
            "parameters": to_json_value(parameters),
            "rows": [to_json_value(dict(row)) for row in rows],
        }
        text = json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2)
        return text + "\n"

    def render(
        self,
        rows: Sequence[Row],
        output_format: OutputFormat,
        command: str,
        parameters: Optional[Dict[str, Any]] = None,
    ) -> str:
        if OutputFormat(output_format) is OutputFormat.JSON:
            return self.render_json(rows, command, parameters or {})
        return self.render_csv(rows)

    def export(
        self,
        rows: Sequence[Row],
        output_format: OutputFormat,
        command: str,
        parameters: Optional[Dict[str, Any]] = None,
        output_path: Optional[Path] = None,
    ) -> ExportResult:
        """結果を整形し、output_path があればファイルへ書き出す

        Returns:
            ExportResult (content に整形済みテキスト)
        """
        start_time = time.time()
        output_format = OutputFormat(output_format)
        result = ExportResult(
            success=True, output_format=output_format, record_count=len(rows)
        )
        content = self.render(rows, output_format, command, parameters)
        result.content = content

        if output_path is not None:
            try:
                output_path = Path(output_path)
                output_path.parent.mkdir(parents=True, exist_ok=True)
                with open(output_path, "w", encoding="utf-8", newline="") as f:
                    f.write(content)
                result.file_path = output_path
                result.file_size = output_path.stat().st_size
                logger.info(f"結果を出力しました: {output_path} ({len(rows)} 行)")
            except OSError as e:
                result.add_error(f"ファイル出力エラー: {e}")
                logger.error(f"結果の出力に失敗しました: {e}")

        result.processing_time = time.time() - start_time
        return result
