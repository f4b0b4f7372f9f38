"""
構造化ログ機能

実行単位 (セッション) ごとの JSON ログエントリを生成し、
標準 logging に流す。結果ファイルには書き込まない。
"""

import json
import logging
import uuid
from datetime import datetime, timezone
from typing import Any, Dict, Optional


class StructuredLogger:
    """構造化ログ出力"""

    def __init__(self, name: str = "acr_tool.run"):
        self.session_id: Optional[str] = None
        self._logger = logging.getLogger(name)

    def start_session(self) -> str:
        """新しいセッションを開始"""
        self.session_id = str(uuid.uuid4())
        return self.session_id

    def get_session_id(self) -> str:
        """現在のセッションIDを取得"""
        if self.session_id is None:
            self.start_session()
        assert self.session_id is not None
        return self.session_id

    def build_entry(
        self,
        operation: str,
        message: str,
        level: str = "INFO",
        details: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, Any]:
        """構造化ログエントリの作成"""
        return {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": level,
            "module": self._logger.name,
            "operation": operation,
            "message": message,
            "details": details or {},
            "correlation_id": str(uuid.uuid4()),
            "session_id": self.get_session_id(),
        }

    def log(
        self,
        operation: str,
        message: str,
        level: str = "INFO",
        details: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, Any]:
        """JSON形式でログ出力"""
        entry = self.build_entry(operation, message, level, details)
        self._logger.log(
            logging.getLevelName(level),
            json.dumps(entry, ensure_ascii=False, default=str),
        )
        return entry

    def info(self, operation: str, message: str, **details: Any) -> Dict[str, Any]:
        """INFO レベルログの出力"""
        return self.log(operation, message, "INFO", details)

    def warning(self, operation: str, message: str, **details: Any) -> Dict[str, Any]:
        return self.log(operation, message, "WARNING", details)

    def error(self, operation: str, message: str, **details: Any) -> Dict[str, Any]:
        """ERROR レベルログの出力"""
        return self.log(operation, message, "ERROR", details)
