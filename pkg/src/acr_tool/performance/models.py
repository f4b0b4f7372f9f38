"""
並列処理関連のデータモデル
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Literal

from acr_tool.errors.exceptions import OutOfDomain

ProcessingMode = Literal["thread", "process"]


@dataclass(frozen=True)
class Shard:
    """添字範囲 [start, stop) の一区画"""

    index: int
    start: int
    stop: int

    @property
    def size(self) -> int:
        return self.stop - self.start

    def __iter__(self):
        return iter(range(self.start, self.stop))


@dataclass(frozen=True)
class ParallelConfig:
    """並列実行設定"""

    workers: int = 1
    mode: ProcessingMode = "process"
    shard_size: int = 4096

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise OutOfDomain("workers", self.workers, "workers >= 1")
        if self.mode not in ("thread", "process"):
            raise OutOfDomain("mode", self.mode, "thread | process")
        if self.shard_size < 1:
            raise OutOfDomain("shard_size", self.shard_size, "shard_size >= 1")

    @classmethod
    def from_settings(cls, settings: Dict[str, Any]) -> "ParallelConfig":
        """computation.yaml の parallel セクションから生成"""
        return cls(
            workers=int(settings.get("workers", 1)),
            mode=settings.get("mode", "process"),
            shard_size=int(settings.get("shard_size", 4096)),
        )


def plan_shards(total: int, shard_size: int) -> List[Shard]:
    """[0, total) を shard_size ごとに区切る (ワーカー数には依存しない)"""
    if total < 0:
        raise OutOfDomain("total", total, "total >= 0")
    return [
        Shard(i, start, min(start + shard_size, total))
        for i, start in enumerate(range(0, total, shard_size))
    ]
