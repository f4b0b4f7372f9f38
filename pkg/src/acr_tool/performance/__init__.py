"""
並列処理モジュール
"""

from .models import ParallelConfig, ProcessingMode, Shard, plan_shards
from .parallel_processor import ShardedExecutor, ShardWorker

__all__ = [
    "ParallelConfig",
    "ProcessingMode",
    "Shard",
    "ShardedExecutor",
    "ShardWorker",
    "plan_shards",
]
