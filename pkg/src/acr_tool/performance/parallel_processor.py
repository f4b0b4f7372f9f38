"""
シャード分割による並列処理

添字範囲を固定サイズのシャードに分け、モジュールレベルのワーカー関数を
シャードごとに実行する。結果は常にシャード順で返すため、ワーカー数に
関わらず集計結果は同一になる。
"""

import logging
import multiprocessing as mp
from concurrent.futures import (
    Executor,
    Future,
    ProcessPoolExecutor,
    ThreadPoolExecutor,
    as_completed,
)
from typing import Any, Callable, Dict, List, Optional, TypeVar

from tqdm import tqdm

from acr_tool.utils.config import get_config_manager, get_default_workers

from .models import ParallelConfig, ProcessingMode, Shard, plan_shards

logger = logging.getLogger(__name__)

T = TypeVar("T")

ShardWorker = Callable[[Shard, Any], T]


class ShardedExecutor:
    """シャード単位の並列実行エンジン"""

    def __init__(
        self,
        max_workers: Optional[int] = None,
        processing_mode: Optional[ProcessingMode] = None,
        shard_size: Optional[int] = None,
        show_progress: bool = False,
        label: str = "shards",
    ):
        """並列処理設定

        Args:
            max_workers: 最大ワーカー数 (None=環境変数 ACR_TOOL_WORKERS または設定値)
            processing_mode: 処理モード (None=設定値)
            shard_size: シャードあたりの要素数 (None=設定値)
            show_progress: 標準エラーに進捗バーを表示するか
            label: 進捗バーのラベル
        """
        settings = dict(get_config_manager().get_computation()["parallel"])
        settings["workers"] = (
            max_workers if max_workers is not None else get_default_workers()
        )
        if processing_mode:
            settings["mode"] = processing_mode
        if shard_size is not None:
            settings["shard_size"] = shard_size
        self.config = ParallelConfig.from_settings(settings)
        self.show_progress = show_progress
        self.label = label

    @property
    def max_workers(self) -> int:
        return min(self.config.workers, mp.cpu_count())

    def _make_pool(self) -> Executor:
        if self.config.mode == "thread":
            return ThreadPoolExecutor(max_workers=self.max_workers)
        return ProcessPoolExecutor(max_workers=self.max_workers)

    def map_shards(
        self, worker: ShardWorker, total: int, payload: Any = None
    ) -> List[T]:
        """[0, total) をシャードに分けて worker(shard, payload) を実行

        Args:
            worker: モジュールレベルのワーカー関数 (プロセスモードでは pickle 可能であること)
            total: 添字範囲の大きさ
            payload: 全シャード共通の引数

        Returns:
            シャード順に並べた結果のリスト
        """
        shards = plan_shards(total, self.config.shard_size)
        logger.debug(
            f"シャード計画: total={total}, shards={len(shards)}, "
            f"workers={self.max_workers}, mode={self.config.mode}"
        )
        progress = tqdm(
            total=len(shards),
            desc=self.label,
            disable=not self.show_progress,
            leave=False,
        )
        try:
            if self.max_workers <= 1 or len(shards) <= 1:
                results = []
                for shard in shards:
                    results.append(worker(shard, payload))
                    progress.update(1)
                return results

            collected: Dict[int, T] = {}
            with self._make_pool() as pool:
                futures: Dict[Future, int] = {
                    pool.submit(worker, shard, payload): shard.index
                    for shard in shards
                }
                for future in as_completed(futures):
                    collected[futures[future]] = future.result()
                    progress.update(1)
            return [collected[shard.index] for shard in shards]
        finally:
            progress.close()
