"""
シャード分割並列処理のテスト
"""

import pytest

from acr_tool.errors import OutOfDomain
from acr_tool.performance import ParallelConfig, Shard, ShardedExecutor, plan_shards


def _sum_shard(shard, offset):
    return sum(i + offset for i in shard)


def _indices(shard, payload):
    return list(shard)


class TestPlanShards:
    """plan_shards のテスト"""

    def test_even_split(self):
        shards = plan_shards(8, 4)
        assert shards == [Shard(0, 0, 4), Shard(1, 4, 8)]

    def test_remainder(self):
        shards = plan_shards(10, 4)
        assert [s.size for s in shards] == [4, 4, 2]
        assert list(shards[-1]) == [8, 9]

    def test_empty(self):
        assert plan_shards(0, 4) == []

    def test_negative_total(self):
        with pytest.raises(OutOfDomain):
            plan_shards(-1, 4)


class TestParallelConfig:
    """ParallelConfig のテスト"""

    def test_defaults(self):
        config = ParallelConfig()
        assert config.workers == 1
        assert config.mode == "process"

    def test_from_settings(self):
        config = ParallelConfig.from_settings(
            {"workers": 3, "mode": "thread", "shard_size": 16}
        )
        assert config == ParallelConfig(3, "thread", 16)

    @pytest.mark.parametrize(
        "kwargs",
        [{"workers": 0}, {"mode": "gpu"}, {"shard_size": 0}],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(OutOfDomain):
            ParallelConfig(**kwargs)


class TestShardedExecutor:
    """ShardedExecutor のテスト"""

    def test_sequential(self):
        executor = ShardedExecutor(max_workers=1, shard_size=3)
        assert executor.map_shards(_sum_shard, 10, 0) == [3, 12, 21, 9]

    @pytest.mark.parametrize("workers", [1, 2, 4])
    def test_thread_results_in_shard_order(self, workers):
        executor = ShardedExecutor(
            max_workers=workers, processing_mode="thread", shard_size=5
        )
        parts = executor.map_shards(_indices, 23)
        assert [i for part in parts for i in part] == list(range(23))

    def test_process_mode(self):
        executor = ShardedExecutor(
            max_workers=2, processing_mode="process", shard_size=4
        )
        assert sum(executor.map_shards(_sum_shard, 10, 1)) == sum(range(10)) + 10

    def test_settings_defaults(self, monkeypatch):
        from acr_tool.utils.config import set_config_manager

        monkeypatch.setenv("ACR_TOOL_WORKERS", "3")
        monkeypatch.setenv("ACR_TOOL_COMPUTATION_PARALLEL_SHARD_SIZE", "7")
        set_config_manager(None)
        executor = ShardedExecutor(processing_mode="thread")
        assert executor.config.workers == 3
        assert executor.config.shard_size == 7

    def test_arguments_override_settings(self, monkeypatch):
        from acr_tool.utils.config import set_config_manager

        monkeypatch.setenv("ACR_TOOL_COMPUTATION_PARALLEL_MODE", "process")
        set_config_manager(None)
        executor = ShardedExecutor(2, processing_mode="thread", shard_size=5)
        assert executor.config == ParallelConfig(2, "thread", 5)

    def test_empty_range(self):
        assert ShardedExecutor(max_workers=2).map_shards(_sum_shard, 0, 0) == []
