"""CLI統合テストモジュール

実際のファイル操作・設定ディレクトリ・並列実行を含む統合テスト
"""

import csv
import json
import time

import pytest
import yaml
from click.testing import CliRunner

from acr_tool.cli import main

pytestmark = pytest.mark.integration


@pytest.fixture
def runner():
    """CLIテストランナー"""
    return CliRunner()


class TestCliIntegration:
    """CLI統合テスト"""

    def test_files_in_both_formats(self, runner, tmp_path):
        csv_path = tmp_path / "out" / "acr.csv"
        json_path = tmp_path / "out" / "acr.json"
        args = ["acr", "-f", "undetected:0.3", "--rate", "0.5", "--grid", "512"]

        assert runner.invoke(main, [*args, "--out", str(csv_path)]).exit_code == 0
        assert (
            runner.invoke(
                main, [*args, "--format", "json", "--out", str(json_path)]
            ).exit_code
            == 0
        )

        with open(csv_path, encoding="utf-8", newline="") as f:
            csv_rows = list(csv.DictReader(f))
        document = json.loads(json_path.read_text(encoding="utf-8"))
        assert [r["path"] for r in csv_rows] == [r["path"] for r in document["rows"]]
        assert document["parameters"] == {
            "functional": "undetected:0.3",
            "rate": 0.5,
            "grid": 512,
            "samples": 0,
            "seed": 0,
        }

    def test_config_dir(self, runner, tmp_path):
        (tmp_path / "computation.yaml").write_text(
            yaml.safe_dump({"output": {"schema_version": 7}}), encoding="utf-8"
        )
        result = runner.invoke(
            main,
            [
                "--config-dir",
                str(tmp_path),
                "table1",
                "--rate",
                "0.5",
                "--format",
                "json",
            ],
        )

        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["schema_version"] == 7

    def test_config_budget_override(self, runner, tmp_path):
        (tmp_path / "computation.yaml").write_text(
            yaml.safe_dump({"ensemble": {"brute_force_max_nm": 4}}), encoding="utf-8"
        )
        result = runner.invoke(
            main, ["--config-dir", str(tmp_path), "verify-cov", "--max-nm", "6"]
        )
        assert result.exit_code == 2

    @pytest.mark.parametrize("mode", ["thread", "process"])
    def test_monte_carlo_independent_of_workers(self, runner, monkeypatch, mode):
        monkeypatch.setenv("ACR_TOOL_COMPUTATION_PARALLEL_SHARD_SIZE", "9")
        monkeypatch.setenv("ACR_TOOL_COMPUTATION_PARALLEL_MODE", mode)
        args = [
            "moments",
            "-f",
            "undetected:0.1",
            "--n",
            "8",
            "--m",
            "4",
            "--samples",
            "40",
            "--seed",
            "11",
            "--format",
            "json",
        ]

        outputs = []
        for workers in ("1", "3"):
            result = runner.invoke(main, ["--workers", workers, *args])
            assert result.exit_code == 0, result.output
            outputs.append(result.output)
        assert outputs[0] == outputs[1]

    def test_brute_force_independent_of_workers(self, runner, monkeypatch):
        monkeypatch.setenv("ACR_TOOL_COMPUTATION_PARALLEL_SHARD_SIZE", "64")
        monkeypatch.setenv("ACR_TOOL_COMPUTATION_PARALLEL_MODE", "thread")
        args = [
            "moments",
            "-f",
            "bhattacharyya:0.1",
            "--n",
            "5",
            "--m",
            "2",
            "--brute-force",
        ]

        first = runner.invoke(main, ["--workers", "1", *args])
        second = runner.invoke(main, ["--workers", "4", *args])
        assert first.exit_code == 0, first.output
        assert first.output == second.output

    def test_verbose_keeps_stdout_parseable(self, runner, tmp_path):
        path = tmp_path / "table.json"
        result = runner.invoke(
            main, ["-v", "table1", "--format", "json", "--out", str(path)]
        )

        assert result.exit_code == 0
        assert len(json.loads(path.read_text(encoding="utf-8"))["rows"]) == 9

    @pytest.mark.slow
    def test_verify_cov_up_to_nm_16(self, runner):
        """nm <= 16 の全 (n, m) を 1 分以内に照合する"""
        started = time.perf_counter()
        result = runner.invoke(main, ["verify-cov", "--max-nm", "16"])
        elapsed = time.perf_counter() - started

        assert result.exit_code == 0, result.output
        rows = list(csv.DictReader(result.output.splitlines()))
        assert {row["status"] for row in rows} == {"PASS"}
        assert {("16", "1"), ("15", "1"), ("1", "16")} <= {
            (row["n"], row["m"]) for row in rows
        }
        assert elapsed < 60
