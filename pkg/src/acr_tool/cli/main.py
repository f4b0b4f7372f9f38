"""メインCLIエントリーポイント"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import click
from pydantic import ValidationError as PydanticValidationError

from acr_tool import __version__
from acr_tool.ensemble import EnsembleParams
from acr_tool.errors import (
    EXIT_INTERNAL_ERROR,
    EXIT_SUCCESS,
    EXIT_USAGE_ERROR,
    EXIT_VERIFICATION_FAILED,
    AcrToolError,
    MessageFormatter,
    exit_code_for,
)
from acr_tool.functionals import parse_functional_spec
from acr_tool.logging import PerformanceTracker, StructuredLogger
from acr_tool.output import ResultExporter
from acr_tool.utils.config import (
    ConfigManager,
    get_environment,
    get_setting,
    set_config_manager,
    setup_logging,
)

from . import reports
from .progress import ProgressReporter, show_run_summary
from .run_config import RunConfig
from .validators import (
    parse_float_list,
    parse_int_list,
    validate_output_path,
    validate_verbosity,
)

Rows = Tuple[List[Dict[str, Any]], int]


@dataclass
class CliState:
    """グループオプションをサブコマンドへ渡す"""

    progress: ProgressReporter
    workers: Optional[int] = None


def _describe_validation(error: PydanticValidationError) -> str:
    messages = []
    for item in error.errors():
        location = ".".join(str(part) for part in item.get("loc", ())) or "config"
        messages.append(f"{location}: {item.get('msg')}")
    return "; ".join(messages)


def _execute(
    ctx: click.Context,
    command: str,
    options: Dict[str, Any],
    build: Callable[[RunConfig, CliState], Rows],
) -> None:
    """RunConfig を作り、行を組み立てて出力し、終了コードで抜ける

    終了コード: 0 = 成功, 1 = 照合の不一致, 2 = 入力・定義域エラー
    """
    state: CliState = ctx.obj
    progress = state.progress
    formatter = MessageFormatter()

    try:
        config = RunConfig(command=command, workers=state.workers, **options)
    except PydanticValidationError as e:
        progress.echo_error(f"入力エラー: {_describe_validation(e)}")
        ctx.exit(EXIT_USAGE_ERROR)
    validate_output_path(config.output_path)

    run_logger = StructuredLogger()
    run_logger.start_session()
    run_logger.info("run_start", f"{command} を開始します", **config.parameters())
    progress.echo(f"🔍 {command} を実行します", level=1)

    exit_code: Optional[int] = None
    try:
        threshold_ms = get_setting("output", "slow_run_warning_ms")
        with PerformanceTracker(threshold_ms=threshold_ms) as tracker:
            rows, failures = build(config, state)
            export = ResultExporter().export(
                rows,
                config.output_format,
                command,
                config.parameters(),
                config.output_path,
            )
    except AcrToolError as e:
        progress.echo_error(formatter.format_message(e))
        run_logger.error("run_failed", e.message, error_code=e.error_code)
        exit_code = exit_code_for(e)
    except Exception as e:
        progress.echo_error(f"予期しないエラー: {e}")
        run_logger.error("run_failed", str(e))
        exit_code = EXIT_INTERNAL_ERROR
    if exit_code is not None:
        ctx.exit(exit_code)

    if not export.success:
        for message in export.errors:
            progress.echo_error(message)
        ctx.exit(EXIT_USAGE_ERROR)
    if config.output_path is None:
        click.echo(export.content, nl=False)

    row_errors = sum(1 for row in rows if row.get("status") == "ERROR")
    run_logger.info(
        "run_finish",
        f"{command} が完了しました",
        rows=len(rows),
        failures=failures,
        row_errors=row_errors,
        duration_ms=tracker.duration_ms,
    )
    if tracker.check_threshold() == "WARNING":
        run_logger.warning(
            "run_slow",
            f"{command} の実行時間が閾値を超えました",
            duration_ms=tracker.duration_ms,
            threshold_ms=threshold_ms,
        )
    show_run_summary(
        progress,
        {
            "rows": len(rows),
            "failures": failures,
            "duration_ms": tracker.duration_ms,
            "output": config.output_path,
        },
    )

    if row_errors:
        progress.echo_error(f"定義域外の行が {row_errors} 件あります")
        ctx.exit(EXIT_USAGE_ERROR)
    if failures:
        ctx.exit(EXIT_VERIFICATION_FAILED)
    ctx.exit(EXIT_SUCCESS)


def _output_options(func: Callable) -> Callable:
    """--format / --out を付与"""
    func = click.option(
        "--out",
        "output_path",
        type=click.Path(dir_okay=False, path_type=Path),
        help="出力ファイル (省略時は標準出力)",
    )(func)
    func = click.option(
        "--format",
        "output_format",
        type=click.Choice(["csv", "json"]),
        default="csv",
        show_default=True,
        help="出力形式",
    )(func)
    return func


@click.group(invoke_without_command=True)
@click.option("--version", is_flag=True, help="Show version information")
@click.option(
    "--config-dir",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    help="設定ディレクトリパス",
)
@click.option("--verbose", "-v", count=True, help="詳細ログ出力")
@click.option("--quiet", "-q", is_flag=True, help="静寂モード")
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    help="並列ワーカー数 (既定は ACR_TOOL_WORKERS または設定ファイル)",
)
@click.pass_context
def main(ctx, version, config_dir, verbose, quiet, workers):
    """ランダム線形符号アンサンブルの重み分布統計と漸近集中率 (ACR) の計算ツール

    Examples:
        # ε' の表を再現
        acr-tool table1

        # nm <= 12 の全行列で共分散の閉形式を照合
        acr-tool verify-cov --max-nm 12

        # 検出不能誤り確率の η を全経路で計算
        acr-tool acr --functional undetected:0.3 --rate 0.5 --format json
    """
    validate_verbosity(quiet, verbose)
    if config_dir:
        set_config_manager(ConfigManager(config_dir))

    # 設定の初期化
    setup_logging(verbose)

    if version:
        click.echo(f"acr-tool version {__version__}")
        if config_dir:
            click.echo(f"設定ディレクトリ: {config_dir}")
        click.echo(f"実行環境: {get_environment()}")
        ctx.exit(EXIT_SUCCESS)

    ctx.obj = CliState(ProgressReporter(quiet=quiet, verbose=verbose), workers)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@main.command()
@click.option("--rate", "rates", help="符号化率のカンマ区切りリスト (既定 0.1..0.9)")
@click.option("--tol", "tolerance", type=float, help="公表値との許容差")
@_output_options
@click.pass_context
def table1(ctx, rates, tolerance, output_format, output_path):
    """log(ε^2 + (1-ε)^2) + 1 - R = 0 の根 ε' の表"""
    rate_list = parse_float_list(rates, "--rate") or list(reports.DEFAULT_RATES)

    def build(config: RunConfig, state: CliState) -> Rows:
        return reports.table1_rows(config.rates, config.tolerance)

    _execute(
        ctx,
        "table1",
        {
            "rates": rate_list,
            "tolerance": tolerance,
            "output_format": output_format,
            "output_path": output_path,
        },
        build,
    )


@main.command("verify-cov")
@click.option(
    "--max-nm", type=int, default=12, show_default=True, help="照合する n*m の上限"
)
@_output_options
@click.pass_context
def verify_cov(ctx, max_nm, output_format, output_path):
    """全行列列挙で Cov(A_w1, A_w2) と E[A_w] の閉形式を照合"""

    def build(config: RunConfig, state: CliState) -> Rows:
        return reports.verify_cov_rows(
            config.max_nm, config.workers, state.progress.show_bars
        )

    _execute(
        ctx,
        "verify-cov",
        {
            "max_nm": max_nm,
            "output_format": output_format,
            "output_path": output_path,
        },
        build,
    )


@main.command()
@click.option(
    "--n-max", type=int, default=8, show_default=True, help="照合する n の上限 (<= 12)"
)
@_output_options
@click.pass_context
def lemma(ctx, n_max, output_format, output_path):
    """#{h: hx = 0, hy = 0} の閉形式を重なり方ごとに全数照合"""

    def build(config: RunConfig, state: CliState) -> Rows:
        return reports.lemma_rows(config.n_max)

    _execute(
        ctx,
        "lemma",
        {"n_max": n_max, "output_format": output_format, "output_path": output_path},
        build,
    )


@main.command()
@click.option("--functional", "-f", required=True, help="汎関数指定 (count など)")
@click.option(
    "--n", "n_values", multiple=True, required=True, help="符号長 (10-24:2 形式可)"
)
@click.option("--rate", type=float, required=True, help="設計符号化率 R")
@click.option("--samples", type=int, default=0, show_default=True, help="標本数")
@click.option("--seed", type=int, default=0, show_default=True, help="乱数シード")
@click.option("--alpha", help="逸脱幅 α のカンマ区切りリスト")
@_output_options
@click.pass_context
def concentrate(
    ctx, functional, n_values, rate, samples, seed, alpha, output_format, output_path
):
    """n を変えながら VAR/E^2 の厳密値と経験値を並べる

    --samples 0 では厳密値のみを出力する。
    """

    def build(config: RunConfig, state: CliState) -> Rows:
        return reports.concentrate_rows(
            parse_functional_spec(config.functional),
            config.n_list,
            config.rate,
            config.samples,
            config.seed,
            config.alpha,
            config.workers,
            state.progress.show_bars,
        )

    _execute(
        ctx,
        "concentrate",
        {
            "functional": functional,
            "n_list": parse_int_list(n_values, "--n"),
            "rate": rate,
            "samples": samples,
            "seed": seed,
            "alpha": parse_float_list(alpha, "--alpha"),
            "output_format": output_format,
            "output_path": output_path,
        },
        build,
    )


@main.command()
@click.option("--functional", "-f", required=True, help="汎関数指定")
@click.option("--rate", type=float, required=True, help="符号化率 R")
@click.option("--epsilon", type=float, help="削減アンサンブルで使う BSC の ε")
@click.option("--expurgated", is_flag=True, help="削減アンサンブルの結果も出力")
@click.option("--grid", type=int, help="格子点数 (>= 64)")
@_output_options
@click.pass_context
def acr(ctx, functional, rate, epsilon, expurgated, grid, output_format, output_path):
    """適用できる全ての経路で漸近集中率 η を計算"""

    def build(config: RunConfig, state: CliState) -> Rows:
        return reports.acr_rows(
            parse_functional_spec(config.functional),
            config.rate,
            config.epsilon,
            config.expurgated,
            config.grid,
        )

    _execute(
        ctx,
        "acr",
        {
            "functional": functional,
            "rate": rate,
            "epsilon": epsilon,
            "expurgated": expurgated,
            "grid": grid,
            "output_format": output_format,
            "output_path": output_path,
        },
        build,
    )


@main.command()
@click.option("--functional", "-f", required=True, help="汎関数指定")
@click.option("--n", type=int, required=True, help="符号長 n")
@click.option("--m", type=int, help="検査行列の行数 m")
@click.option("--rate", type=float, help="設計符号化率 R (--m の代わり)")
@click.option("--brute-force", is_flag=True, help="全行列列挙で照合")
@click.option("--samples", type=int, default=0, show_default=True, help="標本数")
@click.option("--seed", type=int, default=0, show_default=True, help="乱数シード")
@click.option("--alpha", help="逸脱幅 α のカンマ区切りリスト")
@click.option(
    "--matrix",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="F を評価する検査行列ファイル",
)
@_output_options
@click.pass_context
def moments(
    ctx,
    functional,
    n,
    m,
    rate,
    brute_force,
    samples,
    seed,
    alpha,
    matrix,
    output_format,
    output_path,
):
    """(n, m) での E[F] と VAR[F]"""

    def build(config: RunConfig, state: CliState) -> Rows:
        if config.m is not None:
            params = EnsembleParams(config.n, config.m)
        else:
            params = EnsembleParams.from_rate(config.n, config.rate)
        return reports.moments_rows(
            parse_functional_spec(config.functional),
            params,
            brute_force=config.brute_force,
            samples=config.samples,
            seed=config.seed,
            alphas=config.alpha,
            matrix_path=config.matrix,
            workers=config.workers,
            show_progress=state.progress.show_bars,
        )

    _execute(
        ctx,
        "moments",
        {
            "functional": functional,
            "n": n,
            "m": m,
            "rate": rate,
            "brute_force": brute_force,
            "samples": samples,
            "seed": seed,
            "alpha": parse_float_list(alpha, "--alpha"),
            "matrix": matrix,
            "output_format": output_format,
            "output_path": output_path,
        },
        build,
    )


if __name__ == "__main__":
    main()
