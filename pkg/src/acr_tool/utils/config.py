"""設定管理モジュール

環境変数による設定オーバーライド機能を提供する。
YAMLファイルの設定値を環境変数で上書きできる。
"""

import copy
import logging
import logging.config
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from acr_tool.errors.exceptions import ConfigError

logger = logging.getLogger(__name__)

ENV_PREFIX = "ACR_TOOL_"
WORKERS_ENV = "ACR_TOOL_WORKERS"
ENVIRONMENT_ENV = "ACR_TOOL_ENV"

DEFAULT_CONFIGS: Dict[str, Dict[str, Any]] = {
    "computation": {
        "gf2core": {
            "enumeration_limit_bits": 28,
            "vectorized_low_bits": 16,
        },
        "ensemble": {
            "brute_force_max_nm": 20,
            "lemma_verify_max_n": 20,
            "confidence_sigmas": 5.0,
        },
        "exponents": {
            "grid": 4096,
            "refine_passes": 2,
            "root_xtol": 1.0e-12,
        },
        "parallel": {
            "workers": 1,
            "mode": "process",
            "shard_size": 4096,
        },
        "output": {
            "schema_version": 1,
            "table1_tolerance": 5.0e-7,
            "slow_run_warning_ms": 600000,
        },
    },
    "logging": {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": "%(asctime)s [%(levelname)8s] %(name)s: %(message)s"
            }
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": "WARNING",
                "formatter": "standard",
                "stream": "ext://sys.stderr",
            }
        },
        "loggers": {
            "acr_tool": {
                "level": "INFO",
                "handlers": ["console"],
                "propagate": False,
            }
        },
        "root": {"level": "WARNING", "handlers": ["console"]},
    },
}


class ConfigManager:
    """設定管理クラス

    YAMLファイルからの設定読み込みと
    環境変数による設定オーバーライドを行う。
    """

    def __init__(self, config_dir: Optional[Path] = None):
        """初期化

        Args:
            config_dir: 設定ファイルディレクトリのパス
        """
        if config_dir is None:
            possible_paths = [
                # 開発環境: プロジェクトルートのconfig
                Path(__file__).parent.parent.parent.parent / "config",
                # インストール環境: パッケージ同梱のconfig
                Path(__file__).parent.parent / "config",
                # 現在の作業ディレクトリ
                Path.cwd() / "config",
            ]
            for path in possible_paths:
                if path.exists() and path.is_dir():
                    config_dir = path
                    break
            else:
                config_dir = Path.cwd() / "config"

        self.config_dir = Path(config_dir)
        self._configs: Dict[str, Dict[str, Any]] = {}

    def load_config(self, config_name: str, reload: bool = False) -> Dict[str, Any]:
        """設定ファイルを読み込む

        Args:
            config_name: 設定ファイル名（.yaml拡張子なし）
            reload: 既に読み込まれた設定を再読み込みするかどうか

        Returns:
            設定辞書

        Raises:
            ConfigError: 設定ファイルの読み込みに失敗した場合
        """
        if config_name in self._configs and not reload:
            return self._configs[config_name]

        config_file = self.config_dir / f"{config_name}.yaml"

        if not config_file.exists():
            if config_name not in DEFAULT_CONFIGS:
                raise ConfigError(f"設定ファイルが見つかりません: {config_file}")

            config_data = copy.deepcopy(DEFAULT_CONFIGS[config_name])
            config_data = self._apply_env_overrides(config_data, config_name)
            self._configs[config_name] = config_data
            logger.debug(f"設定ファイルがないためデフォルト設定を使用します: {config_file}")
            return config_data

        try:
            with open(config_file, "r", encoding="utf-8") as f:
                config_data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError(f"YAML形式エラー ({config_file}): {e}")
        except OSError as e:
            raise ConfigError(f"設定ファイル読み込みエラー ({config_file}): {e}")

        if config_data is None:
            config_data = {}

        # 欠けているキーはデフォルトで補う
        if config_name in DEFAULT_CONFIGS and config_name != "logging":
            merged = copy.deepcopy(DEFAULT_CONFIGS[config_name])
            self._merge_config(merged, config_data)
            config_data = merged

        config_data = self._apply_env_overrides(config_data, config_name)
        self._configs[config_name] = config_data
        logger.debug(f"設定ファイルを読み込みました: {config_file}")
        return config_data

    def _merge_config(self, base: Dict[str, Any], override: Dict[str, Any]) -> None:
        """設定をマージ"""
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def _apply_env_overrides(
        self, config: Dict[str, Any], config_name: str
    ) -> Dict[str, Any]:
        """環境変数による設定オーバーライドを適用

        環境変数名の形式:
        ACR_TOOL_{CONFIG_NAME}_{SECTION}_{KEY}

        例: ACR_TOOL_COMPUTATION_EXPONENTS_GRID=8192

        セクション名は設定辞書の最上位キーと最長一致で照合し、
        残りをキー名 (アンダースコア区切り) として扱う。

        Args:
            config: 設定辞書
            config_name: 設定名

        Returns:
            環境変数で上書きされた設定辞書
        """
        env_prefix = f"{ENV_PREFIX}{config_name.upper().replace('-', '_')}_"

        for env_key, env_value in sorted(os.environ.items()):
            if not env_key.startswith(env_prefix):
                continue

            remaining_key = env_key[len(env_prefix) :].lower()
            key_path = self._resolve_key_path(config, remaining_key)
            if key_path is None:
                logger.warning(f"対応する設定キーがない環境変数を無視します: {env_key}")
                continue

            converted_value = self._convert_env_value(env_value)
            self._set_nested_value(config, key_path, converted_value)
            logger.info(
                f"環境変数による設定オーバーライド: {'.'.join(key_path)} = {converted_value}"
            )

        return config

    def _resolve_key_path(
        self, config: Dict[str, Any], remaining_key: str
    ) -> Optional[List[str]]:
        """環境変数の残り部分を設定キーのパスに変換"""
        sections = sorted(
            (k for k, v in config.items() if isinstance(v, dict)),
            key=len,
            reverse=True,
        )
        for section in sections:
            prefix = f"{section}_"
            if remaining_key.startswith(prefix):
                return [section, remaining_key[len(prefix) :]]
        if remaining_key in config:
            return [remaining_key]
        return None

    def _convert_env_value(self, value: str) -> Union[str, int, float, bool]:
        """環境変数の値を適切な型に変換

        Args:
            value: 環境変数の値

        Returns:
            変換された値
        """
        if value.lower() in ("true", "yes", "on"):
            return True
        elif value.lower() in ("false", "no", "off"):
            return False

        try:
            if any(c in value for c in ".eE"):
                return float(value)
            return int(value)
        except ValueError:
            return value

    def _set_nested_value(
        self, config: Dict[str, Any], key_path: List[str], value: Any
    ) -> None:
        """ネストした辞書に値を設定"""
        current = config
        for key in key_path[:-1]:
            if not isinstance(current.get(key), dict):
                current[key] = {}
            current = current[key]
        current[key_path[-1]] = value

    def get_computation(self) -> Dict[str, Any]:
        """計算設定を取得

        Returns:
            計算設定辞書
        """
        return self.load_config("computation")

    def get_logging_config(self) -> Dict[str, Any]:
        """ログ設定を取得

        Returns:
            ログ設定辞書
        """
        return self.load_config("logging")

    def get_environment(self) -> str:
        """実行環境を取得

        Returns:
            実行環境名（development, testing, production）
        """
        return os.getenv(ENVIRONMENT_ENV, "development")

    def get_default_workers(self) -> int:
        """既定のワーカー数を取得

        ACR_TOOL_WORKERS が設定されていればそれを優先する。
        """
        env_value = os.getenv(WORKERS_ENV)
        if env_value:
            try:
                return max(1, int(env_value))
            except ValueError:
                logger.warning(f"{WORKERS_ENV} の値が整数ではありません: {env_value}")
        return max(1, int(self.get_computation()["parallel"]["workers"]))

    def setup_logging(self, verbosity: int = 0) -> None:
        """ログ設定を適用

        logging.yamlの設定を使用してログを初期化する。

        Args:
            verbosity: -v の数。1でINFO、2以上でDEBUGをコンソールに出す
        """
        try:
            log_config = copy.deepcopy(self.get_logging_config())

            env = self.get_environment()
            env_config = log_config.pop("environments", {}).get(env, {})
            handlers = log_config.get("handlers", {})

            if "root_level" in env_config:
                log_config["root"]["level"] = env_config["root_level"]
            if "console_level" in env_config and "console" in handlers:
                handlers["console"]["level"] = env_config["console_level"]

            if not env_config.get("enable_file_log", False):
                self._drop_handler(log_config, "file_main")
            elif "file_main" in handlers:
                Path(handlers["file_main"]["filename"]).parent.mkdir(
                    parents=True, exist_ok=True
                )

            if verbosity and "console" in handlers:
                handlers["console"]["level"] = "DEBUG" if verbosity > 1 else "INFO"
                log_config.setdefault("loggers", {}).setdefault("acr_tool", {})[
                    "level"
                ] = ("DEBUG" if verbosity > 1 else "INFO")

            logging.config.dictConfig(log_config)
            logger.debug(f"ログ設定を適用しました (環境: {env})")

        except Exception as e:
            # ログ設定に失敗した場合は基本設定を使用
            logging.basicConfig(
                level=logging.WARNING,
                format="%(asctime)s [%(levelname)8s] %(name)s: %(message)s",
            )
            logger.error(f"ログ設定の適用に失敗しました: {e}")

    @staticmethod
    def _drop_handler(log_config: Dict[str, Any], name: str) -> None:
        """ハンドラー定義と参照を削除"""
        log_config.get("handlers", {}).pop(name, None)
        targets = list(log_config.get("loggers", {}).values())
        if "root" in log_config:
            targets.append(log_config["root"])
        for target in targets:
            if name in target.get("handlers", []):
                target["handlers"] = [h for h in target["handlers"] if h != name]


_config_manager: Optional[ConfigManager] = None


def get_config_manager() -> ConfigManager:
    """グローバル設定マネージャーを取得 (初回呼び出し時に生成)"""
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager


def set_config_manager(manager: Optional[ConfigManager]) -> None:
    """グローバル設定マネージャーを差し替える (None でリセット)"""
    global _config_manager
    _config_manager = manager


def get_config(config_name: str) -> Dict[str, Any]:
    """設定を取得する便利関数

    Args:
        config_name: 設定名

    Returns:
        設定辞書
    """
    return get_config_manager().load_config(config_name)


def get_setting(section: str, key: str) -> Any:
    """computation設定の値を取得する便利関数"""
    return get_config_manager().get_computation()[section][key]


def setup_logging(verbosity: int = 0) -> None:
    """ログ設定を適用する便利関数"""
    get_config_manager().setup_logging(verbosity)


def get_environment() -> str:
    """実行環境を取得する便利関数"""
    return get_config_manager().get_environment()


def get_default_workers() -> int:
    """既定ワーカー数を取得する便利関数"""
    return get_config_manager().get_default_workers()
