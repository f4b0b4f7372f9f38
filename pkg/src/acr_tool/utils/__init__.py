"""ユーティリティ (設定管理)"""

from .config import (
    ConfigManager,
    get_config,
    get_config_manager,
    get_default_workers,
    get_environment,
    get_setting,
    set_config_manager,
    setup_logging,
)

__all__ = [
    "ConfigManager",
    "get_config",
    "get_config_manager",
    "get_default_workers",
    "get_environment",
    "get_setting",
    "set_config_manager",
    "setup_logging",
]
