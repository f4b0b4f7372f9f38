"""テスト共通設定"""

import pytest

from acr_tool.utils.config import set_config_manager


@pytest.fixture(autouse=True)
def reset_config_manager():
    """テストごとにグローバル設定マネージャーを作り直す"""
    set_config_manager(None)
    yield
    set_config_manager(None)
