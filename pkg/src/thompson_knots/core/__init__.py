"""
核心模組 - 配置、日誌與錯誤定義
"""

from .config import Settings, settings
from .exceptions import ThompsonKnotsError
from .logging import configure_logging, get_logger

__all__ = ["Settings", "settings", "ThompsonKnotsError", "configure_logging", "get_logger"]
