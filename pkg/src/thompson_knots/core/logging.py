"""
structlog 日誌設定
"""

import logging
import sys

import structlog

from .config import settings

_configured = False


def _stderr_logger(*args) -> structlog.PrintLogger:
    # 每次取用當下的 sys.stderr
    return structlog.PrintLogger(file=sys.stderr)


def configure_logging(level: str | None = None, json_output: bool | None = None) -> None:
    """設定 structlog；重複呼叫只會更新等級與輸出格式"""
    global _configured

    level_name = (level or settings.LOG_LEVEL).upper()
    use_json = settings.LOG_JSON if json_output is None else json_output
    numeric_level = getattr(logging, level_name, logging.INFO)

    renderer = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if use_json
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        logger_factory=_stderr_logger,
        cache_logger_on_first_use=False,
    )
    _configured = True


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    if not _configured:
        configure_logging()
    return structlog.get_logger(name)
