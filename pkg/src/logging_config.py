"""Loguru setup for the CLI.

Logs go to stderr; stdout carries only the JSON, JSONL or CSV results.
"""

import sys
from pathlib import Path
from typing import TYPE_CHECKING

from loguru import logger

from src.config import Settings

if TYPE_CHECKING:
    from loguru import Logger

_CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{extra[name]}</cyan> | "
    "<level>{message}</level>"
)
_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {extra[name]}:{line} | {message}"


def setup_logging(settings: Settings, level: str | None = None) -> Path | None:
    """Install the stderr sink and, with ``log_to_file``, a rotated file sink.

    ``level`` overrides ``settings.log_level``. Returns the log directory when
    a file sink was added.
    """
    level = level or settings.log_level
    logger.remove()
    logger.configure(extra={"name": "spatial_dom"})

    # colorize=None lets loguru drop colors when stderr is not a terminal
    logger.add(sys.stderr, format=_CONSOLE_FORMAT, level=level, colorize=None, diagnose=False)

    log_path: Path | None = None
    if settings.log_to_file:
        log_path = Path(settings.log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_path / "spatial_dom_{time:YYYY-MM-DD}.log",
            format=_FILE_FORMAT,
            level=level,
            rotation="50 MB",
            retention="14 days",
            compression="gz",
            diagnose=False,
        )

    logger.debug(f"Logging at {level}, file sink: {log_path or 'off'}")
    return log_path


def get_logger(name: str) -> "Logger":
    return logger.bind(name=name)
