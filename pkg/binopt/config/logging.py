"""
Logging setup for binopt.

Every module logs through `get_logger(__name__)`, so all records land under
the `binopt` logger (`binopt.amplification.algorithm`, `binopt.pipeline.tasks`,
...). That logger owns the handlers and does not propagate; the root logger
gets the same handlers for third-party loggers. Run summaries are
INFO, per-iteration diagnostics DEBUG, capped iteration counts and degenerate
bounds WARNING.
"""

import logging
import logging.config
from pathlib import Path
from typing import Any

from binopt.config.settings import config as binopt_config

CONSOLE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
FILE_FORMAT = (
    "%(asctime)s - %(name)s - %(levelname)s - %(pathname)s:%(lineno)d - %(message)s"
)
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# ANSI colors for the console level name
LOG_COLORS = {
    "DEBUG": "\033[36m",  # Cyan
    "INFO": "\033[32m",  # Green
    "WARNING": "\033[33m",  # Yellow
    "ERROR": "\033[31m",  # Red
    "CRITICAL": "\033[41m",  # Red background
    "RESET": "\033[0m",  # Reset to default
}


class ColoredFormatter(logging.Formatter):
    """
    Colors the level name on the console; the record is restored afterwards
    so a file handler sharing it sees the plain name.
    """

    def format(self, record):
        levelname = record.levelname
        if levelname in LOG_COLORS:
            record.levelname = (
                f"{LOG_COLORS[levelname]}{levelname}{LOG_COLORS['RESET']}"
            )
        try:
            return super().format(record)
        finally:
            record.levelname = levelname


def get_log_config(
    log_level: str | None = None, log_file: str | Path | None = None
) -> dict[str, Any]:
    """
    dictConfig for the `binopt` logger tree.

    The console handler writes to stderr: `binopt fourier`, `amplify` and
    `oracle` print JSON and gate lists on stdout. A log file, when given, uses
    the detailed format with source locations.

    Args:
        log_level: Level name overriding LOGGING_LEVEL from the settings
        log_file: Optional path for a file handler
    """

    level = log_level.upper() if log_level else binopt_config.LOGGING_LEVEL

    handlers = ["console"]
    if log_file:
        handlers.append("file")

    log_config: dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": CONSOLE_FORMAT,
                "datefmt": DATE_FORMAT,
                "()": "binopt.config.logging.ColoredFormatter",
            },
            "detailed": {
                "format": FILE_FORMAT,
                "datefmt": DATE_FORMAT,
            },
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": level,
                "formatter": "standard",
                "stream": "ext://sys.stderr",
            },
        },
        "loggers": {
            "": {
                "handlers": handlers,
                "level": level,
                "propagate": True,
            },
            "binopt": {
                "handlers": handlers,
                "level": level,
                "propagate": False,
            },
        },
    }

    if log_file:
        log_config["handlers"]["file"] = {
            "class": "logging.FileHandler",
            "level": level,
            "formatter": "detailed",
            "filename": str(log_file),
            "encoding": "utf8",
        }

    return log_config


def configure_logging(
    log_level: str | None = None, log_file: str | Path | None = None
) -> None:
    """
    Install the binopt logging setup; called once by the `binopt` CLI group.
    """
    logging.config.dictConfig(get_log_config(log_level, log_file))


def get_logger(name: str) -> logging.Logger:
    """Logger for a binopt module; pass `__name__`."""
    return logging.getLogger(name)
