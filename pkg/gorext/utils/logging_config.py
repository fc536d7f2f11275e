"""
Logging for gorext.

Loggers are named after the subpackage (``gorext.resolution.sullivan``) and
accept keyword fields next to the message. Console output goes to standard
error so that reports on standard output stay byte-identical; a rotating JSON
file is added when ``GOREXT_LOG_FILE`` is set.
"""

import json
import logging
import logging.handlers
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

LOG_LEVEL_ENV = "GOREXT_LOG_LEVEL"
LOG_FILE_ENV = "GOREXT_LOG_FILE"
DEFAULT_LEVEL = "WARNING"


class ColoredFormatter(logging.Formatter):
    """Console formatter: level colored on terminals, keyword fields appended as k=v."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def __init__(self, fmt: str, datefmt: Optional[str] = None, use_color: bool = True):
        super().__init__(fmt, datefmt)
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        levelname = record.levelname
        if self.use_color and levelname in self.COLORS:
            record.levelname = f"{self.COLORS[levelname]}{levelname}{self.RESET}"
        try:
            text = super().format(record)
        finally:
            record.levelname = levelname
        extra = getattr(record, "extra_fields", None)
        if extra:
            rendered = " ".join(f"{k}={v}" for k, v in sorted(extra.items()))
            text = f"{text} [{rendered}]"
        return text


class JSONFormatter(logging.Formatter):
    """One JSON object per record; keyword fields are nested under ``fields``."""

    def format(self, record: logging.LogRecord) -> str:
        log_entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        extra = getattr(record, "extra_fields", None)
        if extra:
            log_entry["fields"] = extra
        return json.dumps(log_entry, default=str, sort_keys=True)


class GorextLogger:
    """Logger wrapper whose methods accept keyword extra fields."""

    def __init__(self, name: str, log_level: str = DEFAULT_LEVEL, log_file: Optional[str] = None):
        """
        Initialize the logger.

        Args:
            name: Logger name (dotted, rooted at ``gorext``)
            log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_file: Optional log file path
        """
        self.name = name
        self.log_level = getattr(logging, log_level.upper(), logging.WARNING)
        self.log_file = log_file

        self.logger = logging.getLogger(name)
        self.logger.setLevel(self.log_level)

        # Prevent duplicate handlers
        if not self.logger.handlers:
            self._setup_handlers()

    def _setup_handlers(self) -> None:
        """Setup console and file handlers."""
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(self.log_level)
        console_handler.setFormatter(
            ColoredFormatter(
                "%(asctime)s %(levelname)s %(name)s: %(message)s",
                datefmt="%H:%M:%S",
                use_color=sys.stderr.isatty(),
            )
        )
        self.logger.addHandler(console_handler)

        if self.log_file:
            log_path = Path(self.log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.handlers.RotatingFileHandler(
                self.log_file,
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=5
            )
            file_handler.setLevel(self.log_level)
            file_handler.setFormatter(JSONFormatter())
            self.logger.addHandler(file_handler)

        self.logger.propagate = False

    def debug(self, message: str, **kwargs: Any) -> None:
        self._log_with_extra(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        self._log_with_extra(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        self._log_with_extra(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        self._log_with_extra(logging.ERROR, message, **kwargs)

    def _log_with_extra(self, level: int, message: str, **kwargs: Any) -> None:
        if not self.logger.isEnabledFor(level):
            return
        if kwargs:
            record = self.logger.makeRecord(self.name, level, "", 0, message, (), None)
            record.extra_fields = kwargs
            self.logger.handle(record)
        else:
            self.logger.log(level, message)


def get_logger(name: str, log_level: Optional[str] = None, log_file: Optional[str] = None) -> GorextLogger:
    """
    Get a configured logger instance.

    Level and file default to the ``GOREXT_LOG_LEVEL`` and ``GOREXT_LOG_FILE``
    environment variables.
    """
    if log_level is None:
        log_level = os.getenv(LOG_LEVEL_ENV, DEFAULT_LEVEL)

    if log_file is None:
        log_file = os.getenv(LOG_FILE_ENV)

    return GorextLogger(name, log_level, log_file)


def setup_logging(
    default_level: Optional[str] = None,
    log_file: Optional[str] = None,
) -> None:
    """
    Setup global logging configuration.

    Args:
        default_level: Default logging level; the environment wins when unset
        log_file: Optional log file path
    """
    level = default_level or os.getenv(LOG_LEVEL_ENV, DEFAULT_LEVEL)
    logging.getLogger("gorext").setLevel(getattr(logging, level.upper(), logging.WARNING))

    if log_file:
        os.environ[LOG_FILE_ENV] = log_file
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
    os.environ[LOG_LEVEL_ENV] = level


def log_function_call(logger: GorextLogger, func_name: str, **kwargs: Any) -> None:
    """Log function call with parameters."""
    logger.debug(f"Calling {func_name}", function=func_name, parameters=kwargs)


def log_function_result(logger: GorextLogger, func_name: str, result: Any = None, **kwargs: Any) -> None:
    """Log function result."""
    logger.debug(f"Function {func_name} completed", function=func_name, result=result, **kwargs)


def log_error_with_context(logger: GorextLogger, error: Exception, context: str, **kwargs: Any) -> None:
    """Log error with context information."""
    logger.error(
        f"Error in {context}: {str(error)}",
        error_type=type(error).__name__,
        context=context,
        **kwargs
    )
