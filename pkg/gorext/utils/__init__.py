"""
Utilities module for gorext.

Logging helpers shared by every subpackage.
"""

from .logging_config import (
    get_logger,
    setup_logging,
    log_function_call,
    log_function_result,
    log_error_with_context,
    GorextLogger,
    ColoredFormatter,
    JSONFormatter,
)

__all__ = [
    "get_logger",
    "setup_logging",
    "log_function_call",
    "log_function_result",
    "log_error_with_context",
    "GorextLogger",
    "ColoredFormatter",
    "JSONFormatter",
]
