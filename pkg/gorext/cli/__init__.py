"""
Command line interface for gorext: model checks, Ext reports, invariants,
the result cache and the built-in model catalog.
"""

from ..utils.logging_config import get_logger
from .cache import ResultCache, cache_key
from .main import ExitCodeGroup, cli, exit_code_for, main

logger = get_logger("gorext.cli")

__all__ = ["ResultCache", "cache_key", "ExitCodeGroup", "cli", "exit_code_for", "main"]
