"""
gorext - exact Eilenberg-Moore Ext of Sullivan and Adams-Hilton models, with
Gorenstein tests, formal dimension and topological complexity bounds.
"""

__version__ = "0.1.0"

from .utils.logging_config import setup_logging, get_logger

# Initialize default logging
setup_logging()

from .algebra import DgaPresentation, build_presentation  # noqa: E402
from .extcalc import ext_algebra_table, ext_groups  # noqa: E402
from .modelparse import parse_model  # noqa: E402
from .settings import EngineFactory  # noqa: E402

__all__ = [
    "DgaPresentation",
    "build_presentation",
    "ext_algebra_table",
    "ext_groups",
    "parse_model",
    "EngineFactory",
    "setup_logging",
    "get_logger",
]
