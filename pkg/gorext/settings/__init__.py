"""
Settings for gorext runs.

YAML settings shipped under ``gorext/config`` are loaded and validated, run
options become a pydantic RunConfig, and EngineFactory produces the reports.
"""

from ..utils.logging_config import get_logger
from .factory import EngineFactory
from .loaders import CACHE_ENV, CONFIG_ENV, SettingsLoader
from .schemas import (
    DEGREE_CONVENTION,
    CheckReport,
    CriterionEntry,
    DualityEntry,
    EvaluationEntry,
    ExtReport,
    InvariantEntry,
    InvariantReport,
    ModelInfo,
    RunConfig,
    VerdictEntry,
)
from .validators import SettingsValidator

logger = get_logger("gorext.settings")

__all__ = [
    "EngineFactory",
    "CACHE_ENV",
    "CONFIG_ENV",
    "SettingsLoader",
    "DEGREE_CONVENTION",
    "CheckReport",
    "CriterionEntry",
    "DualityEntry",
    "EvaluationEntry",
    "ExtReport",
    "InvariantEntry",
    "InvariantReport",
    "ModelInfo",
    "RunConfig",
    "VerdictEntry",
    "SettingsValidator",
]
