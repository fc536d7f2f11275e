"""
Model-description language and report serialization for gorext.
"""

from ..utils.logging_config import get_logger
from .parser import (
    FORMAT_VERSION,
    ModelDocument,
    parse_document,
    parse_model,
    parse_model_file,
    presentation_from_document,
    tokenize,
)
from .printer import print_model
from .reports import OUTPUT_FORMATS, canonical_json, emit_report, report_data

logger = get_logger("gorext.modelparse")

__all__ = [
    "FORMAT_VERSION",
    "ModelDocument",
    "parse_document",
    "parse_model",
    "parse_model_file",
    "presentation_from_document",
    "tokenize",
    "print_model",
    "OUTPUT_FORMATS",
    "canonical_json",
    "emit_report",
    "report_data",
]
