"""
Built-in model families: spheres, the two-cell complexes, suspensions,
products and the point.
"""

from ..utils.logging_config import get_logger
from .builders import (
    point_model,
    product_model,
    sphere_model,
    suspension_model,
    two_cell_model,
    with_contractible_pair,
)
from .catalog import RECIPES, ModelRecipe, build_builtin, list_builtins, split_builtin

logger = get_logger("gorext.models")

__all__ = [
    "point_model",
    "product_model",
    "sphere_model",
    "suspension_model",
    "two_cell_model",
    "with_contractible_pair",
    "RECIPES",
    "ModelRecipe",
    "build_builtin",
    "list_builtins",
    "split_builtin",
]
