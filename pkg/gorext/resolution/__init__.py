"""
Semi-free resolutions of the ground field.

Acyclic closures of Adams-Hilton and Sullivan presentations, the tensor square
used for products, comparison lifts between closures and acyclicity checks.
"""

from ..utils.logging_config import get_logger
from .adams_hilton import ah_acyclic_closure, check_contraction, contract, contraction
from .closure import (
    ADAMS_HILTON,
    SULLIVAN,
    TENSOR_SQUARE,
    AcyclicClosure,
    ModuleElement,
    ModuleKey,
    SemibasisElement,
    add_module,
)
from .lifts import SEEDS, ComparisonLift, lift_comparison, solve_order
from .sullivan import (
    closure_order,
    default_margin,
    default_weight_bound,
    sullivan_acyclic_closure,
    tensor_square_resolution,
)
from .verify import AcyclicityCheck, verify_acyclic

logger = get_logger("gorext.resolution")

__all__ = [
    "ah_acyclic_closure",
    "check_contraction",
    "contract",
    "contraction",
    "ADAMS_HILTON",
    "SULLIVAN",
    "TENSOR_SQUARE",
    "AcyclicClosure",
    "ModuleElement",
    "ModuleKey",
    "SemibasisElement",
    "add_module",
    "SEEDS",
    "ComparisonLift",
    "lift_comparison",
    "solve_order",
    "closure_order",
    "default_margin",
    "default_weight_bound",
    "sullivan_acyclic_closure",
    "tensor_square_resolution",
    "AcyclicityCheck",
    "verify_acyclic",
]
