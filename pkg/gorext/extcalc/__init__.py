"""
Eilenberg-Moore Ext and its algebra structure.

Hom complexes over acyclic closures, Ext groups with stability flags, the
evaluation map, Gorenstein and formal-dimension verdicts, and the product on
the commutative side.
"""

from ..utils.logging_config import get_logger
from .cohomology import (
    base_class,
    cohomology_algebra,
    default_base_window,
    elliptic_formal_dimension,
    finiteness_heuristic,
)
from .ext import (
    EXACT,
    STABLE,
    UNSTABLE,
    EvaluationImage,
    EvaluationMap,
    ExtAlgebra,
    FormalDimension,
    GorensteinVerdict,
    evaluation_map,
    ext_groups,
    fd_bound,
    formal_dimension,
    gorenstein_test,
)
from .hom import HomComplex, HomElement
from .product import ProductContext, class_products, ext_algebra_table, ext_product, product_context

logger = get_logger("gorext.extcalc")

__all__ = [
    "base_class",
    "cohomology_algebra",
    "default_base_window",
    "elliptic_formal_dimension",
    "finiteness_heuristic",
    "EXACT",
    "STABLE",
    "UNSTABLE",
    "EvaluationImage",
    "EvaluationMap",
    "ExtAlgebra",
    "FormalDimension",
    "GorensteinVerdict",
    "evaluation_map",
    "ext_groups",
    "fd_bound",
    "formal_dimension",
    "gorenstein_test",
    "HomComplex",
    "HomElement",
    "ProductContext",
    "class_products",
    "ext_algebra_table",
    "ext_product",
    "product_context",
]
