"""
Topological complexity invariants.

Zero-divisor cup length, the lower bound HTC computed on (ΛV)^{⊗n}, their
analogues on the Ext algebra and the Gorenstein membership criterion that
compares them.
"""

from ..utils.logging_config import get_logger
from .ideals import IdealPowerBasis, IdealPowers
from .invariants import (
    DEFAULT_M_MAX,
    CriterionResult,
    InvariantSummary,
    InvariantValue,
    compute_invariants,
    ext_product_length,
    ext_zcl,
    htc_ext,
    htc_lower,
    ideal_power_membership,
    product_length,
    thm_criterion,
    zcl,
)
from .tensor_power import TensorPowerAlgebra, copy_name, mu_n_kernel

logger = get_logger("gorext.tcinv")

__all__ = [
    "IdealPowerBasis",
    "IdealPowers",
    "DEFAULT_M_MAX",
    "CriterionResult",
    "InvariantSummary",
    "InvariantValue",
    "compute_invariants",
    "ext_product_length",
    "ext_zcl",
    "htc_ext",
    "htc_lower",
    "ideal_power_membership",
    "product_length",
    "thm_criterion",
    "zcl",
    "TensorPowerAlgebra",
    "copy_name",
    "mu_n_kernel",
]
