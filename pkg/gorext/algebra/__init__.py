"""
Free graded algebras and DGA presentations.

Free graded-commutative algebras (Sullivan side) and free tensor algebras
(Adams-Hilton side) with Koszul-signed multiplication, derivations extended by
the Leibniz rule, and validated presentations.
"""

from ..utils.logging_config import get_logger
from .graded import (
    Derivation,
    FreeCommutativeAlgebra,
    FreeGradedAlgebra,
    FreeTensorAlgebra,
    Generator,
    Key,
    Poly,
    add_into,
    apply_derivation,
    basis_of_degree,
    enumerate_weighted,
    multiply,
    scale_poly,
    sub_poly,
    substitute,
)
from .finite import DualityCheck, FiniteGradedAlgebra, FiniteTensorPower, tensor_power
from .presentation import (
    DgaPresentation,
    DifferentialCheck,
    Flavor,
    build_presentation,
    check_differential,
    extend_presentation,
    poly_from_terms,
)

logger = get_logger("gorext.algebra")

__all__ = [
    "Derivation",
    "FreeCommutativeAlgebra",
    "FreeGradedAlgebra",
    "FreeTensorAlgebra",
    "Generator",
    "Key",
    "Poly",
    "add_into",
    "apply_derivation",
    "basis_of_degree",
    "enumerate_weighted",
    "multiply",
    "scale_poly",
    "sub_poly",
    "substitute",
    "DualityCheck",
    "FiniteGradedAlgebra",
    "FiniteTensorPower",
    "tensor_power",
    "DgaPresentation",
    "DifferentialCheck",
    "Flavor",
    "build_presentation",
    "check_differential",
    "extend_presentation",
    "poly_from_terms",
]
