"""
Exact linear algebra for gorext.

Field specifications over Q and F_p, sparse matrices backed by sympy's SDM,
incremental echelon bases, and homology of finite graded chain complexes.
"""

from ..utils.logging_config import get_logger
from .fields import FieldSpec, PRIME_FIELD, RATIONALS
from .matrices import (
    EchelonBasis,
    RowReduction,
    Vector,
    as_vector,
    column,
    complement_basis,
    dense,
    is_zero_matrix,
    matmul,
    matrix_from_columns,
    matrix_from_dense,
    matvec,
    rank,
    row_reduce,
    solve_linear,
    span_rank,
    sparse_matrix,
    zero_matrix,
)
from .complexes import (
    ChainComplex,
    DegreeMap,
    GradedSpace,
    Homology,
    check_chain_map,
    homology,
    homology_at,
    induced_map_injective,
    quotient_complex,
)

logger = get_logger("gorext.linalg")

__all__ = [
    "FieldSpec",
    "PRIME_FIELD",
    "RATIONALS",
    "EchelonBasis",
    "RowReduction",
    "Vector",
    "as_vector",
    "column",
    "complement_basis",
    "dense",
    "is_zero_matrix",
    "matmul",
    "matrix_from_columns",
    "matrix_from_dense",
    "matvec",
    "rank",
    "row_reduce",
    "solve_linear",
    "span_rank",
    "sparse_matrix",
    "zero_matrix",
    "ChainComplex",
    "DegreeMap",
    "GradedSpace",
    "Homology",
    "check_chain_map",
    "homology",
    "homology_at",
    "induced_map_injective",
    "quotient_complex",
]
