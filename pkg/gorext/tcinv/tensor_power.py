#!/usr/bin/env python3
from __future__ import annotations

from typing import Any, Dict, List, Sequence

from sympy.polys.matrices.sdm import SDM

from ..algebra import (
    DgaPresentation,
    FreeCommutativeAlgebra,
    Generator,
    Poly,
    substitute,
)
from ..errors import InvariantViolation
from ..linalg import Vector, matrix_from_columns, matvec, row_reduce
from ..utils.logging_config import get_logger

logger = get_logger("gorext.tcinv.tensor_power")


def copy_name(name: str, index: int) -> str:
    return f"{name}[{index}]"


class TensorPowerAlgebra:
    """(ΛV)^{⊗n} presented as ΛV' on n disjoint copies of the generators.

    Copy i of v is named ``v[i]``; ``a_1 ⊗ ... ⊗ a_n`` corresponds to the
    product of the copies in order, so the Koszul signs come from the
    commutative multiplication.
    """

    def __init__(self, base: DgaPresentation, n: int):
        if not base.commutative:
            raise ValueError(f"tensor powers need a sullivan presentation, got {base.flavor.value}")
        if n < 2:
            raise ValueError(f"n must be at least 2, got {n}")
        self.base = base
        self.n = n
        self.field_spec = base.field_spec
        gens = [
            Generator(copy_name(g.name, i), g.degree)
            for i in range(1, n + 1)
            for g in base.generators
        ]
        ordered = sorted(gens, key=lambda g: (g.degree, g.name))
        scratch = FreeCommutativeAlgebra(ordered, self.field_spec)
        self._copy_images: List[List[Poly]] = [
            [scratch.generator_by_name(copy_name(g.name, i)) for g in base.generators]
            for i in range(1, n + 1)
        ]
        differential = {}
        for i in range(n):
            for g, image in zip(base.generators, base.d.images):
                differential[copy_name(g.name, i + 1)] = substitute(
                    base.algebra, scratch, self._copy_images[i], image
                )
        self.presentation = DgaPresentation(
            self.field_spec,
            base.flavor,
            ordered,
            differential,
            assume_char_range=True,
            name=f"{base.name or 'model'}^{n}",
        )
        self.algebra = self.presentation.algebra
        base_index = {g.name: j for j, g in enumerate(base.generators)}
        self._fold_images: List[Poly] = []
        for g in self.algebra.generators:
            original = g.name[: g.name.rindex("[")]
            self._fold_images.append(base.algebra.generator(base_index[original]))
        self._fold_cache: Dict[Any, Poly] = {}
        self._copy_caches: List[Dict[Any, Poly]] = [{} for _ in range(n)]

    # elements ----------------------------------------------------------------

    def copy(self, poly: Poly, index: int) -> Poly:
        """The image of ``poly`` in tensor factor ``index`` (1-based)."""
        return substitute(
            self.base.algebra, self.algebra, self._copy_images[index - 1], poly,
            self._copy_caches[index - 1],
        )

    def tensor(self, parts: Sequence[Poly]) -> Poly:
        if len(parts) != self.n:
            raise ValueError(f"expected {self.n} tensor factors, got {len(parts)}")
        return self.algebra.multiply_many(self.copy(p, i + 1) for i, p in enumerate(parts))

    def tensor_power_of(self, poly: Poly) -> Poly:
        """poly ⊗ ... ⊗ poly."""
        return self.tensor([poly] * self.n)

    def fold(self, poly: Poly) -> Poly:
        """μ_n: copy i of v ↦ v."""
        return substitute(self.algebra, self.base.algebra, self._fold_images, poly, self._fold_cache)

    def to_vector(self, poly: Poly, degree: int) -> Vector:
        return self.algebra.to_vector(poly, degree)

    def from_vector(self, vec: Vector, degree: int) -> Poly:
        return self.algebra.from_vector(vec, degree)

    def multiply_vectors(self, da: int, u: Vector, db: int, v: Vector) -> Vector:
        product = self.algebra.multiply(self.from_vector(u, da), self.from_vector(v, db))
        return self.to_vector(product, da + db)

    def dim(self, degree: int) -> int:
        return len(self.algebra.basis_of_degree(degree))

    # fold map -------------------------------------------------------------------

    def mu_matrix(self, degree: int) -> SDM:
        base = self.base.algebra
        columns = [
            base.to_vector(self.fold({key: self.field_spec.one}), degree)
            for key in self.algebra.basis_of_degree(degree)
        ]
        return matrix_from_columns(columns, len(base.basis_of_degree(degree)), self.field_spec)


def mu_n_kernel(tp: TensorPowerAlgebra, degree: int) -> List[Vector]:
    """Exact basis of ker μ_n in one degree."""
    if degree <= 0 or not tp.dim(degree):
        return []
    matrix = tp.mu_matrix(degree)
    kernel = row_reduce(matrix).kernel_basis
    for vec in kernel:
        if matvec(matrix, vec):
            raise InvariantViolation(f"kernel vector of the fold map is not killed in degree {degree}")
    return kernel
