#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices.sdm import SDM

from ..linalg import FieldSpec, Vector, matrix_from_columns, row_reduce, span_rank
from ..utils.logging_config import get_logger

logger = get_logger("gorext.algebra.finite")

BasisRef = Tuple[int, int]
TableKey = Tuple[int, int, int, int]


def _accumulate(target: Vector, index: int, value: Any) -> None:
    total = target.get(index)
    total = value if total is None else total + value
    if total:
        target[index] = total
    else:
        target.pop(index, None)


@dataclass(frozen=True)
class DualityCheck:
    """Verdict of the Poincaré duality test on a finite graded algebra."""

    ok: bool
    top_degree: Optional[int] = None
    reason: str = ""
    failed_degree: Optional[int] = None


@dataclass
class FiniteGradedAlgebra:
    """Graded algebra with a finite basis per degree and explicit structure constants.

    ``table[(da, i, db, j)]`` is the product of basis element i of degree da
    with basis element j of degree db, as a vector in degree da + db; missing
    entries are zero. ``finite`` records whether the basis is taken to be the
    whole algebra rather than a window of it; for cohomology algebras it is
    the verdict of ``finiteness_heuristic``, never a proof.
    """

    field_spec: FieldSpec
    basis: Dict[int, Tuple[str, ...]]
    table: Dict[TableKey, Vector] = field(default_factory=dict)
    unit: Optional[Vector] = None
    finite: bool = True

    def __post_init__(self) -> None:
        self.basis = {d: tuple(labels) for d, labels in self.basis.items() if labels}
        for (da, i, db, j), vec in self.table.items():
            if i >= self.dim(da) or j >= self.dim(db):
                raise ValueError(f"structure constant for missing basis element {(da, i, db, j)}")
            if vec and max(vec) >= self.dim(da + db):
                raise ValueError(f"product of degrees {da} and {db} leaves the basis")

    def dim(self, degree: int) -> int:
        return len(self.basis.get(degree, ()))

    def degrees(self) -> List[int]:
        return sorted(self.basis)

    @property
    def total_dimension(self) -> int:
        return sum(len(labels) for labels in self.basis.values())

    @property
    def top_degree(self) -> Optional[int]:
        return max(self.basis) if self.basis else None

    def label(self, degree: int, index: int) -> str:
        return self.basis[degree][index]

    def basis_product(self, da: int, i: int, db: int, j: int) -> Vector:
        return self.table.get((da, i, db, j), {})

    def multiply(self, da: int, u: Vector, db: int, v: Vector) -> Vector:
        out: Vector = {}
        if not self.dim(da + db):
            return out
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.basis_product(da, i, db, j).items():
                    _accumulate(out, k, a * b * c)
        return out

    def fold(self, factors: Sequence[Tuple[int, Vector]]) -> Tuple[int, Vector]:
        """Left-to-right product of homogeneous factors."""
        if not factors:
            if self.unit is None:
                raise ValueError("empty product in an algebra without unit")
            return 0, dict(self.unit)
        degree, acc = factors[0]
        acc = dict(acc)
        for d, v in factors[1:]:
            acc = self.multiply(degree, acc, d, v)
            degree += d
        return degree, acc

    def _unit_vector(self, degree: int, index: int) -> Vector:
        return {index: self.field_spec.one}

    def associativity_defect(self) -> Optional[Tuple[BasisRef, BasisRef, BasisRef]]:
        refs = [(d, i) for d in self.degrees() for i in range(self.dim(d))]
        for a, b, c in cartesian(refs, refs, refs):
            ab = self.multiply(a[0], self._unit_vector(*a), b[0], self._unit_vector(*b))
            left = self.multiply(a[0] + b[0], ab, c[0], self._unit_vector(*c))
            bc = self.multiply(b[0], self._unit_vector(*b), c[0], self._unit_vector(*c))
            right = self.multiply(a[0], self._unit_vector(*a), b[0] + c[0], bc)
            if left != right:
                return a, b, c
        return None

    def commutativity_defect(self) -> Optional[Tuple[BasisRef, BasisRef]]:
        refs = [(d, i) for d in self.degrees() for i in range(self.dim(d))]
        for a, b in cartesian(refs, refs):
            ab = self.basis_product(a[0], a[1], b[0], b[1])
            ba = self.basis_product(b[0], b[1], a[0], a[1])
            sign = self.field_spec.sign(a[0] * b[0])
            if ab != {k: sign * c for k, c in ba.items()}:
                return a, b
        return None

    def poincare_duality(self) -> DualityCheck:
        """Finite, one-dimensional top degree N, and <b, c> = coefficient of bc on the top class perfect."""
        if not self.finite:
            return DualityCheck(False, reason="cohomology fails the finiteness heuristic")
        top = self.top_degree
        if top is None:
            return DualityCheck(False, reason="algebra is zero")
        if self.dim(top) != 1:
            return DualityCheck(False, top, f"top degree {top} has dimension {self.dim(top)}")
        for k in self.degrees():
            if self.dim(k) != self.dim(top - k):
                return DualityCheck(False, top, "dimensions are not symmetric", k)
            rows = []
            for i in range(self.dim(k)):
                rows.append(
                    {j: self.basis_product(k, i, top - k, j).get(0, self.field_spec.zero)
                     for j in range(self.dim(top - k))}
                )
            if span_rank(rows, self.field_spec) != self.dim(k):
                return DualityCheck(False, top, "pairing is degenerate", k)
        return DualityCheck(True, top)

    def to_json(self) -> Dict[str, Any]:
        products = []
        for (da, i, db, j), vec in sorted(self.table.items()):
            if vec:
                products.append({
                    "left": self.label(da, i),
                    "right": self.label(db, j),
                    "value": {self.label(da + db, k): self.field_spec.to_json(c)
                              for k, c in sorted(vec.items())},
                })
        return {
            "basis": {str(d): list(labels) for d, labels in sorted(self.basis.items())},
            "products": products,
            "finite": self.finite,
            "finite_check": "heuristic",
        }


@dataclass
class FiniteTensorPower:
    """A^{⊗n} with the Koszul sign rule and the fold map μ_n : A^{⊗n} → A."""

    base: FiniteGradedAlgebra
    n: int
    algebra: FiniteGradedAlgebra
    factors: Dict[int, List[Tuple[BasisRef, ...]]]

    def mu(self, degree: int) -> SDM:
        base = self.base
        columns = []
        for refs in self.factors.get(degree, []):
            _, value = base.fold([(d, {i: base.field_spec.one}) for d, i in refs])
            columns.append(value)
        return matrix_from_columns(columns, base.dim(degree), base.field_spec)

    def kernel(self, degree: int) -> List[Vector]:
        if not self.algebra.dim(degree):
            return []
        return row_reduce(self.mu(degree)).kernel_basis

    def kernel_by_degree(self) -> Dict[int, List[Vector]]:
        return {d: self.kernel(d) for d in self.algebra.degrees()}

    def pure_tensor(self, parts: Sequence[Tuple[int, Vector]]) -> Tuple[int, Vector]:
        """a_1 ⊗ ... ⊗ a_n of homogeneous factors, in the basis of the power."""
        degree = sum(d for d, _ in parts)
        lookup = {refs: k for k, refs in enumerate(self.factors.get(degree, []))}
        out: Vector = {}
        choices = [[((d, i), c) for i, c in v.items()] for d, v in parts]
        for combo in cartesian(*choices):
            refs = tuple(ref for ref, _ in combo)
            coeff = self.base.field_spec.one
            for _, c in combo:
                coeff = coeff * c
            if refs in lookup:
                _accumulate(out, lookup[refs], coeff)
        return degree, out


def tensor_power(base: FiniteGradedAlgebra, n: int) -> FiniteTensorPower:
    if n < 1:
        raise ValueError(f"tensor power needs n >= 1, got {n}")
    field_spec = base.field_spec
    refs = [(d, i) for d in base.degrees() for i in range(base.dim(d))]
    factors: Dict[int, List[Tuple[BasisRef, ...]]] = {}
    for combo in cartesian(refs, repeat=n):
        factors.setdefault(sum(d for d, _ in combo), []).append(combo)
    lookup = {
        combo: (degree, k) for degree, combos in factors.items() for k, combo in enumerate(combos)
    }
    basis = {
        degree: tuple("⊗".join(base.label(d, i) for d, i in combo) for combo in combos)
        for degree, combos in factors.items()
    }

    table: Dict[TableKey, Vector] = {}
    for left, (da, i) in lookup.items():
        for right, (db, j) in lookup.items():
            # (a1⊗a2)(b1⊗b2) = (-1)^{|a2||b1|} a1b1 ⊗ a2b2
            exponent = sum(
                left[k][0] * right[m][0] for k in range(n) for m in range(k)
            )
            parts: List[Iterable[Tuple[BasisRef, Any]]] = []
            for a, b in zip(left, right):
                product = base.basis_product(a[0], a[1], b[0], b[1])
                parts.append([((a[0] + b[0], k), c) for k, c in product.items()])
            out: Vector = {}
            for combo in cartesian(*parts):
                target = tuple(ref for ref, _ in combo)
                coeff = field_spec.sign(exponent)
                for _, c in combo:
                    coeff = coeff * c
                _accumulate(out, lookup[target][1], coeff)
            if out:
                table[(da, i, db, j)] = out

    unit = None
    if base.unit is not None:
        power = FiniteTensorPower(base, n, FiniteGradedAlgebra(field_spec, basis), factors)
        unit = power.pure_tensor([(0, base.unit)] * n)[1]
    algebra = FiniteGradedAlgebra(field_spec, basis, table, unit, base.finite)
    return FiniteTensorPower(base, n, algebra, factors)
