#!/usr/bin/env python3
from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.matrices.sdm import SDM

from .fields import FieldSpec

Vector = Dict[int, Any]
VectorLike = Union[Mapping[int, Any], Sequence[Any]]


def _clean(vec: Mapping[int, Any]) -> Vector:
    return {i: a for i, a in vec.items() if a}


def as_vector(values: VectorLike, field_spec: FieldSpec) -> Vector:
    """Sparse vector from a mapping or a dense sequence of scalars."""
    if isinstance(values, Mapping):
        return _clean({int(i): field_spec.element(a) if isinstance(a, (int, str)) else a
                       for i, a in values.items()})
    return _clean({i: field_spec.element(a) if isinstance(a, (int, str)) else a
                   for i, a in enumerate(values)})


def dense(vec: Mapping[int, Any], length: int, field_spec: FieldSpec) -> List[Any]:
    return [vec.get(i, field_spec.zero) for i in range(length)]


def sparse_matrix(
    rows: Mapping[int, Mapping[int, Any]],
    shape: Tuple[int, int],
    field_spec: FieldSpec,
) -> SDM:
    """SDM from a row dictionary, dropping explicit zeros."""
    data: Dict[int, Dict[int, Any]] = {}
    for i, row in rows.items():
        cleaned = _clean(row)
        if cleaned:
            data[i] = cleaned
    return SDM(data, shape, field_spec.domain)


def matrix_from_dense(entries: Sequence[Sequence[Any]], field_spec: FieldSpec) -> SDM:
    nrows = len(entries)
    ncols = len(entries[0]) if nrows else 0
    rows = {
        i: {j: field_spec.element(a) if isinstance(a, (int, str)) else a
            for j, a in enumerate(row)}
        for i, row in enumerate(entries)
    }
    return sparse_matrix(rows, (nrows, ncols), field_spec)


def matrix_from_columns(
    columns: Sequence[Mapping[int, Any]], nrows: int, field_spec: FieldSpec
) -> SDM:
    rows: Dict[int, Dict[int, Any]] = {}
    for j, col in enumerate(columns):
        for i, a in col.items():
            if a:
                rows.setdefault(i, {})[j] = a
    return SDM(rows, (nrows, len(columns)), field_spec.domain)


def zero_matrix(shape: Tuple[int, int], field_spec: FieldSpec) -> SDM:
    return SDM({}, shape, field_spec.domain)


def column(matrix: SDM, j: int) -> Vector:
    return {i: row[j] for i, row in matrix.items() if j in row and row[j]}


def matvec(matrix: SDM, vec: Mapping[int, Any]) -> Vector:
    """Sparse product ``matrix @ vec``."""
    out: Vector = {}
    for i, row in matrix.items():
        acc = None
        for j, a in row.items():
            b = vec.get(j)
            if b:
                acc = a * b if acc is None else acc + a * b
        if acc:
            out[i] = acc
    return out


def matmul(left: SDM, right: SDM) -> SDM:
    if left.shape[1] != right.shape[0]:
        raise ValueError(f"cannot compose {left.shape} with {right.shape}")
    return left.matmul(right)


def is_zero_matrix(matrix: SDM) -> bool:
    return all(not a for row in matrix.values() for a in row.values())


@dataclass(frozen=True)
class RowReduction:
    """Exact reduction of a matrix: rank, kernel basis and image basis."""

    rank: int
    pivots: Tuple[int, ...]
    kernel_basis: List[Vector]
    image_basis: List[Vector]
    shape: Tuple[int, int]


def row_reduce(matrix: SDM) -> RowReduction:
    """Rank, kernel and image of ``matrix``.

    Kernel vectors live in the column space; image vectors are the pivot
    columns of the original matrix, so they are independent and span the image.
    """
    nrows, ncols = matrix.shape
    if ncols == 0:
        return RowReduction(0, (), [], [], matrix.shape)
    if nrows == 0 or is_zero_matrix(matrix):
        kernel = [{j: matrix.domain.one} for j in range(ncols)]
        return RowReduction(0, (), kernel, [], matrix.shape)

    null, nonpivots = matrix.nullspace()
    free = set(nonpivots)
    pivots = [j for j in range(ncols) if j not in free]
    kernel = [_clean(null[k]) for k in sorted(null.keys())]
    image = [column(matrix, j) for j in pivots]
    return RowReduction(len(pivots), tuple(pivots), kernel, image, matrix.shape)


def rank(matrix: SDM) -> int:
    return row_reduce(matrix).rank


def solve_linear(matrix: SDM, rhs: VectorLike, field_spec: FieldSpec) -> Optional[Vector]:
    """Return some ``x`` with ``matrix @ x == rhs``, or None when rhs is not in the image."""
    nrows, ncols = matrix.shape
    if not isinstance(rhs, Mapping) and len(rhs) != nrows:
        raise ValueError(f"right-hand side has length {len(rhs)}, expected {nrows}")
    b = as_vector(rhs, field_spec)
    if any(i < 0 or i >= nrows for i in b):
        raise ValueError(f"right-hand side index out of range for {nrows} rows")
    if not b:
        return {}
    if ncols == 0:
        return None

    augmented: Dict[int, Dict[int, Any]] = {i: dict(row) for i, row in matrix.items()}
    for i, a in b.items():
        augmented.setdefault(i, {})[ncols] = a
    reduced, pivots = SDM(augmented, (nrows, ncols + 1), matrix.domain).rref()
    if pivots and pivots[-1] == ncols:
        return None

    solution: Vector = {}
    for i, j in enumerate(pivots):
        row = reduced.get(i, {})
        value = row.get(ncols)
        if value:
            solution[j] = value / row[j]
    return solution


@dataclass
class EchelonBasis:
    """Incrementally grown basis in echelon form over a field.

    Each stored row has its pivot at its smallest column and remembers the
    combination of inserted vectors it came from, so membership tests can also
    return coordinates.
    """

    field_spec: FieldSpec
    _rows: Dict[int, Vector] = field(default_factory=dict)
    _combos: Dict[int, Vector] = field(default_factory=dict)
    _order: List[int] = field(default_factory=list)
    _count: int = 0

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return list(self._order)

    @property
    def inserted(self) -> int:
        return self._count

    def _reduce(self, vec: Mapping[int, Any], combo: Vector) -> Tuple[Vector, Vector]:
        r = _clean(vec)
        for pc in self._order:
            if not r:
                break
            coeff = r.get(pc)
            if not coeff:
                continue
            for c, a in self._rows[pc].items():
                value = r.get(c, self.field_spec.zero) - coeff * a
                if value:
                    r[c] = value
                else:
                    r.pop(c, None)
            for c, a in self._combos[pc].items():
                value = combo.get(c, self.field_spec.zero) - coeff * a
                if value:
                    combo[c] = value
                else:
                    combo.pop(c, None)
        return r, combo

    def reduce(self, vec: Mapping[int, Any]) -> Vector:
        """Remainder of ``vec`` after elimination against the stored rows."""
        return self._reduce(vec, {})[0]

    def contains(self, vec: Mapping[int, Any]) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping[int, Any]) -> bool:
        """Insert ``vec``; True when it enlarged the span."""
        index = self._count
        self._count += 1
        r, combo = self._reduce(vec, {index: self.field_spec.one})
        if not r:
            return False
        pc = min(r)
        inv = self.field_spec.one / r[pc]
        self._rows[pc] = {c: a * inv for c, a in r.items()}
        self._combos[pc] = {c: a * inv for c, a in combo.items()}
        insort(self._order, pc)
        return True

    def extend(self, vectors: Iterable[Mapping[int, Any]]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def express(self, vec: Mapping[int, Any]) -> Optional[Vector]:
        """Coefficients over the inserted vectors (by insertion index), or None."""
        r, combo = self._reduce(vec, {})
        if r:
            return None
        return {c: -a for c, a in combo.items() if a}


def span_rank(vectors: Iterable[Mapping[int, Any]], field_spec: FieldSpec) -> int:
    basis = EchelonBasis(field_spec)
    basis.extend(vectors)
    return len(basis)


def complement_basis(
    ambient: Sequence[Mapping[int, Any]],
    subspace: Iterable[Mapping[int, Any]],
    field_spec: FieldSpec,
) -> List[Vector]:
    """Vectors of ``ambient`` spanning a complement of ``subspace`` inside their span."""
    basis = EchelonBasis(field_spec)
    basis.extend(subspace)
    return [_clean(v) for v in ambient if basis.add(v)]
