#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices.sdm import SDM

from ..errors import ChainMapError, NotAComplexError
from .fields import FieldSpec
from .matrices import (
    EchelonBasis,
    Vector,
    is_zero_matrix,
    matmul,
    matrix_from_columns,
    matvec,
    row_reduce,
    zero_matrix,
)


@dataclass(frozen=True)
class GradedSpace:
    """Finite basis per integer degree; labels are opaque but distinct per degree."""

    basis: Mapping[int, Tuple[Hashable, ...]]
    _index: Dict[int, Dict[Hashable, int]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        index: Dict[int, Dict[Hashable, int]] = {}
        for degree, labels in self.basis.items():
            lookup = {label: i for i, label in enumerate(labels)}
            if len(lookup) != len(labels):
                raise ValueError(f"duplicate basis labels in degree {degree}")
            index[degree] = lookup
        object.__setattr__(self, "_index", index)

    def dim(self, degree: int) -> int:
        return len(self.basis.get(degree, ()))

    def labels(self, degree: int) -> Tuple[Hashable, ...]:
        return tuple(self.basis.get(degree, ()))

    def index(self, degree: int, label: Hashable) -> int:
        return self._index[degree][label]

    def position(self, degree: int, label: Hashable) -> Optional[int]:
        return self._index.get(degree, {}).get(label)

    def degrees(self) -> List[int]:
        return sorted(d for d, labels in self.basis.items() if labels)


@dataclass(frozen=True)
class DegreeMap:
    """Linear map of graded spaces of a fixed degree ``shift``."""

    source: GradedSpace
    target: GradedSpace
    shift: int
    blocks: Mapping[int, SDM]
    field_spec: FieldSpec

    def __post_init__(self) -> None:
        for degree, block in self.blocks.items():
            expected = (self.target.dim(degree + self.shift), self.source.dim(degree))
            if tuple(block.shape) != expected:
                raise ValueError(
                    f"block at degree {degree} has shape {block.shape}, expected {expected}"
                )

    def block(self, degree: int) -> SDM:
        found = self.blocks.get(degree)
        if found is not None:
            return found
        return zero_matrix(
            (self.target.dim(degree + self.shift), self.source.dim(degree)), self.field_spec
        )

    def apply(self, degree: int, vec: Mapping[int, Any]) -> Vector:
        return matvec(self.block(degree), vec)


@dataclass(frozen=True)
class ChainComplex:
    """Graded space with a differential of degree +1 (cohomological) or -1."""

    space: GradedSpace
    differential: DegreeMap
    cohomological: bool = True

    def __post_init__(self) -> None:
        if self.differential.shift != self.direction:
            raise ValueError(
                f"differential has degree {self.differential.shift}, expected {self.direction}"
            )

    @property
    def direction(self) -> int:
        return 1 if self.cohomological else -1

    @property
    def field_spec(self) -> FieldSpec:
        return self.differential.field_spec

    def d(self, degree: int) -> SDM:
        return self.differential.block(degree)

    def check_at(self, degree: int) -> None:
        """Raise NotAComplexError when the differential squares to nonzero into ``degree``."""
        incoming = self.d(degree - self.direction)
        outgoing = self.d(degree)
        if incoming.shape[1] == 0 or outgoing.shape[0] == 0:
            return
        if not is_zero_matrix(matmul(outgoing, incoming)):
            raise NotAComplexError(degree, "consecutive differentials do not compose to zero")

    def check(self, degrees: Optional[Iterable[int]] = None) -> None:
        for degree in degrees if degrees is not None else self.space.degrees():
            self.check_at(degree)


@dataclass(frozen=True)
class Homology:
    degree: int
    dimension: int
    representatives: List[Vector]
    cycles: int
    boundaries: int
    boundary_basis: List[Vector] = field(default_factory=list, repr=False)
    field_spec: Optional[FieldSpec] = field(default=None, repr=False)

    def coordinates(self, cycle: Mapping[int, Any]) -> Optional[List[Any]]:
        """Coordinates of a cycle's class on the representatives, None if outside their span."""
        if self.field_spec is None:
            raise ValueError("homology was built without a field")
        basis = EchelonBasis(self.field_spec)
        basis.extend(self.boundary_basis)
        offset = basis.inserted
        basis.extend(self.representatives)
        combo = basis.express(cycle)
        if combo is None:
            return None
        zero = self.field_spec.zero
        return [combo.get(offset + i, zero) for i in range(self.dimension)]

    def is_boundary(self, cycle: Mapping[int, Any]) -> bool:
        coords = self.coordinates(cycle)
        return coords is not None and not any(coords)


def homology_at(complex_: ChainComplex, degree: int) -> Homology:
    """Homology in one degree with representative cycles spanning a complement of the boundaries."""
    complex_.check_at(degree)
    cycles = row_reduce(complex_.d(degree)).kernel_basis
    boundaries = row_reduce(complex_.d(degree - complex_.direction)).image_basis

    basis = EchelonBasis(complex_.field_spec)
    basis.extend(boundaries)
    representatives = [z for z in cycles if basis.add(z)]
    return Homology(
        degree,
        len(representatives),
        representatives,
        len(cycles),
        len(boundaries),
        boundaries,
        complex_.field_spec,
    )


def homology(complex_: ChainComplex, degrees: Optional[Iterable[int]] = None) -> Dict[int, Homology]:
    wanted = degrees if degrees is not None else complex_.space.degrees()
    return {n: homology_at(complex_, n) for n in wanted}


def check_chain_map(f: DegreeMap, source: ChainComplex, target: ChainComplex, degree: int) -> None:
    if source.direction != target.direction:
        raise ValueError("source and target complexes run in opposite directions")
    step = source.direction
    lhs = matmul(target.d(degree + f.shift), f.block(degree))
    rhs = matmul(f.block(degree + step), source.d(degree))
    sign = source.field_spec.sign(f.shift)
    if not is_zero_matrix(lhs - rhs.mul(sign)):
        raise ChainMapError(degree)


def induced_map_injective(
    f: DegreeMap,
    source: ChainComplex,
    target: ChainComplex,
    degrees: Optional[Iterable[int]] = None,
) -> Dict[int, bool]:
    """Per degree, whether ``H(f)`` has zero kernel.

    The kernel of ``H(f)`` in degree n is (Z_n ∩ f^{-1}(B)) / B_source, so the map
    is injective exactly when that intersection is no larger than B_source.
    """
    field_spec = source.field_spec
    wanted = list(degrees) if degrees is not None else source.space.degrees()
    step = source.direction
    result: Dict[int, bool] = {}
    for n in wanted:
        check_chain_map(f, source, target, n)
        check_chain_map(f, source, target, n - step)
        cycles = row_reduce(source.d(n)).kernel_basis
        if not cycles:
            result[n] = True
            continue
        source_boundaries = row_reduce(source.d(n - step)).rank
        target_boundaries = row_reduce(target.d(n + f.shift - step)).image_basis
        images = [f.apply(n, z) for z in cycles]
        columns = images + target_boundaries
        stacked = matrix_from_columns(columns, target.space.dim(n + f.shift), field_spec)
        relations = row_reduce(stacked).kernel_basis
        # only the coefficients on the cycles matter
        preimage = EchelonBasis(field_spec)
        for rel in relations:
            preimage.add({i: a for i, a in rel.items() if i < len(cycles)})
        result[n] = len(preimage) == source_boundaries
    return result


def quotient_complex(
    complex_: ChainComplex, subspaces: Mapping[int, Sequence[Mapping[int, Any]]]
) -> Tuple[ChainComplex, DegreeMap]:
    """Quotient by a subcomplex together with the projection onto it.

    Coordinates of the quotient are the ambient coordinates that are not
    pivots of the subspace's echelon form.
    """
    field_spec = complex_.field_spec
    space = complex_.space
    degrees = set(space.degrees())
    echelons: Dict[int, EchelonBasis] = {}
    kept: Dict[int, List[int]] = {}
    positions: Dict[int, Dict[int, int]] = {}
    for n in degrees:
        basis = EchelonBasis(field_spec)
        basis.extend(subspaces.get(n, ()))
        echelons[n] = basis
        pivots = set(basis.pivots)
        kept[n] = [j for j in range(space.dim(n)) if j not in pivots]
        positions[n] = {j: k for k, j in enumerate(kept[n])}

    def _coordinates(n: int, vec: Mapping[int, Any]) -> Vector:
        basis = echelons.get(n)
        if basis is None:
            return {}
        remainder = basis.reduce(vec)
        return {positions[n][j]: a for j, a in remainder.items()}

    labels = space.basis
    quotient_space = GradedSpace({n: tuple(labels[n][j] for j in kept[n]) for n in degrees})

    step = complex_.direction
    for n in degrees:
        for vec in subspaces.get(n, ()):
            image = matvec(complex_.d(n), vec)
            if image and _coordinates(n + step, image):
                raise NotAComplexError(n, "subspace is not closed under the differential")

    projection_blocks: Dict[int, SDM] = {}
    differential_blocks: Dict[int, SDM] = {}
    for n in degrees:
        projection_blocks[n] = matrix_from_columns(
            [_coordinates(n, {j: field_spec.one}) for j in range(space.dim(n))],
            quotient_space.dim(n),
            field_spec,
        )
        d_n = complex_.d(n)
        differential_blocks[n] = matrix_from_columns(
            [_coordinates(n + step, matvec(d_n, {j: field_spec.one})) for j in kept[n]],
            quotient_space.dim(n + step),
            field_spec,
        )

    quotient = ChainComplex(
        quotient_space,
        DegreeMap(quotient_space, quotient_space, step, differential_blocks, field_spec),
        complex_.cohomological,
    )
    projection = DegreeMap(space, quotient_space, 0, projection_blocks, field_spec)
    return quotient, projection
