#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..algebra import DgaPresentation, FreeGradedAlgebra, Key
from ..errors import InvariantViolation
from ..linalg import ChainComplex, DegreeMap, GradedSpace, matrix_from_columns

ModuleKey = Tuple[Key, int]
ModuleElement = Dict[ModuleKey, Any]

ADAMS_HILTON = "adams-hilton"
SULLIVAN = "sullivan"
TENSOR_SQUARE = "tensor-square"


@dataclass(frozen=True)
class SemibasisElement:
    """Free module generator with its cohomological degree and filtration weight."""

    label: str
    degree: int
    weight: int = 0
    exponents: Tuple[int, ...] = ()


def add_module(target: ModuleElement, source: Mapping[ModuleKey, Any], scale: Any = None) -> ModuleElement:
    for key, coeff in source.items():
        value = coeff if scale is None else coeff * scale
        if not value:
            continue
        total = target.get(key)
        total = value if total is None else total + value
        if total:
            target[key] = total
        else:
            target.pop(key, None)
    return target


@dataclass
class AcyclicClosure:
    """Semi-free module over a presentation's algebra, with δ given on a semibasis.

    Elements are dictionaries ``(base key, semibasis index) -> scalar`` read as
    sums of ``z ⊗ m``. Degrees are cohomological. Element 0 of the semibasis is
    the unit 1.
    """

    presentation: DgaPresentation
    kind: str
    semibasis: Tuple[SemibasisElement, ...]
    delta: Tuple[ModuleElement, ...]
    exact: bool
    weight_bound: Optional[int] = None
    generator_order: Tuple[str, ...] = ()
    extras: Dict[str, Any] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._index = {m.label: i for i, m in enumerate(self.semibasis)}
        self._by_exponents = (
            {} if self.kind == ADAMS_HILTON
            else {m.exponents: i for i, m in enumerate(self.semibasis)}
        )

    @property
    def base(self) -> FreeGradedAlgebra:
        return self.presentation.algebra

    @property
    def field_spec(self) -> Any:
        return self.presentation.field_spec

    def __len__(self) -> int:
        return len(self.semibasis)

    def degree(self, index: int) -> int:
        return self.semibasis[index].degree

    def index_of(self, label: str) -> int:
        return self._index[label]

    def index_of_exponents(self, exponents: Tuple[int, ...]) -> Optional[int]:
        return self._by_exponents.get(exponents)

    def unit(self) -> ModuleElement:
        return {(self.base.one_key(), 0): self.field_spec.one}

    def element_degree(self, key: ModuleKey) -> int:
        z, i = key
        return self.presentation.cdegree(z) + self.degree(i)

    # differential ------------------------------------------------------------

    def apply_delta(self, element: Mapping[ModuleKey, Any]) -> ModuleElement:
        """δ(z ⊗ m) = dz ⊗ m + (-1)^{|z|} z · δm."""
        algebra = self.base
        d = self.presentation.d
        out: ModuleElement = {}
        for (z, i), coeff in element.items():
            for dz, dc in d.on_key(z).items():
                add_module(out, {(dz, i): dc * coeff})
            image = self.delta[i]
            if not image:
                continue
            sign = algebra.degree(z) % 2
            for (z2, j), c2 in image.items():
                found = algebra.multiply_keys(z, z2)
                if found is None:
                    continue
                key, s = found
                value = coeff * c2
                if (s + sign) % 2:
                    value = -value
                add_module(out, {(key, j): value})
        return out

    def check_delta_squared(self) -> None:
        """Raise InvariantViolation unless δ² vanishes on every semibasis element."""
        for i, image in enumerate(self.delta):
            residue = self.apply_delta(image)
            if residue:
                raise InvariantViolation(
                    f"delta^2 is nonzero on semibasis element '{self.semibasis[i].label}'"
                )

    # total complex ------------------------------------------------------------

    def total_basis(self, degree: int) -> List[ModuleKey]:
        keys: List[ModuleKey] = []
        for i, m in enumerate(self.semibasis):
            for z in self.presentation.cbasis(degree - m.degree):
                keys.append((z, i))
        return keys

    def total_complex(self, lo: int, hi: int) -> ChainComplex:
        """The closure as a cochain complex over the ground field, degrees lo..hi+1."""
        basis = {n: tuple(self.total_basis(n)) for n in range(lo, hi + 2)}
        space = GradedSpace(basis)
        blocks = {}
        for n in range(lo, hi + 1):
            columns = []
            for key in basis[n]:
                image = self.apply_delta({key: self.field_spec.one})
                columns.append({space.index(n + 1, k): c for k, c in image.items()})
            blocks[n] = matrix_from_columns(columns, space.dim(n + 1), self.field_spec)
        return ChainComplex(space, DegreeMap(space, space, 1, blocks, self.field_spec), True)

    def format_element(self, element: Mapping[ModuleKey, Any]) -> str:
        if not element:
            return "0"
        parts = []
        for (z, i), coeff in sorted(element.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            z_text = self.base.format_key(z)
            parts.append(f"{self.field_spec.format(coeff)}*{z_text}⊗{self.semibasis[i].label}")
        return " + ".join(parts)
