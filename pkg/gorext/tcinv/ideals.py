#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from ..linalg import EchelonBasis, FieldSpec, Vector

KernelFn = Callable[[int], List[Vector]]
MultiplyFn = Callable[[int, Vector, int, Vector], Vector]
DimFn = Callable[[int], int]


@dataclass(frozen=True)
class IdealPowerBasis:
    """Spanning vectors of (ker μ_n)^m, degree by degree."""

    power: int
    vectors: Mapping[int, Tuple[Vector, ...]]

    def dims(self) -> Dict[int, int]:
        return {d: len(v) for d, v in self.vectors.items() if v}

    @property
    def is_zero(self) -> bool:
        return not any(self.vectors.values())


class IdealPowers:
    """Powers of a homogeneous ideal given by its basis in each degree.

    I^0 is the whole algebra, I^1 the ideal itself, and the degree-D part of
    I^m is spanned by k·x with k a basis vector of I in degree d and x in the
    degree D - d part of I^{m-1}.
    """

    def __init__(
        self,
        field_spec: FieldSpec,
        kernel: KernelFn,
        multiply: MultiplyFn,
        dim: DimFn,
        degrees: Iterable[int],
    ):
        self.field_spec = field_spec
        self._kernel = kernel
        self._multiply = multiply
        self._dim = dim
        self.degrees: Sequence[int] = sorted(set(degrees))
        self._ideal: Dict[int, List[Vector]] = {}
        self._cache: Dict[Tuple[int, int], List[Vector]] = {}

    def ideal(self, degree: int) -> List[Vector]:
        if degree not in self._ideal:
            self._ideal[degree] = list(self._kernel(degree)) if degree in self.degrees else []
        return self._ideal[degree]

    def power(self, m: int, degree: int) -> List[Vector]:
        """Echelon basis of the degree-``degree`` part of I^m."""
        if m < 0:
            raise ValueError(f"ideal power must be non-negative, got {m}")
        key = (m, degree)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if degree not in self.degrees:
            result: List[Vector] = []
        elif m == 0:
            result = [{i: self.field_spec.one} for i in range(self._dim(degree))]
        elif m == 1:
            result = self.ideal(degree)
        else:
            basis = EchelonBasis(self.field_spec)
            result = []
            for d in self.degrees:
                rest = degree - d
                if rest not in self.degrees:
                    continue
                lower = self.power(m - 1, rest)
                if not lower:
                    continue
                for k in self.ideal(d):
                    for x in lower:
                        product = self._multiply(d, k, rest, x)
                        if product and basis.add(product):
                            result.append(product)
        self._cache[key] = result
        return result

    def basis(self, m: int) -> IdealPowerBasis:
        return IdealPowerBasis(m, {d: tuple(self.power(m, d)) for d in self.degrees})

    def contains(self, vec: Vector, m: int, degree: int) -> bool:
        if not vec:
            return True
        basis = EchelonBasis(self.field_spec)
        basis.extend(self.power(m, degree))
        return basis.contains(vec)

    def depth(self, vec: Vector, degree: int, m_max: int) -> int:
        """Largest m ≤ m_max + 1 with ``vec`` in I^m (membership is monotone in m)."""
        m = 0
        while m <= m_max and self.contains(vec, m + 1, degree):
            m += 1
        return m

    def nil_length(self, m_max: int) -> int:
        """Largest m ≤ m_max + 1 with I^m nonzero; 0 for the zero ideal."""
        m = 0
        while m <= m_max and not self.basis(m + 1).is_zero:
            m += 1
        return m

