#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..algebra import Key, Poly, add_into
from ..errors import WindowError
from ..linalg import ChainComplex, DegreeMap, GradedSpace, Vector, matrix_from_columns
from ..resolution import AcyclicClosure
from ..utils.logging_config import get_logger, log_function_call, log_function_result

logger = get_logger("gorext.extcalc.hom")

HomCoordinate = Tuple[int, Key]


@dataclass
class HomElement:
    """Module map P → A of degree p, given by its values on the semibasis."""

    degree: int
    values: Dict[int, Poly] = field(default_factory=dict)

    def at(self, index: int) -> Poly:
        return self.values.get(index, {})

    @property
    def unit_value(self) -> Poly:
        """f(1)."""
        return self.at(0)

    def is_zero(self) -> bool:
        return not any(self.values.values())


class HomComplex:
    """Hom_A(P, A) on a window of degrees, with D(f) = d∘f - (-1)^p f∘δ.

    Hom^p has one coordinate per pair (semibasis element m, basis monomial of A
    in degree |m| + p).
    """

    def __init__(self, closure: AcyclicClosure, window: Tuple[int, int]):
        lo, hi = window
        if lo > hi:
            raise ValueError(f"empty window {lo}..{hi}")
        self.closure = closure
        self.window = (lo, hi)
        self.presentation = closure.presentation
        self.field_spec = closure.field_spec
        log_function_call(logger, "HomComplex", kind=closure.kind, lo=lo, hi=hi)

        # (target index, z, c) for every term c z⊗m_j of δ m_target, grouped by j
        self._reverse: Dict[int, List[Tuple[int, Key, Any]]] = {}
        for i, image in enumerate(closure.delta):
            for (z, j), c in image.items():
                self._reverse.setdefault(j, []).append((i, z, c))

        basis = {p: tuple(self._coordinates(p)) for p in range(lo - 1, hi + 2)}
        self.space = GradedSpace(basis)
        blocks = {p: self._block(p) for p in range(lo - 1, hi + 1)}
        self.complex = ChainComplex(
            self.space, DegreeMap(self.space, self.space, 1, blocks, self.field_spec), True
        )
        log_function_result(
            logger, "HomComplex", dims={p: self.space.dim(p) for p in range(lo, hi + 1)}
        )

    def _coordinates(self, p: int) -> List[HomCoordinate]:
        coords: List[HomCoordinate] = []
        for i, m in enumerate(self.closure.semibasis):
            for z in self.presentation.cbasis(m.degree + p):
                coords.append((i, z))
        return coords

    def _apply_basis(self, p: int, j: int, w: Key) -> Dict[HomCoordinate, Any]:
        """D of the map sending m_j to w and every other semibasis element to 0."""
        pres = self.presentation
        algebra = pres.algebra
        out: Dict[HomCoordinate, Any] = {}

        def bump(coord: HomCoordinate, value: Any) -> None:
            total = out.get(coord)
            total = value if total is None else total + value
            if total:
                out[coord] = total
            else:
                out.pop(coord, None)

        for key, c in pres.d.on_key(w).items():
            bump((j, key), c)
        for i, z, c in self._reverse.get(j, ()):
            found = algebra.multiply_keys(z, w)
            if found is None:
                continue
            key, sign = found
            exponent = 1 + p + p * pres.cdegree(z) + sign
            bump((i, key), self.field_spec.sign(exponent) * c)
        return out

    def _block(self, p: int) -> Any:
        columns = []
        for j, w in self.space.labels(p):
            image = self._apply_basis(p, j, w)
            columns.append({self.space.index(p + 1, coord): c for coord, c in image.items()})
        return matrix_from_columns(columns, self.space.dim(p + 1), self.field_spec)

    def check(self) -> None:
        """Raise NotAComplexError unless D² = 0 on the window."""
        lo, hi = self.window
        self.complex.check(range(lo, hi + 1))

    def _require(self, p: int) -> None:
        lo, hi = self.window
        if not lo - 1 <= p <= hi + 1:
            raise WindowError(f"degree {p} lies outside the Hom window {lo}..{hi}", p)

    def element(self, p: int, vec: Mapping[int, Any]) -> HomElement:
        self._require(p)
        labels = self.space.labels(p)
        values: Dict[int, Poly] = {}
        for k, c in vec.items():
            i, z = labels[k]
            add_into(values.setdefault(i, {}), {z: c})
        return HomElement(p, {i: v for i, v in values.items() if v})

    def vector(self, f: HomElement) -> Vector:
        self._require(f.degree)
        out: Vector = {}
        for i, poly in f.values.items():
            for z, c in poly.items():
                position = self.space.position(f.degree, (i, z))
                if position is None:
                    raise ValueError(
                        f"value on '{self.closure.semibasis[i].label}' has the wrong degree"
                    )
                out[position] = c
        return out

    def differential(self, f: HomElement) -> HomElement:
        self._require(f.degree + 1)
        vec = self.complex.differential.apply(f.degree, self.vector(f))
        return self.element(f.degree + 1, vec)

    def format_element(self, f: HomElement) -> str:
        if f.is_zero():
            return "0"
        algebra = self.presentation.algebra
        parts = []
        for i in sorted(f.values):
            label = self.closure.semibasis[i].label
            parts.append(f"{label} ↦ {algebra.format_poly(f.values[i])}")
        return "; ".join(parts)

    def augmentation_cochain(self) -> Optional[HomElement]:
        """ε̃ sending 1 to 1 and every other semibasis element to 0, when degree 0 is in range."""
        lo, hi = self.window
        if not lo - 1 <= 0 <= hi + 1:
            return None
        return HomElement(0, {0: self.presentation.algebra.one()})
