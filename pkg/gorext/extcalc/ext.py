#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..algebra import DgaPresentation, FiniteGradedAlgebra
from ..errors import InvariantViolation
from ..linalg import Homology, Vector, homology_at
from ..resolution import (
    AcyclicClosure,
    ah_acyclic_closure,
    default_margin,
    default_weight_bound,
    sullivan_acyclic_closure,
)
from ..utils.logging_config import get_logger, log_function_call, log_function_result
from .cohomology import base_class, cohomology_algebra
from .hom import HomComplex, HomElement

logger = get_logger("gorext.extcalc.ext")

EXACT = "exact"
STABLE = "stable"
UNSTABLE = "unstable"


@dataclass
class ExtAlgebra:
    """Ext of the ground field with coefficients in the presentation's algebra.

    ``reps[p]`` are cocycles whose classes form a basis of Ext^p; ``stability``
    tells how far each dimension can be trusted.
    """

    presentation: DgaPresentation
    window: Tuple[int, int]
    closure: AcyclicClosure
    hom: HomComplex
    homology: Dict[int, Homology]
    reps: Dict[int, List[HomElement]]
    stability: Dict[int, str]
    margin: Optional[int] = None
    fd_bound: Optional[int] = None
    products: Optional[FiniteGradedAlgebra] = None
    checks: Dict[str, Any] = field(default_factory=dict)
    unit: Optional[Vector] = None
    unit_note: str = ""

    @property
    def dims(self) -> Dict[int, int]:
        return {p: h.dimension for p, h in sorted(self.homology.items())}

    @property
    def total_dimension(self) -> int:
        return sum(self.dims.values())

    @property
    def field_spec(self) -> Any:
        return self.presentation.field_spec

    def degrees_with_classes(self) -> List[int]:
        return [p for p, dim in self.dims.items() if dim]

    def label(self, p: int, index: int) -> str:
        return f"e{p}.{index}" if self.dims.get(p, 0) > 1 else f"e{p}"

    def class_labels(self) -> Dict[int, Tuple[str, ...]]:
        return {p: tuple(self.label(p, i) for i in range(dim)) for p, dim in self.dims.items() if dim}

    def coordinates(self, f: HomElement) -> Optional[Vector]:
        """Class coordinates of a cocycle of a window degree, None for non-cocycles."""
        h = self.homology.get(f.degree)
        if h is None:
            raise ValueError(f"degree {f.degree} is outside the Ext window")
        coords = h.coordinates(self.hom.vector(f))
        if coords is None:
            return None
        return {i: c for i, c in enumerate(coords) if c}

    def representative(self, p: int, coords: Mapping[int, Any]) -> HomElement:
        vec: Vector = {}
        for i, c in coords.items():
            for k, a in self.homology[p].representatives[i].items():
                total = vec.get(k)
                total = a * c if total is None else total + a * c
                if total:
                    vec[k] = total
                else:
                    vec.pop(k, None)
        return self.hom.element(p, vec)

    @property
    def is_exact(self) -> bool:
        return all(flag == EXACT for flag in self.stability.values())

    @property
    def is_certain(self) -> bool:
        return all(flag != UNSTABLE for flag in self.stability.values())


def fd_bound(pres: DgaPresentation) -> Optional[int]:
    """Degree above which Ext vanishes for a tensor presentation: max(|v| + 1)."""
    if pres.commutative:
        return None
    return max((g.degree + 1 for g in pres.generators), default=0)


def _homology_window(hom: HomComplex) -> Dict[int, Homology]:
    lo, hi = hom.window
    return {p: homology_at(hom.complex, p) for p in range(lo, hi + 1)}


def _representatives(hom: HomComplex, homs: Dict[int, Homology]) -> Dict[int, List[HomElement]]:
    return {p: [hom.element(p, rep) for rep in h.representatives] for p, h in homs.items()}


def ext_groups(
    pres: DgaPresentation,
    window: Tuple[int, int],
    margin: Optional[int] = None,
    stability_step: int = 2,
    check_stability: bool = True,
) -> ExtAlgebra:
    """Dimensions and representative cocycles of Ext on ``window``."""
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {lo}..{hi}")
    log_function_call(logger, "ext_groups", flavor=pres.flavor.value, lo=lo, hi=hi)

    if not pres.commutative:
        closure = ah_acyclic_closure(pres)
        hom = HomComplex(closure, window)
        hom.check()
        homs = _homology_window(hom)
        stability = {p: EXACT for p in homs}
        ext = ExtAlgebra(
            pres, window, closure, hom, homs, _representatives(hom, homs), stability,
            fd_bound=fd_bound(pres),
        )
        log_function_result(logger, "ext_groups", dims=ext.dims)
        return ext

    margin = default_margin(pres) if margin is None else margin
    bound = default_weight_bound(window, margin)
    closure = sullivan_acyclic_closure(pres, bound)
    hom = HomComplex(closure, window)
    hom.check()
    homs = _homology_window(hom)

    if closure.exact:
        stability = {p: EXACT for p in homs}
    elif check_stability:
        wider = sullivan_acyclic_closure(pres, bound + stability_step)
        wider_hom = HomComplex(wider, window)
        wider_hom.check()
        stability = {}
        for p, h in homs.items():
            again = homology_at(wider_hom.complex, p).dimension
            stability[p] = STABLE if again == h.dimension else UNSTABLE
        unstable = [p for p, flag in stability.items() if flag == UNSTABLE]
        if unstable:
            logger.warning("Ext dimensions changed with the weight bound", degrees=unstable)
    else:
        stability = {p: UNSTABLE for p in homs}

    ext = ExtAlgebra(
        pres, window, closure, hom, homs, _representatives(hom, homs), stability, margin=margin
    )
    log_function_result(logger, "ext_groups", dims=ext.dims, weight_bound=bound)
    return ext


@dataclass(frozen=True)
class EvaluationImage:
    degree: int
    index: int
    coordinates: Dict[int, Any]

    @property
    def nonzero(self) -> bool:
        return bool(self.coordinates)


@dataclass(frozen=True)
class EvaluationMap:
    images: Tuple[EvaluationImage, ...]
    base_dims: Dict[int, int]

    @property
    def nonzero(self) -> bool:
        return any(image.nonzero for image in self.images)


def evaluation_map(ext: ExtAlgebra) -> EvaluationMap:
    """f ↦ [f(1)] in the cohomology of the base, class by class."""
    pres = ext.presentation
    degrees = ext.degrees_with_classes()
    base = pres.base_homology(degrees)
    images: List[EvaluationImage] = []
    for p in degrees:
        for i, f in enumerate(ext.reps[p]):
            coords = base_class(pres, base[p], f.unit_value)
            if coords is None:
                raise InvariantViolation(f"f(1) of class {ext.label(p, i)} is not a cocycle")
            images.append(EvaluationImage(p, i, coords))
    return EvaluationMap(tuple(images), {p: h.dimension for p, h in base.items()})


@dataclass(frozen=True)
class GorensteinVerdict:
    verdict: str
    reason: str = ""

    @property
    def is_gorenstein(self) -> bool:
        return self.verdict == "yes"


def gorenstein_test(ext: ExtAlgebra, base_finite: Optional[bool] = None) -> GorensteinVerdict:
    """yes only with a one-dimensional total.

    On the commutative side the base cohomology must also pass the finiteness heuristic.
    """
    certain = sum(dim for p, dim in ext.dims.items() if ext.stability.get(p) != UNSTABLE)
    if certain >= 2:
        return GorensteinVerdict("no", f"{certain} classes found in the window")
    if ext.total_dimension != 1:
        if ext.total_dimension == 0:
            return GorensteinVerdict("unknown", "no class found in the window")
        return GorensteinVerdict("unknown", "dimensions are not stable")
    lo, hi = ext.window
    if not ext.presentation.commutative:
        bound = ext.fd_bound or 0
        if lo <= -bound and hi >= bound:
            return GorensteinVerdict("yes", "window covers the vanishing range")
        return GorensteinVerdict("unknown", f"window must cover {-bound}..{bound}")
    if not ext.is_certain:
        return GorensteinVerdict("unknown", "dimensions are not stable")
    if base_finite is None:
        base_finite = cohomology_algebra(ext.presentation).finite
    if not base_finite:
        return GorensteinVerdict("unknown", "base cohomology fails the finiteness heuristic")
    return GorensteinVerdict("yes", "one stable class; base cohomology finite by heuristic")


@dataclass(frozen=True)
class FormalDimension:
    value: Optional[int]
    status: str

    def to_json(self) -> Any:
        if self.status == "minus_infinity":
            return "minus_infinity"
        if self.value is None:
            return "unknown"
        return self.value


def formal_dimension(ext: ExtAlgebra) -> FormalDimension:
    """Largest degree with a nonzero class; exact when vanishing above it is guaranteed."""
    degrees = ext.degrees_with_classes()
    lo, hi = ext.window
    guaranteed = (
        not ext.presentation.commutative and hi >= (ext.fd_bound or 0)
    ) or ext.is_exact
    if not degrees:
        return FormalDimension(None, "minus_infinity" if guaranteed else "unknown")
    top = max(degrees)
    return FormalDimension(top, "exact" if guaranteed else "window")
