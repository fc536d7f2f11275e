#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..algebra import DgaPresentation, FiniteGradedAlgebra, FiniteTensorPower, Poly, tensor_power
from ..errors import InvariantViolation
from ..extcalc import (
    ExtAlgebra,
    cohomology_algebra,
    evaluation_map,
    ext_algebra_table,
    gorenstein_test,
)
from ..linalg import (
    ChainComplex,
    DegreeMap,
    EchelonBasis,
    GradedSpace,
    induced_map_injective,
    matrix_from_columns,
    quotient_complex,
    row_reduce,
)
from ..utils.logging_config import get_logger, log_function_call, log_function_result
from .ideals import IdealPowers
from .tensor_power import TensorPowerAlgebra, mu_n_kernel

logger = get_logger("gorext.tcinv.invariants")

DEFAULT_M_MAX = 8


@dataclass(frozen=True)
class InvariantValue:
    """An invariant with its certification; ``value`` is None past the search cap."""

    value: Optional[int]
    exact: bool
    note: str = ""

    def to_json(self, m_max: int) -> Any:
        return self.value if self.value is not None else f"> {m_max}"


def _require(pres: DgaPresentation, n: int) -> None:
    if not pres.commutative:
        raise ValueError(
            f"topological complexity invariants need a sullivan presentation, got {pres.flavor.value}"
        )
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")


def _finite_ideal(power: FiniteTensorPower) -> IdealPowers:
    algebra = power.algebra
    return IdealPowers(
        algebra.field_spec, power.kernel, algebra.multiply, algebra.dim, algebra.degrees()
    )


def _capped(value: int, m_max: int, exact: bool, note: str = "") -> InvariantValue:
    if value > m_max:
        return InvariantValue(None, False, f"search stopped at m_max={m_max}")
    return InvariantValue(value, exact, note)


def zcl(
    pres: DgaPresentation,
    n: int,
    window: Optional[Tuple[int, int]] = None,
    m_max: int = DEFAULT_M_MAX,
    cohomology: Optional[FiniteGradedAlgebra] = None,
) -> InvariantValue:
    """Nilpotency length of ker H(μ_n) inside H(ΛV)^{⊗n}."""
    _require(pres, n)
    algebra = cohomology or cohomology_algebra(pres, window)
    ideal = _finite_ideal(tensor_power(algebra, n))
    note = "" if algebra.finite else "lower bound: cohomology fails the finiteness heuristic"
    return _capped(ideal.nil_length(m_max), m_max, algebra.finite, note)


def _chain_ideal(tp: TensorPowerAlgebra, top: int) -> IdealPowers:
    return IdealPowers(
        tp.field_spec,
        lambda d: mu_n_kernel(tp, d),
        tp.multiply_vectors,
        tp.dim,
        range(0, top + 1),
    )


def ideal_power_membership(tp: TensorPowerAlgebra, element: Poly, m: int, degree: int) -> bool:
    """Whether ``element`` lies in the degree-``degree`` part of (ker μ_n)^m; m = 0 always holds."""
    if m < 0:
        raise ValueError(f"ideal power must be non-negative, got {m}")
    vector = tp.to_vector(element, degree)
    return _chain_ideal(tp, degree).contains(vector, m, degree)


def htc_lower(
    pres: DgaPresentation,
    n: int,
    m_max: int = DEFAULT_M_MAX,
    window: Optional[Tuple[int, int]] = None,
    cohomology: Optional[FiniteGradedAlgebra] = None,
) -> InvariantValue:
    """Least m for which (ΛV)^{⊗n} → (ΛV)^{⊗n}/(ker μ_n)^{m+1} is injective in cohomology.

    Degrees 0..n·N are checked, N being the top cohomology degree of the base.
    """
    _require(pres, n)
    log_function_call(logger, "htc_lower", n=n, m_max=m_max)
    algebra = cohomology or cohomology_algebra(pres, window)
    top = n * (algebra.top_degree or 0)
    tp = TensorPowerAlgebra(pres, n)
    source = tp.presentation.base_complex(-1, top)
    ideal = _chain_ideal(tp, top + 1)
    for m in range(0, m_max + 1):
        subspaces = {d: ideal.power(m + 1, d) for d in range(0, top + 2)}
        quotient, projection = quotient_complex(source, subspaces)
        injective = induced_map_injective(projection, source, quotient, range(0, top + 1))
        if all(injective.values()):
            log_function_result(logger, "htc_lower", value=m)
            return InvariantValue(m, algebra.finite)
    return InvariantValue(None, False, f"search stopped at m_max={m_max}")


def _require_products(ext: ExtAlgebra) -> FiniteGradedAlgebra:
    if ext.products is None:
        raise ValueError(
            "the Ext product table is missing; supply a sullivan model of the same space"
        )
    return ext.products


def ext_zcl(ext: ExtAlgebra, n: int, m_max: int = DEFAULT_M_MAX) -> InvariantValue:
    """Nilpotency length of ker μ_n on the Ext algebra's n-fold tensor power."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    products = _require_products(ext)
    ideal = _finite_ideal(tensor_power(products, n))
    return _capped(ideal.nil_length(m_max), m_max, ext.is_certain)


def htc_ext(ext: ExtAlgebra, n: int, m_max: int = DEFAULT_M_MAX) -> InvariantValue:
    """Least m with E^{⊗n} → E^{⊗n}/(ker μ_n)^{m+1} injective in cohomology, E = Ext with zero differential."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    products = _require_products(ext)
    power = tensor_power(products, n)
    algebra = power.algebra
    space = GradedSpace(algebra.basis)
    zero = DegreeMap(space, space, 1, {}, algebra.field_spec)
    complex_ = ChainComplex(space, zero, True)
    ideal = _finite_ideal(power)
    for m in range(0, m_max + 1):
        subspaces = {d: ideal.power(m + 1, d) for d in algebra.degrees()}
        quotient, projection = quotient_complex(complex_, subspaces)
        injective = induced_map_injective(projection, complex_, quotient, algebra.degrees())
        if all(injective.values()):
            return InvariantValue(m, ext.is_certain)
    return InvariantValue(None, False, f"search stopped at m_max={m_max}")


def ext_product_length(ext: ExtAlgebra, n: int, m_max: int = DEFAULT_M_MAX) -> Optional[int]:
    """Largest m with Ω^{⊗n} in (ker μ_n)^m for the generating class Ω of a one-dimensional Ext."""
    products = _require_products(ext)
    if ext.total_dimension != 1:
        return None
    degree = ext.degrees_with_classes()[0]
    power = tensor_power(products, n)
    total, omega = power.pure_tensor([(degree, {0: ext.field_spec.one})] * n)
    return _finite_ideal(power).depth(omega, total, m_max)


def product_length(
    pres: DgaPresentation,
    n: int,
    m_max: int = DEFAULT_M_MAX,
    cohomology: Optional[FiniteGradedAlgebra] = None,
) -> Optional[int]:
    """Largest m such that the fundamental class of (ΛV)^{⊗n} has a representative in (ker μ_n)^m.

    Only defined when the base cohomology is a Poincaré duality algebra.
    """
    _require(pres, n)
    algebra = cohomology or cohomology_algebra(pres)
    if not algebra.poincare_duality().ok:
        return None
    top = algebra.top_degree or 0
    rep = pres.base_homology([top])[top].representatives[0]
    omega_poly = pres.algebra.from_vector(rep, top)
    tp = TensorPowerAlgebra(pres, n)
    degree = n * top
    omega = tp.to_vector(tp.tensor_power_of(omega_poly), degree)
    complex_ = tp.presentation.base_complex(degree - 1, degree)
    boundaries = row_reduce(complex_.d(degree - 1)).image_basis
    ideal = _chain_ideal(tp, degree)
    field_spec = tp.field_spec
    best = 0
    for m in range(1, m_max + 1):
        generators = ideal.power(m, degree)
        if not generators:
            break
        images = [complex_.differential.apply(degree, v) for v in generators]
        relations = row_reduce(
            matrix_from_columns(images, complex_.space.dim(degree + 1), field_spec)
        ).kernel_basis
        cycles = []
        for rel in relations:
            vec: Dict[int, Any] = {}
            for j, c in rel.items():
                for k, a in generators[j].items():
                    vec[k] = vec.get(k, field_spec.zero) + c * a
            cycles.append({k: a for k, a in vec.items() if a})
        span = EchelonBasis(field_spec)
        span.extend(boundaries)
        span.extend(cycles)
        if not span.contains(omega):
            break
        best = m
    return best


@dataclass(frozen=True)
class CriterionResult:
    verdict: str
    m: Optional[int] = None
    reason: str = ""
    witness: Dict[str, Any] = field(default_factory=dict)


def thm_criterion(
    pres: DgaPresentation,
    n: int,
    m: Optional[int] = None,
    ext: Optional[ExtAlgebra] = None,
    window: Optional[Tuple[int, int]] = None,
    m_max: int = DEFAULT_M_MAX,
    htc_values: Optional[Tuple[InvariantValue, InvariantValue]] = None,
) -> CriterionResult:
    """Membership test of ω^{⊗n}, ω = f(1), in (ker μ_n)^m minus (ker μ_n)^{m+1}.

    Needs a Gorenstein input with nonzero evaluation map. The verdict is
    ``equal`` when both HTC values coincide with that m.
    """
    _require(pres, n)
    if ext is None:
        if window is None:
            raise ValueError("either an Ext algebra or a window is required")
        ext = ext_algebra_table(pres, window)
    verdict = gorenstein_test(ext)
    if not verdict.is_gorenstein:
        return CriterionResult("inconclusive", reason=f"not Gorenstein ({verdict.reason})")
    ev = evaluation_map(ext)
    if not ev.nonzero:
        return CriterionResult("inconclusive", reason="evaluation map is zero")

    degree = ext.degrees_with_classes()[0]
    f = ext.reps[degree][0]
    omega = f.unit_value
    tp = TensorPowerAlgebra(pres, n)
    total = n * degree
    vector = tp.to_vector(tp.tensor_power_of(omega), total)
    ideal = _chain_ideal(tp, total)
    depth = ideal.depth(vector, total, m_max)
    if depth > m_max:
        return CriterionResult("inconclusive", reason=f"membership holds beyond m_max={m_max}")
    witness: Dict[str, Any] = {
        "omega": pres.algebra.format_poly(omega),
        "degree": total,
        f"in_power_{depth}": True,
        f"in_power_{depth + 1}": False,
    }
    if m is not None:
        witness["requested_m"] = m
        witness["requested_holds"] = ideal.contains(vector, m, total) and not ideal.contains(
            vector, m + 1, total
        )

    if htc_values is None:
        htc_values = (htc_lower(pres, n, m_max), htc_ext(ext, n, m_max))
    lower, upper = htc_values
    witness["htc_lower"] = lower.value
    witness["htc_ext"] = upper.value
    if lower.value == depth and upper.value == depth:
        return CriterionResult("equal", depth, witness=witness)
    return CriterionResult(
        "not_equal", depth, reason="HTC values differ from the membership depth", witness=witness
    )


@dataclass
class InvariantSummary:
    n: int
    m_max: int
    zcl: InvariantValue
    htc_lower: InvariantValue
    ext_zcl: InvariantValue
    htc_ext: InvariantValue
    criterion: CriterionResult
    product_length: Optional[int] = None
    ext_product_length: Optional[int] = None
    chain: Dict[str, Optional[bool]] = field(default_factory=dict)


def _at_most(left: InvariantValue, right: InvariantValue) -> Optional[bool]:
    if left.value is None or right.value is None:
        return None
    return left.value <= right.value


def compute_invariants(
    pres: DgaPresentation,
    n: int,
    window: Tuple[int, int],
    m_max: int = DEFAULT_M_MAX,
    margin: Optional[int] = None,
    ext: Optional[ExtAlgebra] = None,
) -> InvariantSummary:
    """All invariants for one presentation with the inequality chain checked."""
    _require(pres, n)
    log_function_call(logger, "compute_invariants", n=n, m_max=m_max)
    cohomology = cohomology_algebra(pres)
    ext = ext or ext_algebra_table(pres, window, margin)

    zcl_value = zcl(pres, n, m_max=m_max, cohomology=cohomology)
    lower = htc_lower(pres, n, m_max, cohomology=cohomology)
    ext_zcl_value = ext_zcl(ext, n, m_max)
    upper = htc_ext(ext, n, m_max)
    criterion = thm_criterion(pres, n, ext=ext, m_max=m_max, htc_values=(lower, upper))

    chain: Dict[str, Optional[bool]] = {
        "zcl<=htc": _at_most(zcl_value, lower),
        "ext_zcl<=htc_ext": _at_most(ext_zcl_value, upper),
    }
    if criterion.verdict != "inconclusive":
        chain["htc_ext<=htc"] = _at_most(upper, lower)
    certified = {
        "zcl<=htc": zcl_value.exact and lower.exact,
        "ext_zcl<=htc_ext": ext_zcl_value.exact and upper.exact,
        "htc_ext<=htc": upper.exact and lower.exact,
    }
    broken: List[str] = [k for k, ok in chain.items() if ok is False and certified[k]]
    if broken:
        raise InvariantViolation(f"inequality chain fails: {', '.join(broken)}")

    summary = InvariantSummary(
        n, m_max, zcl_value, lower, ext_zcl_value, upper, criterion, chain=chain
    )
    if cohomology.poincare_duality().ok:
        summary.product_length = product_length(pres, n, m_max, cohomology)
        if summary.product_length != lower.value:
            logger.warning(
                "Product length disagrees with htc", product_length=summary.product_length,
                htc=lower.value,
            )
    if ext.total_dimension == 1:
        summary.ext_product_length = ext_product_length(ext, n, m_max)
        if summary.ext_product_length != upper.value:
            logger.warning(
                "Ext product length disagrees with htc_ext",
                product_length=summary.ext_product_length, htc_ext=upper.value,
            )
    log_function_result(logger, "compute_invariants", chain=chain)
    return summary
