#!/usr/bin/env python3
from __future__ import annotations

from graphlib import CycleError, TopologicalSorter
from typing import Any, Dict, List, Sequence, Set, Tuple

from ..algebra import (
    Derivation,
    DgaPresentation,
    FreeCommutativeAlgebra,
    Generator,
    Key,
    Poly,
    add_into,
    enumerate_weighted,
)
from ..errors import InvariantViolation, ResolutionError
from ..linalg import matrix_from_columns, solve_linear
from ..utils.logging_config import get_logger, log_function_call, log_function_result
from .closure import SULLIVAN, TENSOR_SQUARE, AcyclicClosure, ModuleElement, SemibasisElement

logger = get_logger("gorext.resolution.sullivan")

LEFT_PREFIX = "s."
RIGHT_PREFIX = "t."


def closure_order(pres: DgaPresentation) -> List[int]:
    """Generators ordered so each comes after every generator occurring in its d.

    Ties are broken by (degree, name); for minimal models this is ascending degree.
    """
    algebra = pres.algebra
    graph: Dict[int, Set[int]] = {}
    for i, image in enumerate(pres.d.images):
        graph[i] = {letter for key in image for letter in algebra.letters(key) if letter != i}
    sorter: TopologicalSorter[int] = TopologicalSorter(graph)
    try:
        sorter.prepare()
    except CycleError as exc:
        cycle = exc.args[1] if len(exc.args) > 1 else []
        name = pres.generators[cycle[0]].name if cycle else "?"
        degree = pres.generators[cycle[0]].degree if cycle else 0
        raise ResolutionError(name, degree, "generators depend on each other cyclically") from None
    order: List[int] = []
    while sorter.is_active():
        ready = sorted(sorter.get_ready(), key=lambda i: (pres.generators[i].degree, pres.generators[i].name))
        for node in ready:
            order.append(node)
            sorter.done(node)
    return order


def _s_weight(key: Key, rank: int, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(key[rank:], weights))


def _solve_correction(
    total: FreeCommutativeAlgebra,
    derivation: Derivation,
    generator: Generator,
    target: Poly,
    closed: Set[int],
    rank: int,
) -> Poly:
    """Some c with δc = dv, built from closed suspensions first and pure ΛV terms last."""
    if not target:
        return {}
    suspended: List[Key] = []
    pure: List[Key] = []
    for key in total.basis_of_degree(generator.degree):
        s_part = key[rank:]
        if any(s_part):
            if all(e == 0 or j in closed for j, e in enumerate(s_part)):
                suspended.append(key)
        elif all(e == 0 or j in closed for j, e in enumerate(key[:rank])):
            pure.append(key)
    candidates = suspended + pure

    rows: Dict[Key, int] = {}
    columns: List[Dict[int, Any]] = []
    for key in candidates:
        column: Dict[int, Any] = {}
        for k, c in derivation.on_key(key).items():
            column[rows.setdefault(k, len(rows))] = c
        columns.append(column)
    rhs = {rows.setdefault(k, len(rows)): c for k, c in target.items()}
    matrix = matrix_from_columns(columns, len(rows), total.field_spec)
    solution = solve_linear(matrix, rhs, total.field_spec)
    if solution is None:
        raise ResolutionError(
            generator.name,
            generator.degree,
            "d of this generator is not a boundary of the closed part (check d^2 = 0)",
        )
    correction: Poly = {}
    for j, value in solution.items():
        add_into(correction, {candidates[j]: value})
    return correction


def _split(
    closure_total: Poly, rank: int, lookup: Dict[Tuple[int, ...], int], label: str
) -> ModuleElement:
    out: ModuleElement = {}
    for key, coeff in closure_total.items():
        index = lookup.get(tuple(key[rank:]))
        if index is None:
            raise InvariantViolation(
                f"delta of '{label}' leaves the weight-truncated semibasis"
            )
        out[(tuple(key[:rank]), index)] = coeff
    return out


def _semibasis(
    total: FreeCommutativeAlgebra,
    rank: int,
    weights: Sequence[int],
    odd: Sequence[bool],
    bound: int,
) -> List[SemibasisElement]:
    pad = (0,) * rank
    elements = []
    for exps in enumerate_weighted(weights, odd, bound):
        key = pad + exps
        degree = total.degree(key)
        weight = sum(e * w for e, w in zip(exps, weights))
        label = total.format_key(key)
        elements.append(SemibasisElement(label, degree, weight, exps))
    elements.sort(key=lambda m: (m.degree, m.weight, tuple(-e for e in m.exponents)))
    return elements


def sullivan_acyclic_closure(pres: DgaPresentation, weight_bound: int) -> AcyclicClosure:
    """Semi-free resolution ΛV ⊗ Λ(sV) of the ground field, truncated at ``weight_bound``.

    δ(sv) = v - c_v with δ(c_v) = dv solved degreewise. The weight of sv is the
    largest of |sv| and the weights occurring in c_v, so the span of semibasis
    monomials of weight ≤ ``weight_bound`` is closed under δ.
    """
    if not pres.commutative:
        raise ValueError(f"expected a sullivan presentation, got {pres.flavor.value}")
    if weight_bound < 0:
        raise ValueError(f"weight bound must be non-negative, got {weight_bound}")
    log_function_call(logger, "sullivan_acyclic_closure", weight_bound=weight_bound)

    rank = len(pres.generators)
    field_spec = pres.field_spec
    one = field_spec.one
    pad = (0,) * rank
    letters = list(pres.generators) + [
        Generator(LEFT_PREFIX + g.name, g.degree - 1) for g in pres.generators
    ]
    total = FreeCommutativeAlgebra(letters, field_spec)

    base_images: List[Poly] = [
        {key + pad: c for key, c in image.items()} for image in pres.d.images
    ]
    s_images: List[Poly] = [{} for _ in range(rank)]
    weights = [g.degree - 1 for g in pres.generators]
    closed: Set[int] = set()
    order = closure_order(pres)

    for i in order:
        g = pres.generators[i]
        partial = Derivation(total, 1, tuple(base_images + s_images))
        correction = _solve_correction(total, partial, g, base_images[i], closed, rank)
        image = total.generator(i)
        add_into(image, correction, -one)
        s_images[i] = image
        weights[i] = max([g.degree - 1] + [_s_weight(k, rank, weights) for k in correction])
        closed.add(i)
        logger.debug("Closed generator", generator=g.name, correction_terms=len(correction))

    derivation = Derivation(total, 1, tuple(base_images + s_images))
    odd = [(g.degree - 1) % 2 == 1 for g in pres.generators]
    semibasis = _semibasis(total, rank, weights, odd, weight_bound)
    lookup = {m.exponents: i for i, m in enumerate(semibasis)}
    delta = tuple(
        _split(derivation.on_key(pad + m.exponents), rank, lookup, m.label) for m in semibasis
    )
    exact = all(odd) and weight_bound >= sum(weights)

    closure = AcyclicClosure(
        presentation=pres,
        kind=SULLIVAN,
        semibasis=tuple(semibasis),
        delta=delta,
        exact=exact,
        weight_bound=weight_bound,
        generator_order=tuple(pres.generators[i].name for i in order),
        extras={
            "total_algebra": total,
            "derivation": derivation,
            "weights": tuple(weights),
            "suspension_images": tuple(s_images),
        },
    )
    closure.check_delta_squared()
    log_function_result(
        logger, "sullivan_acyclic_closure", semibasis=len(closure), exact=exact
    )
    return closure


def tensor_square_resolution(closure: AcyclicClosure) -> AcyclicClosure:
    """P ⊗_{ΛV} P = ΛV ⊗ Λ(sV) ⊗ Λ(s'V) with the differential of both factors.

    The semibasis is the set of products m ⊗ m' with weight(m) + weight(m') at most
    the weight bound of ``closure``.
    """
    if closure.kind != SULLIVAN:
        raise ValueError(f"tensor squares need a sullivan closure, got {closure.kind}")
    pres = closure.presentation
    rank = len(pres.generators)
    field_spec = pres.field_spec
    weights = list(closure.extras["weights"])
    s_images: Sequence[Poly] = closure.extras["suspension_images"]
    bound = closure.weight_bound or 0

    letters = (
        list(pres.generators)
        + [Generator(LEFT_PREFIX + g.name, g.degree - 1) for g in pres.generators]
        + [Generator(RIGHT_PREFIX + g.name, g.degree - 1) for g in pres.generators]
    )
    total = FreeCommutativeAlgebra(letters, field_spec)
    zeros = (0,) * rank

    def widen(key: Key, right: bool) -> Key:
        base, s_part = key[:rank], key[rank:]
        return base + (zeros + s_part if right else s_part + zeros)

    base_images = [{k + zeros + zeros: c for k, c in image.items()} for image in pres.d.images]
    left_images = [{widen(k, False): c for k, c in image.items()} for image in s_images]
    right_images = [{widen(k, True): c for k, c in image.items()} for image in s_images]
    derivation = Derivation(total, 1, tuple(base_images + left_images + right_images))

    odd = [(g.degree - 1) % 2 == 1 for g in pres.generators]
    semibasis = _semibasis(total, rank, weights + weights, odd + odd, bound)
    for m in semibasis:
        left = closure.index_of_exponents(m.exponents[:rank])
        right = closure.index_of_exponents(m.exponents[rank:])
        if left is None or right is None:
            raise InvariantViolation(f"factor of '{m.label}' is missing from the closure")
    lookup = {m.exponents: i for i, m in enumerate(semibasis)}
    pad = (0,) * rank
    delta = tuple(
        _split(derivation.on_key(pad + m.exponents), rank, lookup, m.label) for m in semibasis
    )
    factors = tuple(
        (
            closure.index_of_exponents(m.exponents[:rank]),
            closure.index_of_exponents(m.exponents[rank:]),
        )
        for m in semibasis
    )
    square = AcyclicClosure(
        presentation=pres,
        kind=TENSOR_SQUARE,
        semibasis=tuple(semibasis),
        delta=delta,
        exact=closure.exact,
        weight_bound=bound,
        generator_order=closure.generator_order,
        extras={"total_algebra": total, "derivation": derivation, "factors": factors},
    )
    square.check_delta_squared()
    logger.debug("Built tensor square", semibasis=len(square))
    return square


def default_margin(pres: DgaPresentation) -> int:
    return pres.top_generator_degree() + 1


def default_weight_bound(window: Tuple[int, int], margin: int) -> int:
    """Weight bound covering every degree of ``window`` with ``margin`` to spare."""
    lo, hi = window
    if margin < 1:
        raise ValueError(f"weight margin must be at least 1, got {margin}")
    return max(0, -lo, hi) + margin
