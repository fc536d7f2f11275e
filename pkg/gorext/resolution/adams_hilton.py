#!/usr/bin/env python3
from __future__ import annotations

from typing import Any, List, Mapping, Optional

from ..algebra import DgaPresentation, Flavor, Key
from ..utils.logging_config import get_logger, log_function_call, log_function_result
from .closure import (
    ADAMS_HILTON,
    AcyclicClosure,
    ModuleElement,
    SemibasisElement,
    add_module,
)

logger = get_logger("gorext.resolution.adams_hilton")


def suspension_label(name: str) -> str:
    return f"s{name}"


def contraction(pres: DgaPresentation, word: Key) -> ModuleElement:
    """s(x·u) = (-1)^{|x|} x ⊗ su for a word ending in the letter u; s(1) = 0."""
    if not word:
        return {}
    prefix, last = word[:-1], word[-1]
    sign = pres.algebra.degree(prefix) % 2
    one = pres.field_spec.one
    return {(prefix, last + 1): -one if sign else one}


def contract(pres: DgaPresentation, poly: Mapping[Key, Any]) -> ModuleElement:
    out: ModuleElement = {}
    for word, coeff in poly.items():
        add_module(out, contraction(pres, word), coeff)
    return out


def ah_acyclic_closure(pres: DgaPresentation) -> AcyclicClosure:
    """Acyclic closure TV ⊗ (K ⊕ sV) of an Adams-Hilton presentation.

    δ(1 ⊗ sv) = v ⊗ 1 - s(dv); the semibasis is finite, so the closure is exact.
    """
    if pres.flavor is not Flavor.ADAMS_HILTON:
        raise ValueError(f"expected an adams-hilton presentation, got {pres.flavor.value}")
    log_function_call(logger, "ah_acyclic_closure", generators=len(pres.generators))

    semibasis: List[SemibasisElement] = [SemibasisElement("1", 0)]
    for g in pres.generators:
        # |sv| = |v| + 1 homologically
        semibasis.append(SemibasisElement(suspension_label(g.name), -(g.degree + 1), 1))

    one = pres.field_spec.one
    images: List[ModuleElement] = [{}]
    for index, g in enumerate(pres.generators):
        image: ModuleElement = {((index,), 0): one}
        add_module(image, contract(pres, pres.d.images[index]), -one)
        images.append(image)

    result = AcyclicClosure(
        presentation=pres,
        kind=ADAMS_HILTON,
        semibasis=tuple(semibasis),
        delta=tuple(images),
        exact=True,
        generator_order=tuple(g.name for g in pres.generators),
    )
    result.check_delta_squared()
    log_function_result(logger, "ah_acyclic_closure", semibasis=len(result))
    return result


def check_contraction(closure: AcyclicClosure, max_degree: int) -> Optional[Key]:
    """First word of TV⁺ (homological degree ≤ max_degree) where δs + sd ≠ id, if any."""
    pres = closure.presentation
    algebra = closure.base
    one = closure.field_spec.one
    for degree in range(1, max_degree + 1):
        for word in algebra.basis_of_degree(degree):
            lhs = closure.apply_delta(contraction(pres, word))
            add_module(lhs, contract(pres, pres.d.on_key(word)))
            add_module(lhs, {(word, 0): one}, -one)
            if lhs:
                return word
    return None
