#!/usr/bin/env python3
"""
Independent reference computations used by the test suite.

- ``word_counts``: dimensions of a free tensor algebra read off the
  generating function 1 / (1 - sum t^|v|).
- ``cycle_killing_resolution``: a semi-free resolution of the ground field over
  an Adams-Hilton presentation built by killing homology degree by degree,
  with no use of the contraction behind the acyclic closure.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

import sympy

from gorext.algebra import DgaPresentation, Flavor
from gorext.extcalc import HomComplex
from gorext.linalg import homology_at
from gorext.resolution import (
    ADAMS_HILTON,
    AcyclicClosure,
    ModuleElement,
    SemibasisElement,
)


def word_counts(degrees: Sequence[int], top: int) -> List[int]:
    """Number of words of each degree 0..top on letters of the given degrees."""
    t = sympy.symbols("t")
    series = sympy.series(1 / (1 - sum(t**d for d in degrees)), t, 0, top + 1).removeO()
    poly = sympy.Poly(series, t)
    return [int(poly.coeff_monomial(t**n)) for n in range(top + 1)]


def _closure(pres: DgaPresentation, semibasis, delta) -> AcyclicClosure:
    return AcyclicClosure(
        presentation=pres,
        kind=ADAMS_HILTON,
        semibasis=tuple(semibasis),
        delta=tuple(delta),
        exact=False,
    )


def cycle_killing_resolution(pres: DgaPresentation, max_chain_degree: int) -> AcyclicClosure:
    """Resolution acyclic in chain degrees 1..max_chain_degree.

    For each chain degree k, one new free generator of chain degree k + 1 is
    attached per homology class in degree k, its differential being the class
    representative.
    """
    if pres.flavor is not Flavor.ADAMS_HILTON:
        raise ValueError("cycle killing is only implemented for adams-hilton presentations")
    semibasis: List[SemibasisElement] = [SemibasisElement("1", 0)]
    delta: List[ModuleElement] = [{}]
    for k in range(1, max_chain_degree + 1):
        closure = _closure(pres, semibasis, delta)
        n = -k
        complex_ = closure.total_complex(n - 1, n)
        labels = complex_.space.labels(n)
        for j, rep in enumerate(homology_at(complex_, n).representatives):
            semibasis.append(SemibasisElement(f"w{k + 1}_{j}", n - 1))
            delta.append({labels[i]: c for i, c in rep.items()})
    result = _closure(pres, semibasis, delta)
    result.check_delta_squared()
    return result


def generators_by_chain_degree(closure: AcyclicClosure) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for m in closure.semibasis[1:]:
        counts[-m.degree] = counts.get(-m.degree, 0) + 1
    return counts


def oracle_ext_dims(
    pres: DgaPresentation, window: Tuple[int, int], max_chain_degree: int
) -> Dict[int, int]:
    """dim H^p Hom_A(Q, A) for the cycle-killing resolution Q."""
    hom = HomComplex(cycle_killing_resolution(pres, max_chain_degree), window)
    lo, hi = window
    return {p: homology_at(hom.complex, p).dimension for p in range(lo, hi + 1)}
