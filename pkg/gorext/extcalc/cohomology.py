#!/usr/bin/env python3
from __future__ import annotations

from typing import Dict, Optional, Tuple

from ..algebra import DgaPresentation, FiniteGradedAlgebra, Poly
from ..errors import InvariantViolation
from ..linalg import Homology, Vector
from ..utils.logging_config import get_logger

logger = get_logger("gorext.extcalc.cohomology")


def default_base_window(pres: DgaPresentation) -> Tuple[int, int]:
    reach = max(2, 2 * sum(g.degree for g in pres.generators))
    return (0, reach) if pres.commutative else (-reach, 0)


def base_class(
    pres: DgaPresentation, homology: Homology, poly: Poly
) -> Optional[Vector]:
    """Coordinates of the class of a cocycle, None when it is not a cocycle of that degree."""
    vec = pres.algebra.to_vector(poly, pres.orientation * homology.degree)
    coords = homology.coordinates(vec)
    if coords is None:
        return None
    return {i: c for i, c in enumerate(coords) if c}


def elliptic_formal_dimension(pres: DgaPresentation) -> int:
    """Σ|odd generators| − Σ(|even generators| − 1).

    Every Sullivan algebra with finite-dimensional cohomology has its top
    class in exactly this degree.
    """
    return sum(g.degree if g.is_odd else 1 - g.degree for g in pres.generators)


def finiteness_heuristic(pres: DgaPresentation, dims: Dict[int, int], hi: int) -> bool:
    """Heuristic, not a proof: the observed top degree N equals the elliptic
    formal dimension, H vanishes on (N, hi] and hi ≥ max(2N, Σ|v|).

    A finite window cannot rule out classes beyond it; callers report the
    flag as a heuristic. The tensor side always answers False.
    """
    if not pres.generators:
        return True
    if not pres.commutative:
        return False
    nonzero = [p for p, dim in dims.items() if dim]
    top = max(nonzero) if nonzero else 0
    if top != elliptic_formal_dimension(pres):
        return False
    return hi >= max(2 * top, sum(g.degree for g in pres.generators))


def cohomology_algebra(
    pres: DgaPresentation, window: Optional[Tuple[int, int]] = None
) -> FiniteGradedAlgebra:
    """H(A) on a window of cohomological degrees as a finite graded algebra."""
    lo, hi = window if window is not None else default_base_window(pres)
    if lo > hi:
        raise ValueError(f"empty window {lo}..{hi}")
    algebra = pres.algebra
    homs = pres.base_homology(list(range(lo, hi + 1)))
    reps: Dict[int, list] = {}
    basis: Dict[int, Tuple[str, ...]] = {}
    for p, h in homs.items():
        if not h.dimension:
            continue
        polys = [algebra.from_vector(rep, pres.orientation * p) for rep in h.representatives]
        reps[p] = polys
        basis[p] = tuple(f"[{algebra.format_poly(poly)}]" for poly in polys)

    table: Dict[Tuple[int, int, int, int], Vector] = {}
    for da, left in reps.items():
        for db, right in reps.items():
            target = homs.get(da + db)
            if target is None or not target.dimension:
                continue
            for i, a in enumerate(left):
                for j, b in enumerate(right):
                    coords = base_class(pres, target, algebra.multiply(a, b))
                    if coords is None:
                        raise InvariantViolation(
                            f"product of cocycles in degrees {da} and {db} is not a cocycle"
                        )
                    if coords:
                        table[(da, i, db, j)] = coords

    unit = None
    if 0 in homs and homs[0].dimension:
        unit = base_class(pres, homs[0], algebra.one())
    finite = finiteness_heuristic(pres, {p: h.dimension for p, h in homs.items()}, hi)
    logger.debug("Built cohomology algebra", dims={p: len(b) for p, b in basis.items()}, finite=finite)
    return FiniteGradedAlgebra(pres.field_spec, basis, table, unit, finite)
