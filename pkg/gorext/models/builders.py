#!/usr/bin/env python3
from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra import DgaPresentation, Flavor, build_presentation, check_differential
from ..errors import InvariantViolation
from ..linalg import FieldSpec
from ..utils.logging_config import get_logger

logger = get_logger("gorext.models.builders")

FlavorLike = Union[Flavor, str]


def _flavor(value: FlavorLike) -> Flavor:
    return value if isinstance(value, Flavor) else Flavor.parse(value)


def _checked(pres: DgaPresentation) -> DgaPresentation:
    check = check_differential(pres)
    if not check.ok:
        raise InvariantViolation(
            f"built-in model {pres.name} has d^2 != 0 on '{check.generator}'"
        )
    return pres


def point_model(
    flavor: FlavorLike = Flavor.SULLIVAN, field_spec: Optional[FieldSpec] = None
) -> DgaPresentation:
    """The ground field itself: no generators."""
    return build_presentation(
        field_spec or FieldSpec.rationals(), _flavor(flavor), [], {}, True, "point"
    )


def sphere_model(
    n: int, flavor: FlavorLike = Flavor.SULLIVAN, field_spec: Optional[FieldSpec] = None
) -> DgaPresentation:
    """Minimal model of S^n.

    Sullivan: Λ(x) for odd n, Λ(x, y) with dy = x^2 for even n.
    Adams-Hilton: T(a) with |a| = n - 1 and zero differential.
    """
    if n < 2:
        raise ValueError(f"sphere dimension must be at least 2, got {n}")
    flavor = _flavor(flavor)
    field_spec = field_spec or FieldSpec.rationals()
    name = f"S{n}"
    if not flavor.commutative:
        pres = build_presentation(field_spec, flavor, [("a", n - 1)], {}, True, name)
    elif n % 2:
        pres = build_presentation(field_spec, flavor, [("x", n)], {}, True, name)
    else:
        pres = build_presentation(
            field_spec, flavor, [("x", n), ("y", 2 * n - 1)], {"y": [(1, ["x", "x"])]},
            True, name,
        )
    return _checked(pres)


def two_cell_model(q: int, r: int, field_spec: Optional[FieldSpec] = None) -> DgaPresentation:
    """Adams-Hilton model T(a, a') of S^q with a (q+1)-cell attached by degree r.

    |a| = q - 1, |a'| = q, da = 0 and da' = -r·a, the coefficient read in the field.
    """
    if q < 2:
        raise ValueError(f"two-cell model needs q >= 2, got {q}")
    field_spec = field_spec or FieldSpec.rationals()
    coefficient = field_spec.element(-r)
    differential = {"a'": [(coefficient, ["a"])]} if coefficient else {}
    pres = build_presentation(
        field_spec,
        Flavor.ADAMS_HILTON,
        [("a", q - 1), ("a'", q)],
        differential,
        True,
        f"two_cell_{q}_{r}",
    )
    return _checked(pres)


def suspension_model(
    betti: Sequence[Tuple[int, int]], field_spec: Optional[FieldSpec] = None
) -> DgaPresentation:
    """(T H, 0) for the suspension of a space with reduced homology ranks ``betti``.

    ``betti`` lists (degree, rank) pairs of the desuspended generators; an
    empty list gives the point.
    """
    field_spec = field_spec or FieldSpec.rationals()
    if not betti:
        return point_model(Flavor.ADAMS_HILTON, field_spec)
    generators: List[Tuple[str, int]] = []
    seen: Dict[int, int] = {}
    for degree, rank in betti:
        if degree < 1 or rank < 1:
            raise ValueError(f"suspension data needs degree >= 1 and rank >= 1, got ({degree}, {rank})")
        if degree in seen:
            raise ValueError(f"degree {degree} listed twice in suspension data")
        seen[degree] = rank
        for k in range(1, rank + 1):
            generators.append((f"a{degree}" if rank == 1 else f"a{degree}_{k}", degree))
    label = "_".join(f"{d}x{r}" for d, r in betti)
    pres = build_presentation(
        field_spec, Flavor.ADAMS_HILTON, generators, {}, True, f"suspension_{label}"
    )
    return _checked(pres)


def _terms(pres: DgaPresentation, rename: Dict[str, str]) -> Dict[str, List[Tuple[object, List[str]]]]:
    out: Dict[str, List[Tuple[object, List[str]]]] = {}
    for g, image in zip(pres.generators, pres.d.images):
        out[rename[g.name]] = [
            (coeff, [rename[pres.generators[i].name] for i in pres.algebra.letters(key)])
            for key, coeff in image.items()
        ]
    return out


def product_model(
    first: DgaPresentation, second: DgaPresentation, name: Optional[str] = None
) -> DgaPresentation:
    """Λ(V ⊕ W) with the componentwise differential.

    Clashing generator names get the suffix ``_1`` or ``_2`` of their factor.
    """
    if not (first.commutative and second.commutative):
        raise ValueError(
            f"product needs two sullivan presentations, got {first.flavor.value} and {second.flavor.value}"
        )
    if first.field_spec != second.field_spec:
        raise ValueError(
            f"field mismatch: {first.field_spec.label} and {second.field_spec.label}"
        )
    clash = {g.name for g in first.generators} & {g.name for g in second.generators}
    renames = []
    for index, pres in enumerate((first, second), start=1):
        renames.append(
            {g.name: f"{g.name}_{index}" if g.name in clash else g.name for g in pres.generators}
        )
    generators = [
        (rename[g.name], g.degree)
        for pres, rename in zip((first, second), renames)
        for g in pres.generators
    ]
    differential = {**_terms(first, renames[0]), **_terms(second, renames[1])}
    pres = build_presentation(
        first.field_spec,
        Flavor.SULLIVAN,
        generators,
        differential,
        first.assume_char_range and second.assume_char_range,
        name or f"{first.name or 'model'}x{second.name or 'model'}",
    )
    return _checked(pres)


def with_contractible_pair(pres: DgaPresentation, degree: int, prefix: str = "c") -> DgaPresentation:
    """``pres`` with a free pair u, du = w appended; the homotopy type is unchanged.

    ``degree`` is |u|. For Sullivan flavor |w| = degree + 1, for Adams-Hilton
    |w| = degree - 1.
    """
    step = pres.flavor.differential_degree
    if min(degree, degree + step) < pres.flavor.min_degree:
        raise ValueError(
            f"contractible pair in degree {degree} leaves the {pres.flavor.value} degree range"
        )
    taken = {g.name for g in pres.generators}
    u, w = f"{prefix}u", f"{prefix}w"
    while u in taken or w in taken:
        u, w = u + "_", w + "_"
    generators = [(g.name, g.degree) for g in pres.generators] + [(u, degree), (w, degree + step)]
    differential = _terms(pres, {g.name: g.name for g in pres.generators})
    differential[u] = [(1, [w])]
    extended = build_presentation(
        pres.field_spec, pres.flavor, generators, differential, pres.assume_char_range,
        f"{pres.name or 'model'}+pair{degree}",
    )
    return _checked(extended)
