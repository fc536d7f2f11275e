#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Any, Dict, List, Optional, Tuple

from ..algebra import DgaPresentation, FiniteGradedAlgebra, Poly, add_into
from ..errors import InvariantViolation
from ..linalg import Vector
from ..resolution import AcyclicClosure, ComparisonLift, lift_comparison, tensor_square_resolution
from ..utils.logging_config import get_logger, log_function_call, log_function_result
from .cohomology import base_class
from .ext import ExtAlgebra, ext_groups
from .hom import HomElement

logger = get_logger("gorext.extcalc.product")


@dataclass
class ProductContext:
    """Tensor square of the closure together with a lift P → P ⊗ P."""

    square: AcyclicClosure
    lift: ComparisonLift


def product_context(ext: ExtAlgebra, seed: str = "symmetric") -> ProductContext:
    if not ext.presentation.commutative:
        raise ValueError(
            "products are computed on the commutative side; supply a sullivan model of the same space"
        )
    square = tensor_square_resolution(ext.closure)
    return ProductContext(square, lift_comparison(ext.closure, square, seed))


def ext_product(
    ext: ExtAlgebra, f: HomElement, g: HomElement, context: Optional[ProductContext] = None
) -> HomElement:
    """μ ∘ (f ⊗ g) ∘ α with (f ⊗ g)(x ⊗ y) = (-1)^{|g||x|} f(x) g(y)."""
    context = context or product_context(ext)
    closure = ext.closure
    algebra = closure.base
    factors = context.square.extras["factors"]
    field_spec = ext.field_spec
    p, q = f.degree, g.degree
    values: Dict[int, Poly] = {}
    for i, image in enumerate(context.lift.values):
        out: Poly = {}
        for (z, k), c in image.items():
            left, right = factors[k]
            a, b = f.at(left), g.at(right)
            if not a or not b:
                continue
            term = algebra.multiply(algebra.multiply({z: c}, a), b)
            exponent = (p + q) * algebra.degree(z) + q * closure.degree(left)
            add_into(out, term, field_spec.sign(exponent))
        if out:
            values[i] = out
    return HomElement(p + q, values)


def _restricted_associativity(ext: ExtAlgebra, table: FiniteGradedAlgebra) -> bool:
    """(ab)c = a(bc) on every class triple whose partial products stay in the window."""
    inside = set(ext.homology)
    refs = [(p, i) for p in table.degrees() for i in range(table.dim(p))]
    one = ext.field_spec.one
    for a, b, c in cartesian(refs, refs, refs):
        if not {a[0] + b[0], b[0] + c[0], a[0] + b[0] + c[0]} <= inside:
            continue
        ab = table.multiply(a[0], {a[1]: one}, b[0], {b[1]: one})
        left = table.multiply(a[0] + b[0], ab, c[0], {c[1]: one})
        bc = table.multiply(b[0], {b[1]: one}, c[0], {c[1]: one})
        right = table.multiply(a[0], {a[1]: one}, b[0] + c[0], bc)
        if left != right:
            logger.warning("Ext product is not associative", classes=[a, b, c])
            return False
    return True


def _unit(ext: ExtAlgebra) -> Tuple[Optional[Vector], str]:
    epsilon = ext.hom.augmentation_cochain()
    if epsilon is None or 0 not in ext.homology:
        return None, "degree 0 is outside the window"
    if not ext.hom.differential(epsilon).is_zero():
        return None, "augmentation cochain is not a cocycle"
    coords = ext.coordinates(epsilon)
    if not coords:
        return None, "augmentation class is zero"
    return coords, ""


def ext_algebra_table(
    pres: DgaPresentation,
    window: Tuple[int, int],
    margin: Optional[int] = None,
    seed: str = "symmetric",
    stability_step: int = 2,
    check_stability: bool = True,
) -> ExtAlgebra:
    """Ext with its product table, unit and the algebra checks on the stored classes.

    Tensor presentations come back with dimensions and representatives only.
    """
    ext = ext_groups(pres, window, margin, stability_step, check_stability)
    if not pres.commutative:
        ext.checks = {"products": "unavailable for tensor presentations"}
        return ext
    log_function_call(logger, "ext_algebra_table", lo=window[0], hi=window[1], seed=seed)

    context = product_context(ext, seed)
    degrees = ext.degrees_with_classes()
    base = pres.base_homology(sorted({p + q for p in degrees for q in degrees} & set(ext.homology)))
    algebra = pres.algebra
    table: Dict[Tuple[int, int, int, int], Vector] = {}
    outside = 0
    for p, q in cartesian(degrees, degrees):
        if p + q not in ext.homology:
            outside += len(ext.reps[p]) * len(ext.reps[q])
            continue
        for (i, f), (j, g) in cartesian(enumerate(ext.reps[p]), enumerate(ext.reps[q])):
            h = ext_product(ext, f, g, context)
            coords = ext.coordinates(h)
            if coords is None:
                raise InvariantViolation(
                    f"product {ext.label(p, i)}·{ext.label(q, j)} is not a cocycle"
                )
            if coords:
                table[(p, i, q, j)] = coords
            defect: Poly = dict(h.unit_value)
            add_into(defect, algebra.multiply(f.unit_value, g.unit_value), -ext.field_spec.one)
            mismatch = base_class(pres, base[p + q], defect)
            if mismatch is None or mismatch:
                raise InvariantViolation(
                    f"evaluation does not respect the product {ext.label(p, i)}·{ext.label(q, j)}"
                )

    unit, note = _unit(ext)
    products = FiniteGradedAlgebra(
        ext.field_spec, ext.class_labels(), table, unit, ext.is_certain
    )
    unit_law: Optional[bool] = None
    if unit:
        one = ext.field_spec.one
        unit_law = all(
            products.multiply(0, unit, p, {i: one}) == {i: one}
            for p in degrees
            for i in range(products.dim(p))
        )

    ext.products = products
    ext.unit = unit
    ext.unit_note = note
    ext.checks = {
        "lift": context.lift.method,
        "graded_commutative": products.commutativity_defect() is None,
        "associative": _restricted_associativity(ext, products),
        "unit_law": unit_law,
        "ev_morphism": True,
        "products_outside_window": outside,
    }
    log_function_result(logger, "ext_algebra_table", products=len(table), checks=ext.checks)
    return ext


def class_products(ext: ExtAlgebra) -> List[Dict[str, Any]]:
    """Nonzero entries of the product table in report form."""
    if ext.products is None:
        return []
    return ext.products.to_json()["products"]
