#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ..algebra import DgaPresentation, Flavor
from ..linalg import FieldSpec
from .builders import point_model, product_model, sphere_model, suspension_model, two_cell_model

Builder = Callable[[List[str], FieldSpec], DgaPresentation]


@dataclass(frozen=True)
class ModelRecipe:
    """A named family of built-in models and how to read its parameters."""

    name: str
    usage: str
    description: str
    build: Builder


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None


def _sphere(args: List[str], field_spec: FieldSpec) -> DgaPresentation:
    if not 1 <= len(args) <= 2:
        raise ValueError("usage: sphere:<n>[,sullivan|ah]")
    flavor = Flavor.parse(args[1]) if len(args) == 2 else Flavor.SULLIVAN
    return sphere_model(_int(args[0], "sphere dimension"), flavor, field_spec)


def _two_cell(args: List[str], field_spec: FieldSpec) -> DgaPresentation:
    if len(args) != 2:
        raise ValueError("usage: two_cell:<q>,<r>")
    return two_cell_model(_int(args[0], "q"), _int(args[1], "r"), field_spec)


def _suspension(args: List[str], field_spec: FieldSpec) -> DgaPresentation:
    betti: List[Tuple[int, int]] = []
    for item in args:
        degree, sep, rank = item.partition("x")
        if not sep:
            raise ValueError(f"suspension entries look like <degree>x<rank>, got {item!r}")
        betti.append((_int(degree, "degree"), _int(rank, "rank")))
    return suspension_model(betti, field_spec)


def _sphere_product(args: List[str], field_spec: FieldSpec) -> DgaPresentation:
    if len(args) < 2:
        raise ValueError("usage: sphere_product:<n1>,<n2>[,...]")
    spheres = [sphere_model(_int(a, "sphere dimension"), Flavor.SULLIVAN, field_spec) for a in args]
    result = spheres[0]
    for sphere in spheres[1:]:
        result = product_model(result, sphere)
    return result


def _point(args: List[str], field_spec: FieldSpec) -> DgaPresentation:
    if len(args) > 1:
        raise ValueError("usage: point[:sullivan|ah]")
    return point_model(Flavor.parse(args[0]) if args else Flavor.SULLIVAN, field_spec)


RECIPES: Dict[str, ModelRecipe] = {
    recipe.name: recipe
    for recipe in (
        ModelRecipe(
            "sphere", "sphere:<n>[,sullivan|ah]",
            "minimal model of the n-sphere", _sphere,
        ),
        ModelRecipe(
            "two_cell", "two_cell:<q>,<r>",
            "Adams-Hilton model of S^q with a (q+1)-cell attached by a map of degree r",
            _two_cell,
        ),
        ModelRecipe(
            "suspension", "suspension:<d>x<rank>[,...]",
            "Adams-Hilton model (TH, 0) of a suspension", _suspension,
        ),
        ModelRecipe(
            "sphere_product", "sphere_product:<n1>,<n2>[,...]",
            "Sullivan model of a product of spheres", _sphere_product,
        ),
        ModelRecipe("point", "point[:sullivan|ah]", "the one-point space", _point),
    )
}


def split_builtin(spec: str) -> Tuple[str, List[str]]:
    name, _, params = spec.strip().partition(":")
    args = [p.strip() for p in params.split(",") if p.strip()] if params else []
    return name.strip(), args


def build_builtin(spec: str, field_spec: Optional[FieldSpec] = None) -> DgaPresentation:
    """Presentation for a built-in spec such as ``two_cell:2,3`` or ``sphere:3,sullivan``."""
    name, args = split_builtin(spec)
    recipe = RECIPES.get(name)
    if recipe is None:
        raise ValueError(f"unknown built-in model {name!r}; available: {', '.join(sorted(RECIPES))}")
    return recipe.build(args, field_spec or FieldSpec.rationals())


def list_builtins() -> List[ModelRecipe]:
    return [RECIPES[name] for name in sorted(RECIPES)]
