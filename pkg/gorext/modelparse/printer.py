#!/usr/bin/env python3
from __future__ import annotations

from typing import List

from ..algebra import DgaPresentation
from .parser import FORMAT_VERSION


def print_model(pres: DgaPresentation) -> str:
    """Canonical model text: fixed statement order, generators by (degree, name)."""
    field_spec = pres.field_spec
    field_text = "Q" if field_spec.characteristic == 0 else f"F {field_spec.characteristic}"
    lines: List[str] = [
        f"format {FORMAT_VERSION}",
        f"field {field_text}",
        f"flavor {pres.flavor.value}",
    ]
    if pres.assume_char_range:
        lines.append("assume char-range")
    for g in pres.generators:
        lines.append(f"gen {g.name} {g.degree}")
    for g, image in zip(pres.generators, pres.d.images):
        lines.append(f"d {g.name} = {pres.algebra.format_poly(image)}")
    return "\n".join(lines) + "\n"
