#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..linalg import homology_at
from ..utils.logging_config import get_logger
from .closure import AcyclicClosure

logger = get_logger("gorext.resolution.verify")


@dataclass(frozen=True)
class AcyclicityCheck:
    """Outcome of comparing a closure's homology with the ground field."""

    ok: bool
    degree: Optional[int] = None
    dimension: Optional[int] = None
    dims: Dict[int, int] = field(default_factory=dict)


def verify_acyclic(closure: AcyclicClosure, window: Tuple[int, int]) -> AcyclicityCheck:
    """Homology of the total complex must be K in degree 0 and vanish elsewhere in the window.

    The first degree where this fails is returned as the counterexample.
    """
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {lo}..{hi}")
    complex_ = closure.total_complex(lo - 1, hi)
    dims: Dict[int, int] = {}
    failure: Optional[Tuple[int, int]] = None
    for n in range(lo, hi + 1):
        dims[n] = homology_at(complex_, n).dimension
        expected = 1 if n == 0 else 0
        if failure is None and dims[n] != expected:
            failure = (n, dims[n])
    if failure is None:
        return AcyclicityCheck(True, dims=dims)
    logger.debug("Closure is not acyclic", kind=closure.kind, degree=failure[0])
    return AcyclicityCheck(False, failure[0], failure[1], dims)
