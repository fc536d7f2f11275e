#!/usr/bin/env python3
"""Exception hierarchy shared by the engine and the command line."""

from __future__ import annotations

from typing import Optional


class GorextError(Exception):
    """Base class for every error raised by gorext."""


class ModelParseError(GorextError):
    """Positioned diagnostic from the model-description parser."""

    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"{line}:{column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


class PresentationError(GorextError, ValueError):
    """A presentation violates a structural rule (degrees, parity, d^2)."""


class NotAComplexError(GorextError):
    """Two consecutive differential blocks do not compose to zero."""

    def __init__(self, degree: int, detail: str = ""):
        message = f"not a complex at degree {degree}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.degree = degree


class ChainMapError(GorextError):
    """A degree map does not commute with the differentials."""

    def __init__(self, degree: int):
        super().__init__(f"map does not commute with the differentials at degree {degree}")
        self.degree = degree


class ResolutionError(GorextError):
    """The lifting system for an acyclic closure has no solution."""

    def __init__(self, generator: str, degree: int, detail: str = ""):
        message = f"cannot close generator '{generator}' in degree {degree}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.generator = generator
        self.degree = degree


class WindowError(GorextError):
    """A requested degree lies outside the verified range of a truncation."""

    def __init__(self, message: str, degree: Optional[int] = None):
        super().__init__(message)
        self.degree = degree


class InvariantViolation(GorextError):
    """An identity that must hold exactly (D^2 = 0, algebra axioms) failed."""


class ConfigError(GorextError, ValueError):
    """Invalid configuration file or run options."""
