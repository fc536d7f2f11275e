#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Union

from sympy import GF, QQ, isprime

from ..errors import PresentationError

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"

ScalarLike = Union[int, Fraction, str, Any]


@lru_cache(maxsize=None)
def _domain(kind: str, modulus: Optional[int]) -> Any:
    if kind == RATIONALS:
        return QQ
    return GF(modulus)


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: the rationals or a prime field F_p with p odd.

    Scalars are sympy domain elements; rationals stay in lowest terms with a
    positive denominator and residues are read back in [0, p).
    """

    kind: str = RATIONALS
    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise PresentationError("the rationals take no modulus")
            return
        if self.kind != PRIME_FIELD:
            raise PresentationError(f"Unknown field kind: {self.kind}")
        if not isinstance(self.modulus, int) or not isprime(self.modulus):
            raise PresentationError(f"field modulus {self.modulus} is not prime")
        if self.modulus == 2:
            raise PresentationError("characteristic 2 is not supported")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Read ``Q``, ``F3`` or ``F 3``."""
        token = text.strip().replace(" ", "")
        if token in ("Q", "QQ"):
            return cls.rationals()
        if token[:1] in ("F", "f") and token[1:].isdigit():
            return cls.prime(int(token[1:]))
        raise PresentationError(f"Unknown field: {text!r}")

    @property
    def domain(self) -> Any:
        return _domain(self.kind, self.modulus)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else int(self.modulus or 0)

    @property
    def label(self) -> str:
        return "Q" if self.kind == RATIONALS else f"F{self.modulus}"

    @property
    def zero(self) -> Any:
        return self.domain.zero

    @property
    def one(self) -> Any:
        return self.domain.one

    def __call__(self, value: ScalarLike) -> Any:
        return self.element(value)

    def element(self, value: ScalarLike) -> Any:
        """Convert an int, Fraction or ``"p/q"`` string into a field element."""
        K = self.domain
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return K(value)
        if isinstance(value, Fraction):
            if self.kind == PRIME_FIELD and value.denominator % int(self.modulus or 1) == 0:
                raise ValueError(
                    f"denominator {value.denominator} is not invertible in {self.label}"
                )
            return K(value.numerator) / K(value.denominator)
        return K.convert(value)

    def to_fraction(self, a: Any) -> Fraction:
        if self.kind == RATIONALS:
            return Fraction(int(self.domain.numer(a)), int(self.domain.denom(a)))
        return Fraction(self.residue(a))

    def residue(self, a: Any) -> int:
        """Representative in [0, p) of an F_p element."""
        if self.kind == RATIONALS:
            raise ValueError("residues only exist in prime fields")
        return int(self.domain.to_int(a)) % int(self.modulus or 1)

    def to_json(self, a: Any) -> str:
        """Canonical scalar for reports, always a string.

        Rationals are written reduced as "n" or "n/d" with d > 0; F_p elements
        as their residue "r" with 0 <= r < p.
        """
        if self.kind == RATIONALS:
            value = self.to_fraction(a)
            if value.denominator == 1:
                return str(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        return str(self.residue(a))

    def format(self, a: Any) -> str:
        return self.to_json(a)

    def half(self) -> Any:
        return self.one / self.element(2)

    def sign(self, exponent: int) -> Any:
        return self.one if exponent % 2 == 0 else -self.one
