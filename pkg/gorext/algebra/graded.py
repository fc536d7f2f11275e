#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import PresentationError
from ..linalg import FieldSpec, Vector

Key = Tuple[int, ...]
Poly = Dict[Key, Any]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    @property
    def parity(self) -> int:
        return self.degree % 2

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


def add_into(target: Poly, source: Mapping[Key, Any], scale: Any = None) -> Poly:
    """``target += scale * source`` in place, dropping cancelled terms."""
    for key, coeff in source.items():
        value = coeff if scale is None else coeff * scale
        if not value:
            continue
        total = target.get(key)
        total = value if total is None else total + value
        if total:
            target[key] = total
        else:
            target.pop(key, None)
    return target


def scale_poly(poly: Mapping[Key, Any], scale: Any) -> Poly:
    if not scale:
        return {}
    return {key: coeff * scale for key, coeff in poly.items() if coeff * scale}


def sub_poly(left: Mapping[Key, Any], right: Mapping[Key, Any], field_spec: FieldSpec) -> Poly:
    out = dict(left)
    return add_into(out, right, -field_spec.one)


class FreeGradedAlgebra:
    """Common surface of the free commutative and free tensor algebras.

    Terms are keyed by tuples: exponent vectors in the commutative case and
    letter sequences in the tensor case. Polys are plain dictionaries
    ``key -> nonzero scalar``.
    """

    commutative: bool = False

    def __init__(self, generators: Sequence[Generator], field_spec: FieldSpec):
        names = [g.name for g in generators]
        if len(set(names)) != len(names):
            raise PresentationError(f"duplicate generator names in {names}")
        for g in generators:
            if g.degree < 1:
                raise PresentationError(
                    f"generator '{g.name}' has degree {g.degree}; degrees must be positive"
                )
        self.generators: Tuple[Generator, ...] = tuple(generators)
        self.field_spec = field_spec
        self._by_name = {g.name: i for i, g in enumerate(self.generators)}
        self._basis_cache: Dict[int, List[Key]] = {}
        self._index_cache: Dict[int, Dict[Key, int]] = {}

    # structure ---------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index_of(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise PresentationError(f"unknown generator '{name}'") from None

    def has_generator(self, name: str) -> bool:
        return name in self._by_name

    def one_key(self) -> Key:
        raise NotImplementedError

    def one(self) -> Poly:
        return {self.one_key(): self.field_spec.one}

    def generator(self, index: int) -> Poly:
        raise NotImplementedError

    def generator_by_name(self, name: str) -> Poly:
        return self.generator(self.index_of(name))

    def degree(self, key: Key) -> int:
        raise NotImplementedError

    def letters(self, key: Key) -> List[int]:
        """Generator indices of a term in written order, with repetition."""
        raise NotImplementedError

    def word_length(self, key: Key) -> int:
        return len(self.letters(key))

    def poly_degree(self, poly: Mapping[Key, Any]) -> Optional[int]:
        """Common degree of the terms, None for zero; raises on inhomogeneous input."""
        degrees = {self.degree(key) for key in poly}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise PresentationError(f"inhomogeneous element with degrees {sorted(degrees)}")
        return degrees.pop()

    # arithmetic ----------------------------------------------------------

    def multiply_keys(self, left: Key, right: Key) -> Optional[Tuple[Key, int]]:
        """Product of two basis terms as (key, sign exponent), None when it vanishes."""
        raise NotImplementedError

    def multiply(self, left: Mapping[Key, Any], right: Mapping[Key, Any]) -> Poly:
        out: Poly = {}
        for lk, lc in left.items():
            for rk, rc in right.items():
                found = self.multiply_keys(lk, rk)
                if found is None:
                    continue
                key, sign = found
                value = lc * rc if sign % 2 == 0 else -(lc * rc)
                add_into(out, {key: value})
        return out

    def multiply_many(self, factors: Iterable[Mapping[Key, Any]]) -> Poly:
        result = self.one()
        for factor in factors:
            result = self.multiply(result, factor)
        return result

    def word(self, indices: Sequence[int]) -> Poly:
        """Product of generators in the given order."""
        return self.multiply_many(self.generator(i) for i in indices)

    def power(self, poly: Mapping[Key, Any], exponent: int) -> Poly:
        result = self.one()
        for _ in range(exponent):
            result = self.multiply(result, poly)
        return result

    # bases -----------------------------------------------------------------

    def _enumerate(self, degree: int) -> List[Key]:
        raise NotImplementedError

    def basis_of_degree(self, degree: int) -> List[Key]:
        """Canonically ordered basis of the degree-``degree`` component."""
        if degree < 0:
            return []
        cached = self._basis_cache.get(degree)
        if cached is None:
            cached = sorted(self._enumerate(degree), reverse=True)
            self._basis_cache[degree] = cached
            self._index_cache[degree] = {key: i for i, key in enumerate(cached)}
        return cached

    def basis_index(self, degree: int) -> Dict[Key, int]:
        self.basis_of_degree(degree)
        return self._index_cache.get(degree, {})

    def to_vector(self, poly: Mapping[Key, Any], degree: int) -> Vector:
        index = self.basis_index(degree)
        out: Vector = {}
        for key, coeff in poly.items():
            if coeff:
                out[index[key]] = coeff
        return out

    def from_vector(self, vec: Mapping[int, Any], degree: int) -> Poly:
        basis = self.basis_of_degree(degree)
        return {basis[i]: a for i, a in vec.items() if a}

    # display ----------------------------------------------------------------

    def format_key(self, key: Key) -> str:
        letters = self.letters(key)
        if not letters:
            return "1"
        runs: List[Tuple[int, int]] = []
        for letter in letters:
            if runs and runs[-1][0] == letter:
                runs[-1] = (letter, runs[-1][1] + 1)
            else:
                runs.append((letter, 1))
        parts = []
        for letter, count in runs:
            name = self.generators[letter].name
            parts.append(name if count == 1 else f"{name}^{count}")
        return "*".join(parts)

    def format_poly(self, poly: Mapping[Key, Any]) -> str:
        if not poly:
            return "0"
        pieces: List[str] = []
        for key in sorted(poly, reverse=True):
            coeff = self.field_spec.to_fraction(poly[key])
            negative = coeff < 0
            magnitude = -coeff if negative else coeff
            body = self.format_key(key)
            if body == "1":
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if not pieces:
                pieces.append(f"-{text}" if negative else text)
            else:
                pieces.append(f"- {text}" if negative else f"+ {text}")
        return " ".join(pieces)


class FreeCommutativeAlgebra(FreeGradedAlgebra):
    """Free graded-commutative algebra on generators taken in the given order.

    A key is an exponent vector; the term it names is the ordered product
    v_1^{e_1} ... v_k^{e_k}. Odd generators carry exponent at most 1.
    """

    commutative = True

    def one_key(self) -> Key:
        return (0,) * self.rank

    def generator(self, index: int) -> Poly:
        key = [0] * self.rank
        key[index] = 1
        return {tuple(key): self.field_spec.one}

    def degree(self, key: Key) -> int:
        return sum(e * g.degree for e, g in zip(key, self.generators))

    def letters(self, key: Key) -> List[int]:
        out: List[int] = []
        for i, e in enumerate(key):
            out.extend([i] * e)
        return out

    def multiply_keys(self, left: Key, right: Key) -> Optional[Tuple[Key, int]]:
        sign = 0
        odd_seen = 0
        # odd letters of ``left`` at position i pass odd letters of ``right`` at j < i
        for i, g in enumerate(self.generators):
            if g.is_odd:
                if left[i] and right[i]:
                    return None
                if left[i]:
                    sign += odd_seen
                odd_seen += right[i]
        key = tuple(a + b for a, b in zip(left, right))
        return key, sign

    def monomial(self, exponents: Mapping[int, int]) -> Poly:
        key = [0] * self.rank
        for i, e in exponents.items():
            key[i] += e
        if any(key[i] > 1 and g.is_odd for i, g in enumerate(self.generators)):
            return {}
        return {tuple(key): self.field_spec.one}

    def _enumerate(self, degree: int) -> List[Key]:
        results: List[Key] = []
        gens = self.generators

        def walk(i: int, remaining: int, acc: List[int]) -> None:
            if i == len(gens):
                if remaining == 0:
                    results.append(tuple(acc))
                return
            d = gens[i].degree
            top = remaining // d
            if gens[i].is_odd:
                top = min(top, 1)
            for e in range(top + 1):
                acc.append(e)
                walk(i + 1, remaining - e * d, acc)
                acc.pop()

        walk(0, degree, [])
        return results


class FreeTensorAlgebra(FreeGradedAlgebra):
    """Free associative algebra; keys are letter sequences and products concatenate."""

    commutative = False

    def one_key(self) -> Key:
        return ()

    def generator(self, index: int) -> Poly:
        return {(index,): self.field_spec.one}

    def degree(self, key: Key) -> int:
        return sum(self.generators[i].degree for i in key)

    def letters(self, key: Key) -> List[int]:
        return list(key)

    def multiply_keys(self, left: Key, right: Key) -> Optional[Tuple[Key, int]]:
        return left + right, 0

    def _enumerate(self, degree: int) -> List[Key]:
        if degree == 0:
            return [()]
        results: List[Key] = []
        for i, g in enumerate(self.generators):
            if g.degree <= degree:
                for tail in self.basis_of_degree(degree - g.degree):
                    results.append((i,) + tail)
        return results


@dataclass
class Derivation:
    """Derivation of a free algebra determined by its values on generators.

    ``theta(ab) = theta(a) b + (-1)^{|theta||a|} a theta(b)``; values on basis
    terms are memoised.
    """

    algebra: FreeGradedAlgebra
    degree: int
    images: Tuple[Poly, ...]
    _cache: Dict[Key, Poly] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if len(self.images) != self.algebra.rank:
            raise PresentationError(
                f"derivation has {len(self.images)} images for {self.algebra.rank} generators"
            )
        for g, image in zip(self.algebra.generators, self.images):
            expected = g.degree + self.degree
            for key in image:
                found = self.algebra.degree(key)
                if found != expected:
                    raise PresentationError(
                        f"d {g.name} is inhomogeneous: term of degree {found}, "
                        f"required {expected}"
                    )

    def on_key(self, key: Key) -> Poly:
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        algebra = self.algebra
        letters = algebra.letters(key)
        out: Poly = {}
        prefix = algebra.one()
        prefix_degree = 0
        for position, letter in enumerate(letters):
            image = self.images[letter]
            if image:
                suffix = algebra.word(letters[position + 1:])
                term = algebra.multiply(algebra.multiply(prefix, image), suffix)
                sign = self.algebra.field_spec.sign(self.degree * prefix_degree)
                add_into(out, term, sign)
            prefix = algebra.multiply(prefix, algebra.generator(letter))
            prefix_degree += algebra.generators[letter].degree
        # ``letters`` lists the canonical product, so ``key`` equals prefix * suffix
        self._cache[key] = out
        return out

    def apply(self, poly: Mapping[Key, Any]) -> Poly:
        out: Poly = {}
        for key, coeff in poly.items():
            add_into(out, self.on_key(key), coeff)
        return out

    def __call__(self, poly: Mapping[Key, Any]) -> Poly:
        return self.apply(poly)


def multiply(algebra: FreeGradedAlgebra, left: Mapping[Key, Any], right: Mapping[Key, Any]) -> Poly:
    return algebra.multiply(left, right)


def apply_derivation(theta: Derivation, poly: Mapping[Key, Any]) -> Poly:
    return theta.apply(poly)


def basis_of_degree(algebra: FreeGradedAlgebra, degree: int) -> List[Key]:
    return algebra.basis_of_degree(degree)


def substitute(
    source: FreeGradedAlgebra,
    target: FreeGradedAlgebra,
    images: Sequence[Mapping[Key, Any]],
    poly: Mapping[Key, Any],
    cache: Optional[Dict[Key, Poly]] = None,
) -> Poly:
    """Algebra map defined by generator images, applied to ``poly``."""
    out: Poly = {}
    for key, coeff in poly.items():
        value = None if cache is None else cache.get(key)
        if value is None:
            value = target.multiply_many(images[i] for i in source.letters(key))
            if cache is not None:
                cache[key] = value
        add_into(out, value, coeff)
    return out


def enumerate_weighted(
    weights: Sequence[int], odd: Sequence[bool], bound: int
) -> List[Tuple[int, ...]]:
    """Exponent vectors with total weight at most ``bound`` (odd slots capped at 1)."""
    ranges = []
    for w, is_odd in zip(weights, odd):
        top = bound // w if w > 0 else 0
        ranges.append(range(min(top, 1) + 1 if is_odd else top + 1))
    found = []
    for exps in cartesian(*ranges):
        if sum(e * w for e, w in zip(exps, weights)) <= bound:
            found.append(tuple(exps))
    return found
