#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import PresentationError
from ..linalg import (
    ChainComplex,
    DegreeMap,
    FieldSpec,
    GradedSpace,
    Homology,
    homology_at,
    matrix_from_columns,
)
from ..utils.logging_config import get_logger
from .graded import (
    Derivation,
    FreeCommutativeAlgebra,
    FreeGradedAlgebra,
    FreeTensorAlgebra,
    Generator,
    Key,
    Poly,
    add_into,
)

logger = get_logger("gorext.algebra.presentation")

Coefficient = Union[int, Fraction, str, Any]
Term = Tuple[Coefficient, Sequence[str]]


class Flavor(str, Enum):
    """Sullivan presentations are cohomological, Adams-Hilton ones homological."""

    SULLIVAN = "sullivan"
    ADAMS_HILTON = "adams-hilton"

    @property
    def commutative(self) -> bool:
        return self is Flavor.SULLIVAN

    @property
    def min_degree(self) -> int:
        return 2 if self is Flavor.SULLIVAN else 1

    @property
    def differential_degree(self) -> int:
        return 1 if self is Flavor.SULLIVAN else -1

    @property
    def orientation(self) -> int:
        return 1 if self is Flavor.SULLIVAN else -1

    @classmethod
    def parse(cls, text: str) -> "Flavor":
        token = text.strip().lower()
        aliases = {
            "sullivan": cls.SULLIVAN,
            "commutative": cls.SULLIVAN,
            "adams-hilton": cls.ADAMS_HILTON,
            "ah": cls.ADAMS_HILTON,
            "tensor": cls.ADAMS_HILTON,
        }
        if token not in aliases:
            raise PresentationError(f"Unknown flavor: {text!r}")
        return aliases[token]


@dataclass(frozen=True)
class DifferentialCheck:
    ok: bool
    generator: Optional[str] = None
    residue: Poly = field(default_factory=dict)
    residue_text: str = ""


class DgaPresentation:
    """Free DGA given by a field, a flavor, graded generators and d on generators.

    Generators are kept in (degree, name) order. Degrees are the natural ones
    of the flavor; ``cdegree`` converts a term to the cohomological convention
    in which an Adams-Hilton chain of degree q sits in degree -q.
    """

    def __init__(
        self,
        field_spec: FieldSpec,
        flavor: Flavor,
        generators: Sequence[Generator],
        differential: Mapping[str, Poly],
        assume_char_range: bool = False,
        name: Optional[str] = None,
    ):
        self.field_spec = field_spec
        self.flavor = flavor
        self.name = name
        self.assume_char_range = assume_char_range
        ordered = sorted(generators, key=lambda g: (g.degree, g.name))
        for g in ordered:
            if g.degree < flavor.min_degree:
                raise PresentationError(
                    f"generator '{g.name}' has degree {g.degree}; "
                    f"{flavor.value} generators need degree >= {flavor.min_degree}"
                )
        algebra_cls = FreeCommutativeAlgebra if flavor.commutative else FreeTensorAlgebra
        self.algebra: FreeGradedAlgebra = algebra_cls(ordered, field_spec)
        unknown = set(differential) - {g.name for g in ordered}
        if unknown:
            raise PresentationError(f"differential given for unknown generator(s) {sorted(unknown)}")
        images = tuple(dict(differential.get(g.name, {})) for g in ordered)
        for g, image in zip(ordered, images):
            if self.algebra.one_key() in image:
                raise PresentationError(f"d {g.name} has a constant term")
        self.d = Derivation(self.algebra, flavor.differential_degree, images)

        check = check_differential(self)
        if not check.ok:
            raise PresentationError(
                f"d^2 is not zero on generator '{check.generator}': {check.residue_text}"
            )
        if flavor.commutative and field_spec.characteristic and not assume_char_range:
            logger.warning(
                "Sullivan model over a prime field without the dimension-range assumption",
                field=field_spec.label,
            )

    # structure ---------------------------------------------------------

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return self.algebra.generators

    @property
    def commutative(self) -> bool:
        return self.flavor.commutative

    @property
    def orientation(self) -> int:
        return self.flavor.orientation

    def differential_of(self, name: str) -> Poly:
        return self.d.images[self.algebra.index_of(name)]

    def cdegree(self, key: Key) -> int:
        return self.orientation * self.algebra.degree(key)

    def cbasis(self, degree: int) -> List[Key]:
        """Basis of the cohomological degree-``degree`` component."""
        return self.algebra.basis_of_degree(self.orientation * degree)

    def cbasis_index(self, degree: int) -> Dict[Key, int]:
        return self.algebra.basis_index(self.orientation * degree)

    def generator_cdegree(self, g: Generator) -> int:
        return self.orientation * g.degree

    def top_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    # linear part ---------------------------------------------------------------

    def linear_part(self) -> Dict[str, Dict[str, Any]]:
        """Coefficients of d on generators restricted to single letters."""
        out: Dict[str, Dict[str, Any]] = {}
        for g, image in zip(self.generators, self.d.images):
            linear = {}
            for key, coeff in image.items():
                letters = self.algebra.letters(key)
                if len(letters) == 1:
                    linear[self.generators[letters[0]].name] = coeff
            out[g.name] = linear
        return out

    @property
    def is_minimal(self) -> bool:
        return not any(self.linear_part().values())

    def linear_homology(self) -> Dict[int, int]:
        """Dimensions of H(V, d_1) per natural generator degree."""
        degrees = sorted({g.degree for g in self.generators})
        if not degrees:
            return {}
        by_degree: Dict[int, List[str]] = {}
        for g in self.generators:
            by_degree.setdefault(g.degree, []).append(g.name)
        linear = self.linear_part()
        step = self.flavor.differential_degree
        space = GradedSpace({k: tuple(v) for k, v in by_degree.items()})
        blocks = {}
        for k, names in by_degree.items():
            target = {name: i for i, name in enumerate(by_degree.get(k + step, []))}
            columns = []
            for name in names:
                columns.append({target[t]: c for t, c in linear[name].items() if t in target})
            blocks[k] = matrix_from_columns(columns, len(target), self.field_spec)
        complex_ = ChainComplex(
            space, DegreeMap(space, space, step, blocks, self.field_spec), step == 1
        )
        return {k: homology_at(complex_, k).dimension for k in degrees}

    # cohomology of the base ------------------------------------------------

    def base_complex(self, lo: int, hi: int) -> ChainComplex:
        """The algebra as a cochain complex on cohomological degrees lo..hi+1."""
        basis = {n: tuple(self.cbasis(n)) for n in range(lo, hi + 2)}
        space = GradedSpace(basis)
        blocks = {}
        for n in range(lo, hi + 1):
            target_degree = self.orientation * (n + 1)
            columns = [
                self.algebra.to_vector(self.d.on_key(key), target_degree) for key in basis[n]
            ]
            blocks[n] = matrix_from_columns(columns, space.dim(n + 1), self.field_spec)
        return ChainComplex(space, DegreeMap(space, space, 1, blocks, self.field_spec), True)

    def base_homology(self, degrees: Sequence[int]) -> Dict[int, Homology]:
        if not degrees:
            return {}
        lo, hi = min(degrees), max(degrees)
        complex_ = self.base_complex(lo - 1, hi)
        return {n: homology_at(complex_, n) for n in degrees}

    def __repr__(self) -> str:
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"DgaPresentation({self.flavor.value}, {self.field_spec.label}, [{gens}])"


def check_differential(pres: DgaPresentation, up_to_degree: Optional[int] = None) -> DifferentialCheck:
    """Verify d(d(v)) = 0 generator by generator, reporting the first failure."""
    for g, image in zip(pres.generators, pres.d.images):
        if up_to_degree is not None and g.degree > up_to_degree:
            continue
        residue = pres.d.apply(image)
        if residue:
            return DifferentialCheck(False, g.name, residue, pres.algebra.format_poly(residue))
    return DifferentialCheck(True)


def poly_from_terms(algebra: FreeGradedAlgebra, terms: Sequence[Term]) -> Poly:
    """Sum of ``coefficient * product of named letters`` in written order."""
    out: Poly = {}
    for coefficient, factors in terms:
        coeff = algebra.field_spec.element(coefficient) if isinstance(
            coefficient, (int, str, Fraction)
        ) else coefficient
        word = algebra.word([algebra.index_of(name) for name in factors])
        add_into(out, word, coeff)
    return out


def build_presentation(
    field_spec: FieldSpec,
    flavor: Union[Flavor, str],
    generators: Sequence[Tuple[str, int]],
    differential: Optional[Mapping[str, Sequence[Term]]] = None,
    assume_char_range: bool = False,
    name: Optional[str] = None,
) -> DgaPresentation:
    """Presentation from generator (name, degree) pairs and d as term lists."""
    flavor = flavor if isinstance(flavor, Flavor) else Flavor.parse(flavor)
    gens = [Generator(n, d) for n, d in generators]
    ordered = sorted(gens, key=lambda g: (g.degree, g.name))
    algebra_cls = FreeCommutativeAlgebra if flavor.commutative else FreeTensorAlgebra
    scratch = algebra_cls(ordered, field_spec)
    images = {
        gen_name: poly_from_terms(scratch, terms) for gen_name, terms in (differential or {}).items()
    }
    return DgaPresentation(field_spec, flavor, ordered, images, assume_char_range, name)


def extend_presentation(
    pres: DgaPresentation,
    generators: Sequence[Tuple[str, int]],
    differential: Mapping[str, Sequence[Term]],
) -> DgaPresentation:
    """Copy of ``pres`` with extra generators; existing differentials are kept."""
    existing = {
        g.name: [
            (coeff, [pres.generators[i].name for i in pres.algebra.letters(key)])
            for key, coeff in image.items()
        ]
        for g, image in zip(pres.generators, pres.d.images)
    }
    existing.update(differential)
    return build_presentation(
        pres.field_spec,
        pres.flavor,
        [(g.name, g.degree) for g in pres.generators] + list(generators),
        existing,
        pres.assume_char_range,
        pres.name,
    )
