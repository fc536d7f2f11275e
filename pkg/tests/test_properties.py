#!/usr/bin/env python3
"""
Seeded random presentations: d² = 0, δ² = 0 and D² = 0 on small windows.
"""

from __future__ import annotations

import random
import unittest

from gorext.algebra import Flavor, build_presentation
from gorext.errors import PresentationError
from gorext.extcalc import HomComplex
from gorext.linalg import FieldSpec
from gorext.resolution import ah_acyclic_closure, sullivan_acyclic_closure

FIELDS = (FieldSpec.rationals(), FieldSpec.prime(3))
WINDOW = (-2, 2)
SEED = 7321


def random_presentation(rng: random.Random, flavor: Flavor, field_spec: FieldSpec):
    """At most four generators of degree <= 6, each d a random combination
    of basis words in the earlier ones; a d that breaks d² = 0 is dropped."""
    count = rng.randint(1, 4)
    degrees = sorted(rng.randint(flavor.min_degree, 6) for _ in range(count))
    gens = []
    diff = {}
    for i, degree in enumerate(degrees):
        partial = build_presentation(field_spec, flavor, gens, diff, True)
        target = degree + flavor.differential_degree
        keys = partial.algebra.basis_of_degree(target) if target >= 1 else []
        terms = []
        for key in keys:
            coeff = rng.randint(-2, 2)
            if coeff and rng.random() < 0.6:
                names = [partial.generators[j].name for j in partial.algebra.letters(key)]
                terms.append((coeff, names))
        name = f"v{i}"
        gens.append((name, degree))
        diff[name] = terms
        try:
            build_presentation(field_spec, flavor, gens, diff, True)
        except PresentationError:
            diff[name] = []
    return build_presentation(field_spec, flavor, gens, diff, True, "fuzz")


class TestRandomPresentations(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(SEED)

    def test_adams_hilton(self):
        for trial in range(50):
            pres = random_presentation(self.rng, Flavor.ADAMS_HILTON, FIELDS[trial % 2])
            with self.subTest(trial=trial, model=repr(pres)):
                closure = ah_acyclic_closure(pres)
                closure.check_delta_squared()
                HomComplex(closure, WINDOW).check()

    def test_sullivan(self):
        for trial in range(50):
            pres = random_presentation(self.rng, Flavor.SULLIVAN, FIELDS[trial % 2])
            with self.subTest(trial=trial, model=repr(pres)):
                closure = sullivan_acyclic_closure(pres, 4)
                closure.check_delta_squared()
                HomComplex(closure, WINDOW).check()

    def test_generator_bounds(self):
        pres = random_presentation(self.rng, Flavor.SULLIVAN, FIELDS[0])
        self.assertLessEqual(len(pres.generators), 4)
        self.assertTrue(all(2 <= g.degree <= 6 for g in pres.generators))


if __name__ == "__main__":
    unittest.main()
