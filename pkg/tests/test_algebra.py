#!/usr/bin/env python3
"""
Free graded algebras, derivations, presentations and finite graded algebras.
"""

from __future__ import annotations

import unittest

from gorext.algebra import (
    FiniteGradedAlgebra,
    Flavor,
    FreeCommutativeAlgebra,
    FreeTensorAlgebra,
    Generator,
    build_presentation,
    check_differential,
    extend_presentation,
    tensor_power,
)
from gorext.errors import PresentationError
from gorext.extcalc import cohomology_algebra
from gorext.linalg import FieldSpec

Q = FieldSpec.rationals()


def s2_sullivan():
    return build_presentation(Q, "sullivan", [("x", 2), ("y", 3)], {"y": [(1, ["x", "x"])]})


def exterior(degree: int) -> FiniteGradedAlgebra:
    one = {0: Q.one}
    return FiniteGradedAlgebra(
        Q,
        {0: ("1",), degree: ("x",)},
        {(0, 0, 0, 0): one, (0, 0, degree, 0): one, (degree, 0, 0, 0): one},
        unit=one,
    )


class TestFreeCommutativeAlgebra(unittest.TestCase):
    def setUp(self):
        self.algebra = FreeCommutativeAlgebra(
            [Generator("x", 3), Generator("z", 3), Generator("w", 2)], Q
        )

    def test_odd_square_vanishes(self):
        x = self.algebra.generator_by_name("x")
        self.assertEqual(self.algebra.multiply(x, x), {})

    def test_odd_generators_anticommute(self):
        x = self.algebra.generator_by_name("x")
        z = self.algebra.generator_by_name("z")
        xz = self.algebra.multiply(x, z)
        zx = self.algebra.multiply(z, x)
        self.assertEqual(zx, {k: -c for k, c in xz.items()})

    def test_even_generators_commute(self):
        x = self.algebra.generator_by_name("x")
        w = self.algebra.generator_by_name("w")
        self.assertEqual(self.algebra.multiply(x, w), self.algebra.multiply(w, x))

    def test_basis_counts(self):
        # degree 6: w^3 and x*z
        self.assertEqual(len(self.algebra.basis_of_degree(6)), 2)
        self.assertEqual(len(self.algebra.basis_of_degree(1)), 0)
        self.assertEqual(self.algebra.basis_of_degree(-2), [])

    def test_vector_round_trip(self):
        poly = self.algebra.power(self.algebra.generator_by_name("w"), 3)
        vec = self.algebra.to_vector(poly, 6)
        self.assertEqual(self.algebra.from_vector(vec, 6), poly)

    def test_duplicate_names(self):
        with self.assertRaises(PresentationError):
            FreeCommutativeAlgebra([Generator("x", 2), Generator("x", 3)], Q)


class TestFreeTensorAlgebra(unittest.TestCase):
    def test_words_do_not_commute(self):
        algebra = FreeTensorAlgebra([Generator("a", 1), Generator("b", 1)], Q)
        self.assertEqual(len(algebra.basis_of_degree(2)), 4)
        ab = algebra.word([0, 1])
        ba = algebra.word([1, 0])
        self.assertNotEqual(ab, ba)
        self.assertEqual(algebra.format_poly(ab), "a*b")

    def test_format_runs(self):
        algebra = FreeTensorAlgebra([Generator("a", 1)], Q)
        self.assertEqual(algebra.format_poly(algebra.word([0, 0, 0])), "a^3")
        self.assertEqual(algebra.format_poly({}), "0")


class TestDerivation(unittest.TestCase):
    def test_leibniz_in_tensor_algebra(self):
        pres = build_presentation(Q, "adams-hilton", [("a", 1), ("b", 2)], {"b": [(1, ["a"])]})
        algebra = pres.algebra
        bb = algebra.word([1, 1])
        expected = algebra.word([0, 1])
        expected.update(algebra.word([1, 0]))
        self.assertEqual(pres.d(bb), expected)

    def test_leibniz_in_commutative_algebra(self):
        pres = s2_sullivan()
        algebra = pres.algebra
        xy = algebra.word([0, 1])
        self.assertEqual(pres.d(xy), algebra.power(algebra.generator(0), 3))

    def test_inhomogeneous_differential(self):
        with self.assertRaises(PresentationError):
            build_presentation(Q, "sullivan", [("x", 2), ("y", 3)], {"y": [(1, ["x"])]})


class TestPresentation(unittest.TestCase):
    def test_generators_sorted_by_degree(self):
        pres = build_presentation(Q, "sullivan", [("y", 3), ("x", 2)], {"y": [(1, ["x", "x"])]})
        self.assertEqual([g.name for g in pres.generators], ["x", "y"])

    def test_rejects_low_degree_generators(self):
        with self.assertRaises(PresentationError):
            build_presentation(Q, "sullivan", [("x", 1)])
        with self.assertRaises(PresentationError):
            build_presentation(Q, Flavor.ADAMS_HILTON, [("a", 0)])

    def test_rejects_d_squared_nonzero(self):
        with self.assertRaises(PresentationError):
            build_presentation(
                Q,
                "sullivan",
                [("a", 2), ("b", 3), ("c", 4)],
                {"b": [(1, ["a", "a"])], "c": [(1, ["a", "b"])]},
            )

    def test_rejects_unknown_generator(self):
        with self.assertRaises(PresentationError):
            build_presentation(Q, "sullivan", [("x", 2)], {"q": [(1, ["x", "x"])]})

    def test_check_differential(self):
        self.assertTrue(check_differential(s2_sullivan()).ok)

    def test_minimality_and_linear_homology(self):
        pres = build_presentation(Q, "ah", [("a", 1), ("b", 2)], {"b": [(1, ["a"])]})
        self.assertFalse(pres.is_minimal)
        self.assertEqual(pres.linear_part()["b"], {"a": Q.one})
        self.assertEqual(pres.linear_homology(), {1: 0, 2: 0})
        self.assertTrue(s2_sullivan().is_minimal)

    def test_sullivan_base_cohomology(self):
        homs = s2_sullivan().base_homology(list(range(0, 8)))
        dims = {p: h.dimension for p, h in homs.items() if h.dimension}
        self.assertEqual(dims, {0: 1, 2: 1})

    def test_adams_hilton_degrees_are_negative(self):
        pres = build_presentation(Q, "adams-hilton", [("a", 2)])
        homs = pres.base_homology(list(range(-6, 1)))
        dims = {p: h.dimension for p, h in homs.items() if h.dimension}
        self.assertEqual(dims, {-6: 1, -4: 1, -2: 1, 0: 1})

    def test_extend_presentation_keeps_differential(self):
        base = s2_sullivan()
        # |w| = 3, dw = u with |u| = 4: a contractible pair
        pres = extend_presentation(base, [("u", 4), ("w", 3)], {"w": [(1, ["u"])]})
        self.assertEqual(pres.algebra.rank, 4)
        self.assertFalse(pres.is_minimal)
        self.assertEqual(
            pres.algebra.format_poly(pres.differential_of("y")),
            base.algebra.format_poly(base.differential_of("y")),
        )
        self.assertEqual(pres.algebra.format_poly(pres.differential_of("w")), "u")
        with self.assertRaises(PresentationError):
            extend_presentation(base, [("u", 4), ("w", 5)], {"w": [(1, ["u"])]})

    def test_prime_field_sullivan_warns(self):
        with self.assertLogs("gorext.algebra.presentation", level="WARNING"):
            build_presentation(FieldSpec.prime(3), "sullivan", [("x", 3)])


class TestFiniteGradedAlgebra(unittest.TestCase):
    def test_cohomology_of_s2(self):
        h = cohomology_algebra(s2_sullivan())
        self.assertEqual(h.degrees(), [0, 2])
        self.assertTrue(h.finite)
        duality = h.poincare_duality()
        self.assertTrue(duality.ok)
        self.assertEqual(duality.top_degree, 2)

    def test_duality_fails_for_two_dimensional_top(self):
        one = {0: Q.one}
        algebra = FiniteGradedAlgebra(
            Q,
            {0: ("1",), 2: ("u", "v")},
            {(0, 0, 0, 0): one, (0, 0, 2, 0): one, (0, 0, 2, 1): {1: Q.one},
             (2, 0, 0, 0): one, (2, 1, 0, 0): {1: Q.one}},
            unit=one,
        )
        self.assertFalse(algebra.poincare_duality().ok)

    def test_tensor_square_signs(self):
        power = tensor_power(exterior(3), 2)
        self.assertEqual({d: power.algebra.dim(d) for d in power.algebra.degrees()},
                         {0: 1, 3: 2, 6: 1})
        self.assertIsNone(power.algebra.commutativity_defect())
        self.assertIsNone(power.algebra.associativity_defect())
        one = {0: Q.one}
        x = {0: Q.one}
        _, left = power.pure_tensor([(3, x), (0, one)])
        _, right = power.pure_tensor([(0, one), (3, x)])
        ab = power.algebra.multiply(3, left, 3, right)
        ba = power.algebra.multiply(3, right, 3, left)
        self.assertEqual(ba, {k: -c for k, c in ab.items()})

    def test_fold_kernel(self):
        power = tensor_power(exterior(3), 2)
        # x⊗1 - 1⊗x spans the kernel in degree 3; x⊗x is killed in degree 6
        self.assertEqual(len(power.kernel(3)), 1)
        self.assertEqual(len(power.kernel(6)), 1)
        self.assertEqual(power.kernel(0), [])

    def test_tensor_power_needs_positive_n(self):
        with self.assertRaises(ValueError):
            tensor_power(exterior(3), 0)


if __name__ == "__main__":
    unittest.main()
