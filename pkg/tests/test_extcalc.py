#!/usr/bin/env python3
"""
Ext on both flavors: dimensions, Gorenstein verdicts, formal dimension,
evaluation map and the product table.
"""

from __future__ import annotations

import unittest

from gorext.algebra import build_presentation
from gorext.errors import WindowError
from gorext.extcalc import (
    HomElement,
    cohomology_algebra,
    elliptic_formal_dimension,
    evaluation_map,
    ext_algebra_table,
    ext_groups,
    ext_product,
    fd_bound,
    finiteness_heuristic,
    formal_dimension,
    gorenstein_test,
    product_context,
)
from gorext.linalg import FieldSpec
from gorext.models import (
    build_builtin,
    point_model,
    sphere_model,
    two_cell_model,
    with_contractible_pair,
)

Q = FieldSpec.rationals()
F3 = FieldSpec.prime(3)

CASE_II_DIMS = {-2: 10, -1: 6, 0: 4, 1: 2, 2: 2, 3: 1, 4: 0, 5: 0, 6: 0}


def nonzero(dims):
    return {p: d for p, d in dims.items() if d}


class TestTwoCellExt(unittest.TestCase):
    """T(a, a') with |a| = q - 1, |a'| = q and da' = -r·a."""

    @classmethod
    def setUpClass(cls):
        cls.case_ii = ext_groups(two_cell_model(2, 3, F3), (-4, 6))

    def test_case_ii_dimensions(self):
        for p in (-2, -1, 0, 1, 2, 3, 4, 5, 6):
            with self.subTest(degree=p):
                self.assertEqual(self.case_ii.dims[p], CASE_II_DIMS[p])
        self.assertTrue(all(self.case_ii.dims[-i] > 0 for i in range(5)))

    def test_case_ii_not_gorenstein(self):
        verdict = gorenstein_test(self.case_ii)
        self.assertEqual(verdict.verdict, "no")
        self.assertFalse(verdict.is_gorenstein)

    def test_case_ii_formal_dimension(self):
        fd = formal_dimension(self.case_ii)
        self.assertEqual(fd.to_json(), 3)
        self.assertEqual(fd.status, "exact")
        self.assertEqual(fd_bound(self.case_ii.presentation), 3)
        self.assertTrue(self.case_ii.is_exact)

    def test_case_i_is_gorenstein_of_dimension_zero(self):
        ext = ext_groups(two_cell_model(2, 1, Q), (-6, 6))
        self.assertEqual(nonzero(ext.dims), {0: 1})
        self.assertEqual(gorenstein_test(ext).verdict, "yes")
        self.assertEqual(formal_dimension(ext).to_json(), 0)

    def test_narrow_window_is_not_certified(self):
        ext = ext_groups(two_cell_model(2, 1, Q), (-1, 1))
        self.assertEqual(gorenstein_test(ext).verdict, "unknown")

    def test_high_cell(self):
        # |a| = 6, |a'| = 7, da' = 0 over F3: sa -> 1 and sa' -> 1 survive
        ext = ext_groups(two_cell_model(7, 3, F3), (-4, 12))
        self.assertTrue(all(ext.dims[p] == 0 for p in range(2, 7)))
        self.assertEqual(ext.dims[7], 1)
        self.assertEqual(ext.dims[8], 1)
        self.assertEqual(formal_dimension(ext).to_json(), 8)
        self.assertTrue(all(ext.dims[p] == 0 for p in range(9, 13)))

    def test_contractible_pair_leaves_ext_unchanged(self):
        pres = with_contractible_pair(two_cell_model(2, 3, F3), 2)
        ext = ext_groups(pres, (-4, 6))
        self.assertEqual(ext.dims, self.case_ii.dims)

    def test_hom_complex_squares_to_zero(self):
        self.case_ii.hom.check()

    def test_differential_outside_window(self):
        with self.assertRaises(WindowError):
            self.case_ii.hom.differential(HomElement(7, {}))

    def test_empty_window(self):
        with self.assertRaises(ValueError):
            ext_groups(two_cell_model(2, 3, F3), (3, 1))

    def test_products_need_commutative_side(self):
        ext = ext_algebra_table(two_cell_model(2, 3, F3), (-2, 2))
        self.assertIsNone(ext.products)
        self.assertIn("products", ext.checks)
        with self.assertRaises(ValueError):
            product_context(ext)


class TestSullivanExt(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.s3 = ext_algebra_table(sphere_model(3), (0, 8))
        cls.s2 = ext_algebra_table(sphere_model(2), (0, 8))

    def test_odd_sphere(self):
        self.assertEqual(nonzero(self.s3.dims), {3: 1})
        self.assertTrue(self.s3.is_certain)
        self.assertEqual(gorenstein_test(self.s3).verdict, "yes")
        self.assertEqual(formal_dimension(self.s3).value, 3)

    def test_even_sphere(self):
        self.assertEqual(nonzero(self.s2.dims), {2: 1})
        self.assertEqual(gorenstein_test(self.s2).verdict, "yes")
        self.assertEqual(formal_dimension(self.s2).value, 2)

    def test_evaluation_map_is_nonzero_on_spheres(self):
        for ext in (self.s2, self.s3):
            ev = evaluation_map(ext)
            self.assertTrue(ev.nonzero)
            self.assertEqual(len(ev.images), 1)

    def test_algebra_checks(self):
        for ext in (self.s2, self.s3):
            with self.subTest(model=ext.presentation.name):
                self.assertTrue(ext.checks["graded_commutative"])
                self.assertTrue(ext.checks["associative"])
                self.assertTrue(ext.checks["ev_morphism"])
                self.assertIn(ext.checks["lift"], ("symmetric", "solve"))

    def test_no_unit_without_degree_zero_class(self):
        self.assertIsNone(self.s3.unit)
        self.assertTrue(self.s3.unit_note)

    def test_point(self):
        ext = ext_algebra_table(point_model(), (0, 0))
        self.assertEqual(ext.dims, {0: 1})
        self.assertEqual(ext.unit, {0: Q.one})
        self.assertTrue(ext.checks["unit_law"])
        self.assertEqual(gorenstein_test(ext).verdict, "yes")
        fd = formal_dimension(ext)
        self.assertEqual((fd.value, fd.status), (0, "exact"))

    def test_base_cohomology_of_sphere_product(self):
        h = cohomology_algebra(build_builtin("sphere_product:3,3"))
        self.assertEqual({d: h.dim(d) for d in h.degrees()}, {0: 1, 3: 2, 6: 1})
        self.assertTrue(h.poincare_duality().ok)


def combine(left, right, scale):
    out = dict(left)
    for k, c in right.items():
        total = out[k] + scale * c if k in out else scale * c
        if total:
            out[k] = total
        else:
            out.pop(k, None)
    return out


class TestExtProduct(unittest.TestCase):
    """Chain-level products μ∘(f⊗g)∘α on Hom, not only on classes."""

    @classmethod
    def setUpClass(cls):
        cls.s2 = ext_groups(sphere_model(2), (-3, 3))
        cls.context = product_context(cls.s2)

    def basis_elements(self, p, limit=4):
        hom = self.s2.hom
        return [hom.element(p, {k: Q.one}) for k in range(min(limit, hom.space.dim(p)))]

    def test_leibniz_rule(self):
        # D(f·g) = Df·g + (-1)^p f·Dg for arbitrary cochains
        hom = self.s2.hom
        nonzero_products = 0
        for p in (-1, 0, 1):
            for q in (-1, 0, 1):
                for f in self.basis_elements(p):
                    for g in self.basis_elements(q):
                        with self.subTest(p=p, q=q, f=f.values, g=g.values):
                            fg = ext_product(self.s2, f, g, self.context)
                            nonzero_products += not fg.is_zero()
                            lhs = hom.vector(hom.differential(fg))
                            first = ext_product(self.s2, hom.differential(f), g, self.context)
                            second = ext_product(self.s2, f, hom.differential(g), self.context)
                            rhs = combine(hom.vector(first), hom.vector(second), Q.sign(p))
                            self.assertEqual(lhs, rhs)
        self.assertGreater(nonzero_products, 0)

    def test_augmentation_cochain_squares_to_itself(self):
        epsilon = self.s2.hom.augmentation_cochain()
        square = ext_product(self.s2, epsilon, epsilon, self.context)
        self.assertEqual(square.unit_value, epsilon.unit_value)

    def test_symmetric_and_solved_lifts_agree_on_classes(self):
        ext = ext_groups(sphere_model(2), (0, 8))
        symmetric = product_context(ext, "symmetric")
        solved = product_context(ext, "solve")
        self.assertEqual(solved.lift.method, "solve")
        for p, reps in ext.reps.items():
            for q, others in ext.reps.items():
                if p + q not in ext.homology:
                    continue
                for f in reps:
                    for g in others:
                        with self.subTest(p=p, q=q):
                            a = ext.coordinates(ext_product(ext, f, g, symmetric))
                            b = ext.coordinates(ext_product(ext, f, g, solved))
                            self.assertIsNotNone(a)
                            self.assertEqual(a, b)

    def test_point_table_is_nonzero_for_both_lifts(self):
        for seed in ("symmetric", "solve"):
            with self.subTest(seed=seed):
                ext = ext_algebra_table(point_model(), (0, 0), seed=seed)
                self.assertEqual(
                    ext.products.multiply(0, {0: Q.one}, 0, {0: Q.one}), {0: Q.one}
                )
                self.assertTrue(ext.checks["associative"])

class TestFinitenessHeuristic(unittest.TestCase):
    def test_elliptic_formal_dimension(self):
        self.assertEqual(elliptic_formal_dimension(sphere_model(2)), 2)
        self.assertEqual(elliptic_formal_dimension(sphere_model(3)), 3)
        self.assertEqual(elliptic_formal_dimension(build_builtin("sphere_product:3,3")), 6)
        self.assertEqual(elliptic_formal_dimension(point_model()), 0)

    def test_window_must_reach_twice_the_top(self):
        s3 = sphere_model(3)
        self.assertFalse(cohomology_algebra(s3, (0, 5)).finite)
        self.assertTrue(cohomology_algebra(s3, (0, 6)).finite)
        self.assertTrue(finiteness_heuristic(s3, {0: 1, 3: 1}, 6))

    def test_top_off_the_formal_dimension(self):
        # Λ(x), |x| = 2, d = 0 has a class in every even degree
        polynomial = build_presentation(Q, "sullivan", [("x", 2)])
        h = cohomology_algebra(polynomial, (0, 8))
        self.assertEqual(h.degrees(), [0, 2, 4, 6, 8])
        self.assertFalse(h.finite)
        self.assertEqual(h.to_json()["finite_check"], "heuristic")
        self.assertFalse(h.poincare_duality().ok)

    def test_tensor_side_never_passes(self):
        self.assertFalse(finiteness_heuristic(two_cell_model(2, 3, F3), {0: 1}, 100))

    def test_gorenstein_reason_names_the_heuristic(self):
        ext = ext_groups(sphere_model(3), (0, 8))
        verdict = gorenstein_test(ext, base_finite=False)
        self.assertEqual(verdict.verdict, "unknown")
        self.assertIn("heuristic", verdict.reason)
        self.assertIn("heuristic", gorenstein_test(ext).reason)


if __name__ == "__main__":
    unittest.main()
