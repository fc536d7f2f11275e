#!/usr/bin/env python3
"""
Built-in model builders and the name:params catalog.
"""

from __future__ import annotations

import unittest

from gorext.algebra import Flavor, check_differential
from gorext.errors import PresentationError
from gorext.linalg import FieldSpec
from gorext.models import (
    RECIPES,
    build_builtin,
    list_builtins,
    point_model,
    product_model,
    sphere_model,
    split_builtin,
    suspension_model,
    two_cell_model,
    with_contractible_pair,
)

F3 = FieldSpec.prime(3)


class TestBuilders(unittest.TestCase):
    def test_spheres(self):
        odd = sphere_model(3)
        self.assertEqual([(g.name, g.degree) for g in odd.generators], [("x", 3)])
        even = sphere_model(4)
        self.assertEqual([(g.name, g.degree) for g in even.generators], [("x", 4), ("y", 7)])
        self.assertTrue(check_differential(even).ok)
        ah = sphere_model(4, "ah")
        self.assertEqual(ah.flavor, Flavor.ADAMS_HILTON)
        self.assertEqual([g.degree for g in ah.generators], [3])
        with self.assertRaises(ValueError):
            sphere_model(1)

    def test_two_cell_reads_r_in_the_field(self):
        pres = two_cell_model(2, 3, F3)
        self.assertEqual(pres.name, "two_cell_2_3")
        # r = 3 vanishes in F3
        self.assertFalse(pres.differential_of("a'"))
        self.assertTrue(two_cell_model(2, 3).differential_of("a'"))
        with self.assertRaises(ValueError):
            two_cell_model(1, 3)

    def test_suspension(self):
        pres = suspension_model([(1, 1), (2, 2)])
        self.assertEqual([g.name for g in pres.generators], ["a1", "a2_1", "a2_2"])
        self.assertFalse(pres.commutative)
        self.assertEqual(suspension_model([]).name, "point")
        with self.assertRaises(ValueError):
            suspension_model([(1, 1), (1, 2)])
        with self.assertRaises(ValueError):
            suspension_model([(0, 1)])

    def test_generator_names_are_fixed(self):
        builds = {
            "sphere:4": (["x", "y"], lambda: sphere_model(4)),
            "sphere:4,ah": (["a"], lambda: sphere_model(4, "ah")),
            "two_cell:7,3": (["a", "a'"], lambda: two_cell_model(7, 3, F3)),
            "suspension": (["a2", "a3"], lambda: suspension_model([(2, 1), (3, 1)])),
        }
        for label, (names, build) in builds.items():
            with self.subTest(model=label):
                first, second = build(), build()
                self.assertEqual([g.name for g in first.generators], names)
                self.assertEqual(repr(first), repr(second))
                degrees = [g.degree for g in first.generators]
                self.assertEqual(degrees, sorted(degrees))

    def test_product_renames_clashes(self):
        pres = product_model(sphere_model(3), sphere_model(2))
        names = {g.name for g in pres.generators}
        self.assertEqual(names, {"x_1", "x_2", "y"})
        self.assertTrue(check_differential(pres).ok)
        with self.assertRaises(ValueError):
            product_model(sphere_model(3), sphere_model(3, "ah"))
        with self.assertRaises(ValueError):
            product_model(sphere_model(3), sphere_model(3, field_spec=F3))

    def test_contractible_pair(self):
        pres = with_contractible_pair(sphere_model(3), 4)
        self.assertEqual([g.name for g in pres.generators], ["x", "cu", "cw"])
        self.assertFalse(pres.is_minimal)
        again = with_contractible_pair(pres, 4)
        self.assertIn("cu_", {g.name for g in again.generators})
        ah = with_contractible_pair(two_cell_model(2, 3, F3), 2)
        self.assertEqual({g.name: g.degree for g in ah.generators}["cw"], 1)
        with self.assertRaises(ValueError):
            with_contractible_pair(sphere_model(3), 1)

    def test_point(self):
        self.assertEqual(point_model().algebra.rank, 0)
        self.assertFalse(point_model("ah").commutative)


class TestCatalog(unittest.TestCase):
    def test_split(self):
        self.assertEqual(split_builtin("two_cell:2, 3"), ("two_cell", ["2", "3"]))
        self.assertEqual(split_builtin("point"), ("point", []))

    def test_build(self):
        self.assertEqual(build_builtin("sphere:3").name, "S3")
        self.assertFalse(build_builtin("sphere:4,ah").commutative)
        self.assertEqual(build_builtin("two_cell:2,3", F3).field_spec, F3)
        self.assertEqual(len(build_builtin("suspension:1x1,2x1").generators), 2)
        pres = build_builtin("sphere_product:3,3")
        self.assertEqual([g.name for g in pres.generators], ["x_1", "x_2"])
        self.assertFalse(build_builtin("point:ah").commutative)

    def test_errors(self):
        with self.assertRaises(ValueError):
            build_builtin("torus:2")
        with self.assertRaises(ValueError):
            build_builtin("two_cell:2")
        with self.assertRaises(ValueError):
            build_builtin("sphere:three")
        with self.assertRaises(ValueError):
            build_builtin("suspension:12")
        with self.assertRaises(PresentationError):
            build_builtin("sphere:3,cubical")

    def test_listing_is_sorted(self):
        names = [recipe.name for recipe in list_builtins()]
        self.assertEqual(names, sorted(RECIPES))
        self.assertIn("two_cell", names)


if __name__ == "__main__":
    unittest.main()
