#!/usr/bin/env python3
"""
Settings loading and validation, run options and the engine factory.
"""

from __future__ import annotations

import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from pydantic import ValidationError

from gorext.errors import ConfigError
from gorext.linalg import FieldSpec
from gorext.modelparse import emit_report
from gorext.settings import (
    CACHE_ENV,
    CONFIG_ENV,
    EngineFactory,
    RunConfig,
    SettingsLoader,
    SettingsValidator,
)


def _clean_env():
    return mock.patch.dict(
        os.environ, {k: v for k, v in os.environ.items() if k not in (CACHE_ENV, CONFIG_ENV)},
        clear=True,
    )


class TestSettingsLoader(unittest.TestCase):
    def test_packaged_settings(self):
        with _clean_env():
            settings = SettingsLoader().load()
        for section in ("engine", "invariants", "output", "cache", "logging", "builtins"):
            self.assertIn(section, settings)
        self.assertNotIn("includes", settings)
        self.assertEqual(settings["invariants"], {"n": 2, "m_max": 8})
        SettingsValidator().validate(settings)

    def test_cache_directory_from_environment(self):
        with _clean_env():
            os.environ[CACHE_ENV] = "/tmp/gorext-test-cache"
            settings = SettingsLoader().load()
        self.assertEqual(settings["cache"]["directory"], "/tmp/gorext-test-cache")

    def test_config_path_from_environment(self):
        with tempfile.TemporaryDirectory() as tmp, _clean_env():
            path = Path(tmp) / "custom.yaml"
            path.write_text("includes: [defaults.yaml]\nextra: {answer: 42}\n", encoding="utf-8")
            os.environ[CONFIG_ENV] = str(path)
            loader = SettingsLoader()
            settings = loader.load()
        self.assertEqual(loader.settings_path, str(path))
        self.assertEqual(settings["extra"], {"answer": 42})
        self.assertEqual(settings["engine"]["window_factor"], 2)

    def test_local_include_overrides_package_data(self):
        with tempfile.TemporaryDirectory() as tmp:
            Path(tmp, "main.yaml").write_text("includes: [defaults.yaml, local.yaml]\n")
            Path(tmp, "local.yaml").write_text("engine: {window_factor: 3}\n")
            settings = SettingsLoader(str(Path(tmp, "main.yaml"))).load()
        self.assertEqual(settings["engine"]["window_factor"], 3)
        self.assertEqual(settings["engine"]["lift_seed"], "symmetric")

    def test_missing_and_malformed_files(self):
        with self.assertRaises(ConfigError):
            SettingsLoader("/nonexistent/gorext-settings.yaml").load()
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "list.yaml"
            path.write_text("- a\n- b\n")
            with self.assertRaises(ConfigError):
                SettingsLoader(str(path)).load()


class TestSettingsValidator(unittest.TestCase):
    def setUp(self):
        with _clean_env():
            self.settings = SettingsLoader().load()
        self.validator = SettingsValidator()

    def assertInvalid(self, section, key, value):
        self.settings[section][key] = value
        with self.assertRaises(ConfigError):
            self.validator.validate(self.settings)

    def test_missing_section(self):
        del self.settings["logging"]
        with self.assertRaises(ConfigError):
            self.validator.validate(self.settings)

    def test_engine_values(self):
        self.assertInvalid("engine", "window_policy", "guess")
        self.setUp()
        self.assertInvalid("engine", "window_factor", 0)
        self.setUp()
        self.assertInvalid("engine", "weight_margin", 0)
        self.setUp()
        self.assertInvalid("engine", "lift_seed", "random")

    def test_invariant_values(self):
        self.assertInvalid("invariants", "n", 1)
        self.setUp()
        self.assertInvalid("invariants", "m_max", -1)

    def test_output_and_logging(self):
        self.assertInvalid("output", "format", "xml")
        self.setUp()
        self.assertInvalid("logging", "level", "LOUD")

    def test_builtin_entries(self):
        self.assertInvalid("builtins", "broken", {"description": "no spec"})
        self.setUp()
        self.assertInvalid("builtins", "empty", {"spec": "point", "window": [3, 1]})


class TestRunConfig(unittest.TestCase):
    def test_exactly_one_source(self):
        RunConfig(command="ext", builtin="sphere:3")
        with self.assertRaises(ValidationError):
            RunConfig(command="ext")
        with self.assertRaises(ValidationError):
            RunConfig(command="ext", builtin="sphere:3", model_path="m.model")

    def test_ranges(self):
        with self.assertRaises(ValidationError):
            RunConfig(command="ext", builtin="point", window=(3, 1))
        with self.assertRaises(ValidationError):
            RunConfig(command="invariants", builtin="point", n=1)
        with self.assertRaises(ValidationError):
            RunConfig(command="ext", builtin="point", output_format="xml")
        with self.assertRaises(ValidationError):
            RunConfig(command="ext", builtin="point", weight_margin=0)
        with self.assertRaises(ValidationError):
            RunConfig(command="plot", builtin="point")

    def test_frozen(self):
        config = RunConfig(command="check", builtin="point")
        with self.assertRaises(ValidationError):
            config.builtin = "sphere:3"


class TestEngineFactory(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with _clean_env():
            cls.factory = EngineFactory()

    def test_run_config_defaults(self):
        config = self.factory.run_config("invariants", builtin="sphere:3", window=None)
        self.assertEqual((config.n, config.m_max, config.output_format), (2, 8, "json"))
        self.assertTrue(config.use_cache)
        self.assertIsNone(config.window)

    def test_resolve_window(self):
        config = self.factory.run_config("ext", builtin="two_cell:2,3")
        pres = self.factory.load_presentation(config)
        self.assertEqual(self.factory.resolve_window(config, pres), (-3, 6))
        explicit = self.factory.run_config("ext", builtin="two_cell:2,3", window=(-4, 6))
        self.assertEqual(self.factory.resolve_window(explicit, pres), (-4, 6))

    def test_catalog_name_resolves(self):
        config = self.factory.run_config("ext", builtin="two_cell_f3")
        pres = self.factory.load_presentation(config)
        self.assertEqual(pres.field_spec, FieldSpec.prime(3))
        self.assertEqual([g.name for g in pres.generators], ["a", "a'"])
        self.assertEqual(self.factory.resolve_window(config, pres), (-4, 6))
        override = self.factory.run_config("ext", builtin="two_cell_f3", field="F5")
        self.assertEqual(self.factory.load_presentation(override).field_spec, FieldSpec.prime(5))

    def test_every_catalog_entry_builds(self):
        for entry in self.factory.builtin_entries():
            with self.subTest(name=entry["name"]):
                config = self.factory.run_config("check", builtin=entry["name"])
                self.assertTrue(self.factory.run(config).valid)

    def test_model_file_with_field_override(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "s3.model"
            path.write_text("assume char-range\ngen x 3\n", encoding="utf-8")
            config = self.factory.run_config("check", model_path=str(path), field="F5")
            pres = self.factory.load_presentation(config)
        self.assertEqual(pres.name, "s3")
        self.assertEqual(pres.field_spec, FieldSpec.prime(5))

    def test_check_report(self):
        config = self.factory.run_config("check", builtin="two_cell:2,1")
        report = self.factory.run(config)
        self.assertTrue(report.valid)
        self.assertFalse(report.minimal)
        self.assertEqual(report.linear_part, {"a'": {"a": "-1"}})
        self.assertEqual(report.linear_homology, {"1": 0, "2": 0})
        self.assertEqual(report.model.generators, {"a": 1, "a'": 2})

    def test_scalars_are_canonical_strings(self):
        for field, expected in (("Q", "-3"), ("F5", "2")):
            with self.subTest(field=field):
                config = self.factory.run_config("check", builtin="two_cell:2,3", field=field)
                report = self.factory.run(config)
                self.assertEqual(report.linear_part, {"a'": {"a": expected}})
                data = json.loads(emit_report(report, "json"))
                self.assertEqual(data["linear_part"]["a'"]["a"], expected)

    def test_ext_report_for_two_cell_over_f3(self):
        config = self.factory.run_config(
            "ext", builtin="two_cell:2,3", field="F3", window=(-4, 6)
        )
        report = self.factory.run(config)
        self.assertEqual(report.dims["-2"], 10)
        self.assertEqual(report.dims["3"], 1)
        self.assertEqual(report.gorenstein.verdict, "no")
        self.assertEqual(report.formal_dimension, 3)
        self.assertEqual(report.formal_dimension_status, "exact")
        self.assertIsNone(report.products)

    def test_ah_report_states_missing_evaluation(self):
        config = self.factory.run_config("ext", builtin="two_cell:2,3", field="F3", window=(-2, 2))
        report = self.factory.run(config)
        self.assertIsNone(report.evaluation)
        self.assertIn("sullivan", report.evaluation_note)
        data = json.loads(emit_report(report, "json"))
        self.assertIn("evaluation", data)
        self.assertIsNone(data["evaluation"])
        self.assertEqual(data["evaluation_note"], report.evaluation_note)
        sphere = json.loads(emit_report(self.factory.ext(
            self.factory.load_presentation(self.factory.run_config("ext", builtin="sphere:3")), (0, 8)
        ), "json"))
        self.assertEqual(len(sphere["evaluation"]), 1)
        self.assertNotIn("evaluation_note", sphere)

    def test_ext_report_for_odd_sphere(self):
        pres = self.factory.load_presentation(self.factory.run_config("ext", builtin="sphere:3"))
        report = self.factory.ext(pres, (0, 8))
        self.assertEqual(report.gorenstein.verdict, "yes")
        self.assertEqual(report.base_cohomology, {"0": 1, "3": 1})
        self.assertTrue(report.poincare_duality.ok)
        self.assertTrue(report.evaluation_nonzero)
        self.assertEqual(len(report.evaluation), 1)
        self.assertIsNotNone(report.unit_note)

    def test_invariants_report(self):
        config = self.factory.run_config("invariants", builtin="sphere:3", window=(0, 8))
        report = self.factory.run(config)
        self.assertEqual(report.zcl.value, 1)
        self.assertEqual(report.htc.value, 1)
        self.assertEqual(report.criterion.verdict, "equal")
        self.assertEqual(report.criterion.m, 1)

    def test_cache_material(self):
        config = self.factory.run_config("invariants", builtin="sphere:3", window=(0, 8))
        pres = self.factory.load_presentation(config)
        material = self.factory.cache_material(config, pres, (0, 8))
        self.assertEqual(material["window"], [0, 8])
        self.assertEqual((material["n"], material["m_max"]), (2, 8))
        self.assertIn("gen x 3", material["model"])

    def test_builtin_entries(self):
        names = [entry["name"] for entry in self.factory.builtin_entries()]
        self.assertEqual(names, sorted(names))
        self.assertIn("two_cell_f3", names)

    def test_invalid_settings_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "main.yaml"
            path.write_text("engine: {}\n", encoding="utf-8")
            with self.assertRaises(ConfigError):
                EngineFactory(str(path))


if __name__ == "__main__":
    unittest.main()
