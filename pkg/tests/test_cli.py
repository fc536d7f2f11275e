#!/usr/bin/env python3
"""
Command line: exit codes, output formats, the result cache and the model catalog.
"""

from __future__ import annotations

import io
import json
import tempfile
import unittest
from contextlib import redirect_stdout
from pathlib import Path
from unittest import mock

from click.testing import CliRunner

from gorext.cli import ResultCache, cache_key, cli, exit_code_for
from gorext.errors import (
    ChainMapError,
    InvariantViolation,
    ModelParseError,
    NotAComplexError,
    ResolutionError,
    WindowError,
)
from gorext.settings import EngineFactory

CASE_II = ["ext", "--builtin", "two_cell:2,3", "--field", "F3", "--window", "-4..6"]


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()
        self._tmp = tempfile.TemporaryDirectory()
        self.cache_dir = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def invoke(self, *args):
        return self.runner.invoke(cli, list(args), catch_exceptions=False)


class TestExitCodes(CliTestCase):
    def test_mapping(self):
        self.assertEqual(exit_code_for(WindowError("outside")), 2)
        self.assertEqual(exit_code_for(ResolutionError("y", 3)), 2)
        self.assertEqual(exit_code_for(InvariantViolation("D^2")), 3)
        self.assertEqual(exit_code_for(NotAComplexError(4)), 3)
        self.assertEqual(exit_code_for(ChainMapError(1)), 3)
        self.assertEqual(exit_code_for(ModelParseError(1, 1, "bad")), 1)
        self.assertEqual(exit_code_for(ValueError("bad")), 1)

    def test_missing_source(self):
        result = self.invoke("ext", "--no-cache")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("exactly one", result.output)

    def test_bad_window_syntax(self):
        result = self.invoke("ext", "--builtin", "point", "--window", "3")
        self.assertEqual(result.exit_code, 1)

    def test_unknown_builtin(self):
        result = self.invoke("check", "--builtin", "torus:2")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("unknown built-in model", result.output)

    def test_parse_error_is_positioned(self):
        path = Path(self.cache_dir) / "bad.model"
        path.write_text("gen x 2\ngen y 3\nd y = x*z\n", encoding="utf-8")
        result = self.invoke("check", "--model", str(path))
        self.assertEqual(result.exit_code, 1)
        self.assertIn("3:9: unknown generator 'z'", result.output)

    def test_window_failure(self):
        with mock.patch.object(EngineFactory, "run", side_effect=WindowError("degree 9 outside")):
            result = self.invoke(*CASE_II, "--no-cache")
        self.assertEqual(result.exit_code, 2)
        self.assertIn("WindowError", result.output)

    def test_identity_failure(self):
        with mock.patch.object(EngineFactory, "run", side_effect=InvariantViolation("D^2 != 0")):
            result = self.invoke(*CASE_II, "--no-cache")
        self.assertEqual(result.exit_code, 3)


class TestCommands(CliTestCase):
    def test_check(self):
        result = self.invoke("check", "--builtin", "two_cell:2,1")
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.output)
        self.assertFalse(data["minimal"])
        self.assertTrue(data["valid"])

    def test_ext_case_ii(self):
        result = self.invoke(*CASE_II, "--no-cache")
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.output)
        self.assertEqual(data["dims"]["-2"], 10)
        self.assertEqual(data["gorenstein"]["verdict"], "no")
        self.assertEqual(data["formal_dimension"], 3)

    def test_catalog_name_matches_family_spec(self):
        by_name = self.invoke("ext", "--builtin", "two_cell_f3", "--no-cache")
        self.assertEqual(by_name.exit_code, 0, by_name.output)
        self.assertEqual(by_name.output, self.invoke(*CASE_II, "--no-cache").output)

    def test_output_is_deterministic(self):
        first = self.invoke(*CASE_II, "--no-cache").output
        second = self.invoke(*CASE_II, "--no-cache").output
        self.assertEqual(first, second)

    def test_csv_and_table(self):
        csv_out = self.invoke(*CASE_II, "--no-cache", "-o", "csv").output
        self.assertTrue(csv_out.startswith("field,degree,value\n"))
        self.assertIn("dims,-2,10\n", csv_out)
        table = self.invoke(*CASE_II, "--no-cache", "-o", "table").output
        self.assertIn("gorenstein:", table)

    def test_invariants(self):
        result = self.invoke(
            "invariants", "--builtin", "sphere:3", "--window", "0..8", "--no-cache"
        )
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.output)
        self.assertEqual(data["zcl"]["value"], 1)
        self.assertEqual(data["criterion"]["verdict"], "equal")

    def test_version(self):
        result = self.invoke("--version")
        self.assertEqual(result.exit_code, 0)
        self.assertIn("0.1.0", result.output)


class TestCache(CliTestCase):
    def run_cached(self, *extra):
        return self.invoke(*CASE_II, "--cache-dir", self.cache_dir, *extra)

    def test_second_run_is_served_from_cache(self):
        first = self.run_cached()
        self.assertEqual(first.exit_code, 0, first.output)
        self.assertEqual(len(ResultCache(self.cache_dir).entries()), 1)
        with mock.patch.object(EngineFactory, "run", side_effect=AssertionError("recomputed")):
            second = self.run_cached()
        self.assertEqual(second.exit_code, 0)
        self.assertEqual(first.output, second.output)

    def test_corrupt_entry_is_recomputed(self):
        first = self.run_cached()
        (entry,) = Path(self.cache_dir).glob("*.json")
        entry.write_text("{not json", encoding="utf-8")
        with self.assertLogs("gorext.cli.cache", level="WARNING"):
            second = self.run_cached()
        self.assertEqual(second.exit_code, 0)
        self.assertEqual(first.output, second.output)

    def test_mismatched_material_is_discarded(self):
        store = ResultCache(self.cache_dir)
        material = {"command": "ext", "window": [0, 1]}
        path = store.put(material, {"dims": {}})
        path.write_text(json.dumps({"material": {"command": "check"}, "report": {}}))
        with self.assertLogs("gorext.cli.cache", level="WARNING"):
            self.assertIsNone(store.get(material))
        self.assertFalse(path.exists())

    def test_key_is_order_independent(self):
        self.assertEqual(cache_key({"a": 1, "b": [1, 2]}), cache_key({"b": [1, 2], "a": 1}))
        self.assertNotEqual(cache_key({"a": 1}), cache_key({"a": 2}))

    def test_show_and_purge(self):
        self.run_cached()
        shown = self.invoke("cache", "show", "--cache-dir", self.cache_dir)
        self.assertIn("(1 entries)", shown.output)
        self.assertIn("ext", shown.output)
        purged = self.invoke("cache", "purge", "--cache-dir", self.cache_dir)
        self.assertIn("Removed 1 cache entries", purged.output)
        self.assertEqual(ResultCache(self.cache_dir).entries(), [])


class TestModelsCommands(CliTestCase):
    def test_list(self):
        result = self.invoke("models", "list")
        self.assertEqual(result.exit_code, 0)
        self.assertIn("two_cell:<q>,<r>", result.output)
        self.assertIn("two_cell_f3", result.output)
        self.assertIn("--window -4..6", result.output)

    def test_emit(self):
        result = self.invoke("models", "emit", "two_cell", "2,3", "--field", "F3")
        self.assertEqual(result.exit_code, 0)
        lines = result.output.splitlines()
        self.assertEqual(lines[0], "# zero differential")
        self.assertIn("d a' = 0", lines)

    def test_emitted_model_checks(self):
        emitted = self.invoke("models", "emit", "sphere", "2").output
        path = Path(self.cache_dir) / "s2.model"
        path.write_text(emitted, encoding="utf-8")
        result = self.invoke("check", "--model", str(path))
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(json.loads(result.output)["model"]["name"], "s2")


class TestAcceptance(unittest.TestCase):
    def test_acceptance_run_passes(self):
        from gorext.scripts import acceptance

        buffer = io.StringIO()
        with redirect_stdout(buffer), self.assertRaises(SystemExit) as ctx:
            acceptance.main()
        self.assertEqual(ctx.exception.code, 0, buffer.getvalue())
        self.assertIn("All acceptance checks passed", buffer.getvalue())


if __name__ == "__main__":
    unittest.main()
