#!/usr/bin/env python3
"""
Simple test runner for the computational engine: linear algebra, presentations,
resolutions, Ext, invariants, built-in models and the oracles.
"""

import unittest
import sys
import time
from pathlib import Path

# Add the project root to the Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

ENGINE_MODULES = [
    "tests.test_linalg",
    "tests.test_algebra",
    "tests.test_resolution",
    "tests.test_extcalc",
    "tests.test_tcinv",
    "tests.test_models",
    "tests.test_oracles",
    "tests.test_properties",
    "tests.test_logging",
]


def run_engine_tests(verbosity=2):
    """Run the engine tests and provide a detailed summary."""
    print("🧪 gorext Engine Test Suite")
    print("=" * 50)
    print()

    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    for name in ENGINE_MODULES:
        try:
            suite.addTests(loader.loadTestsFromName(name))
        except ImportError as e:
            print(f"⚠️  {name} not available: {e}")
            return False

    start_time = time.time()
    runner = unittest.TextTestRunner(verbosity=verbosity, stream=sys.stdout)
    result = runner.run(suite)
    end_time = time.time()

    print()
    print("📊 Engine Test Summary")
    print("=" * 50)
    print(f"Total Tests: {result.testsRun}")
    print(f"Passed: {result.testsRun - len(result.failures) - len(result.errors)}")
    print(f"Failed: {len(result.failures)}")
    print(f"Errors: {len(result.errors)}")
    print(f"Skipped: {len(result.skipped)}")
    print(f"Execution Time: {end_time - start_time:.2f} seconds")

    if result.failures:
        print()
        print("❌ Failures:")
        print("-" * 20)
        for test, traceback in result.failures:
            print(f"• {test}: {traceback.split('AssertionError:')[-1].strip()}")

    if result.errors:
        print()
        print("🚨 Errors:")
        print("-" * 20)
        for test, traceback in result.errors:
            print(f"• {test}: {traceback.strip().splitlines()[-1]}")

    return len(result.failures) == 0 and len(result.errors) == 0


if __name__ == '__main__':
    quiet = "--quiet" in sys.argv
    success = run_engine_tests(verbosity=1 if quiet else 2)

    if success:
        print()
        print("✅ All engine tests passed!")
        sys.exit(0)
    else:
        print()
        print("❌ Some engine tests failed!")
        sys.exit(1)
