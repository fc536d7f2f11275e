#!/usr/bin/env python3
"""
Acceptance checks: the two-cell Ext computations and determinism of the reports.
"""

from __future__ import annotations

import sys
import time
from typing import Callable, Dict, List, Tuple

from ..extcalc import ext_groups, formal_dimension, gorenstein_test
from ..linalg import FieldSpec
from ..modelparse import emit_report
from ..models import two_cell_model
from ..settings import EngineFactory

Check = Tuple[str, Callable[[], bool]]


def _case_ii() -> List[Check]:
    ext = ext_groups(two_cell_model(2, 3, FieldSpec.prime(3)), (-4, 6))
    expected = {-2: 10, -1: 6, 0: 4, 1: 2, 2: 2, 3: 1, 4: 0, 5: 0, 6: 0}
    return [
        ("two_cell(2,3) over F3: dimensions on -4..6",
         lambda: all(ext.dims[p] == d for p, d in expected.items())),
        ("two_cell(2,3) over F3: nonzero in degrees 0..-4",
         lambda: all(ext.dims[-i] > 0 for i in range(5))),
        ("two_cell(2,3) over F3: formal dimension 3",
         lambda: formal_dimension(ext).to_json() == 3),
        ("two_cell(2,3) over F3: not Gorenstein",
         lambda: gorenstein_test(ext).verdict == "no"),
    ]


def _case_i() -> List[Check]:
    ext = ext_groups(two_cell_model(2, 1, FieldSpec.rationals()), (-6, 6))
    return [
        ("two_cell(2,1) over Q: Ext is the field in degree 0",
         lambda: {p: d for p, d in ext.dims.items() if d} == {0: 1}),
        ("two_cell(2,1) over Q: Gorenstein", lambda: gorenstein_test(ext).verdict == "yes"),
        ("two_cell(2,1) over Q: formal dimension 0",
         lambda: formal_dimension(ext).to_json() == 0),
    ]


def _case_q7() -> List[Check]:
    ext = ext_groups(two_cell_model(7, 3, FieldSpec.prime(3)), (-4, 12))
    return [
        ("two_cell(7,3) over F3: Ext vanishes in degrees 2..6",
         lambda: all(ext.dims[p] == 0 for p in range(2, 7))),
        ("two_cell(7,3) over F3: Ext^7 and Ext^8 are the field",
         lambda: ext.dims[7] == 1 and ext.dims[8] == 1),
        ("two_cell(7,3) over F3: formal dimension 8",
         lambda: formal_dimension(ext).to_json() == 8),
        ("two_cell(7,3) over F3: nothing above degree 8",
         lambda: all(ext.dims[p] == 0 for p in range(9, 13))),
    ]


def _determinism() -> List[Check]:
    factory = EngineFactory()
    pres = two_cell_model(2, 3, FieldSpec.prime(3))
    first = emit_report(factory.ext(pres, (-4, 6)))
    second = emit_report(factory.ext(pres, (-4, 6)))
    return [("ext report is byte-identical across runs", lambda: first == second)]


def main() -> None:
    print("🧮 gorext acceptance run")
    print("=" * 50)
    results: Dict[str, bool] = {}
    for build in (_case_ii, _case_i, _case_q7, _determinism):
        started = time.time()
        try:
            checks = build()
        except Exception as e:
            print(f"💥 {build.__name__}: {type(e).__name__}: {e}")
            results[build.__name__] = False
            continue
        elapsed = time.time() - started
        for label, check in checks:
            ok = bool(check())
            results[label] = ok
            print(f"{'✅' if ok else '❌'} {label}")
        print(f"⏱️  {elapsed:.2f}s")

    passed = sum(results.values())
    print("\n" + "=" * 50)
    print("📊 Acceptance Summary")
    print("=" * 50)
    print(f"Checks: {len(results)}")
    print(f"Passed: {passed}")
    print(f"Failed: {len(results) - passed}")
    if passed == len(results):
        print("\n🎉 All acceptance checks passed!")
        sys.exit(0)
    print("\n❌ Some acceptance checks failed!")
    sys.exit(1)


if __name__ == "__main__":
    main()
