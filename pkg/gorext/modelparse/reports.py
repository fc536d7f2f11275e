#!/usr/bin/env python3
from __future__ import annotations

import csv
import io
import json
from typing import Any, Dict, List, Mapping, Union

from pydantic import BaseModel

OUTPUT_FORMATS = ("json", "csv", "table")

ReportLike = Union[BaseModel, Mapping[str, Any]]


def report_data(report: ReportLike) -> Dict[str, Any]:
    if isinstance(report, BaseModel):
        data = report.model_dump(mode="json", exclude_none=True)
        for name in getattr(type(report), "always_present", ()):
            data.setdefault(name, None)
        return data
    return dict(report)


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _is_degree_table(value: Any) -> bool:
    if not isinstance(value, Mapping) or not value:
        return False
    for key in value:
        try:
            int(key)
        except (TypeError, ValueError):
            return False
    return True


def _degree_sorted(table: Mapping[str, Any]) -> List[str]:
    return sorted(table, key=lambda k: int(k))


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return canonical_json(value)
    return str(value)


def _to_csv(data: Mapping[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["field", "degree", "value"])

    def walk(prefix: str, value: Any) -> None:
        if _is_degree_table(value):
            for degree in _degree_sorted(value):
                writer.writerow([prefix, degree, _scalar(value[degree])])
        elif isinstance(value, Mapping):
            for key in sorted(value):
                walk(f"{prefix}.{key}" if prefix else key, value[key])
        else:
            writer.writerow([prefix, "", _scalar(value)])

    walk("", data)
    return buffer.getvalue()


def _to_table(data: Mapping[str, Any]) -> str:
    lines: List[str] = []

    def walk(prefix: str, value: Any, depth: int) -> None:
        pad = "  " * depth
        if _is_degree_table(value):
            lines.append(f"{pad}{prefix}:")
            width = max(len(k) for k in value)
            for degree in _degree_sorted(value):
                lines.append(f"{pad}  {degree.rjust(width)} | {_scalar(value[degree])}")
        elif isinstance(value, Mapping) and value:
            lines.append(f"{pad}{prefix}:")
            for key in sorted(value):
                walk(key, value[key], depth + 1)
        else:
            lines.append(f"{pad}{prefix}: {_scalar(value)}")

    for key in sorted(data):
        walk(key, data[key], 0)
    return "\n".join(lines) + ("\n" if lines else "")


def emit_report(report: ReportLike, output_format: str = "json") -> str:
    """Render a report as canonical JSON, flattened CSV, or an aligned text table.

    Field coefficients arrive already rendered by ``FieldSpec.to_json`` as strings,
    so every format shows the same text for them.
    """
    data = report_data(report)
    if output_format == "json":
        return canonical_json(data)
    if output_format == "csv":
        return _to_csv(data)
    if output_format == "table":
        return _to_table(data)
    raise ValueError(f"Unknown output format: {output_format}")
