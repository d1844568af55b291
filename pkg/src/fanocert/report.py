"""JSON report emission.

The report schema is versioned and uses integers and strings only; a float
anywhere is a bug, and the serializer refuses to emit one.  Field order is
fixed by construction, which together with the deterministic case order makes
consecutive runs byte-identical.
"""
from __future__ import annotations

import json

from .catalog import Report

REPORT_VERSION = 1


class ReportValueError(TypeError):
    """A non-integer numeric value reached the report serializer."""


def _check_values(node, path: str = "$"):
    if isinstance(node, bool) or node is None or isinstance(node, (int, str)):
        return
    if isinstance(node, float):
        raise ReportValueError(f"float at {path}; reports are integer-only")
    if isinstance(node, (list, tuple)):
        for idx, item in enumerate(node):
            _check_values(item, f"{path}[{idx}]")
        return
    if isinstance(node, dict):
        for key, value in node.items():
            _check_values(value, f"{path}.{key}")
        return
    raise ReportValueError(f"unserializable value of type {type(node)} at {path}")


def report_to_dict(report: Report) -> dict:
    return {
        "version": REPORT_VERSION,
        "summary": dict(report.summary),
        "certificates": [c.to_dict() for c in report.certificates],
    }


def report_to_json(report: Report) -> str:
    data = report_to_dict(report)
    _check_values(data)
    return json.dumps(data, indent=2) + "\n"


def write_report(report: Report, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(report_to_json(report))
