"""Deterministic report rendering: fixed-format numbers, CSV and JSON.

Floats render in scientific notation with a 12-digit fractional mantissa,
locale independent, negative zero collapsed to zero, so identical runs emit
byte-identical reports and numeric strings agree between the CSV and JSON
renderings of the same run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

__all__ = ["render_number", "render_value", "Report", "to_csv", "to_json"]


def render_number(x: float) -> str:
    v = float(x)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.12e}"


def render_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, float):
        return render_number(v)
    if v is None:
        return ""
    return str(v)


@dataclass
class Report:
    """Rows are rendered to strings on entry; ``passed`` reflects every
    property the run asserted (report-only runs stay True)."""

    config: dict
    columns: list[str]
    rows: list[dict] = field(default_factory=list)
    passed: bool = True

    def add_row(self, **values: Any) -> None:
        unknown = set(values) - set(self.columns)
        if unknown:
            raise KeyError(f"row fields {sorted(unknown)} not in columns")
        self.rows.append({c: render_value(values.get(c)) for c in self.columns})

    def require(self, ok: bool) -> bool:
        """Record an asserted property outcome; returns it for chaining."""
        if not ok:
            self.passed = False
        return ok


def to_csv(report: Report) -> str:
    lines = [",".join(report.columns)]
    for row in report.rows:
        lines.append(",".join(row[c] for c in report.columns))
    return "\n".join(lines) + "\n"


def to_json(report: Report) -> str:
    payload = {"config": report.config, "rows": report.rows, "pass": report.passed}
    return json.dumps(payload, indent=2) + "\n"
