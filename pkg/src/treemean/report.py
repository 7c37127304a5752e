"""Machine-readable campaign reports.

Exact rationals are serialized as "p/q" strings (never floats), trees as
their canonical file-format string with ';' line separators.  Field order
is fixed so that identical runs emit byte-identical reports apart from the
wall-time entry.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import List

__all__ = [
    "FORMATS",
    "q_str",
    "q_approx",
    "ViolationReport",
    "emit_report",
]

FORMATS = ("json", "csv", "text")


def q_str(q) -> str:
    """Exact "p/q" form of a rational (or integer)."""
    f = Fraction(q)
    return f"{f.numerator}/{f.denominator}"


def q_approx(q, significant_digits: int = 12) -> str:
    """Decimal approximation for display only."""
    f = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = significant_digits
        return str(Decimal(f.numerator) / Decimal(f.denominator))


def _jsonable(value):
    if isinstance(value, Fraction):
        return q_str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, bytes):
        return value.decode("ascii")
    return value


@dataclass
class ViolationReport:
    """Outcome of one verification campaign."""

    campaign: str
    params: dict
    corpus: dict
    checks: List[str]
    violations: List[dict] = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "campaign": self.campaign,
            "params": _jsonable(self.params),
            "corpus": _jsonable(self.corpus),
            "checks": list(self.checks),
            "pass": self.passed,
            "violations": _jsonable(self.violations),
            "extras": _jsonable(self.extras),
            "wall_time_s": round(self.wall_time_s, 6),
        }


def _emit_csv(report: ViolationReport) -> str:
    import csv

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["campaign", "check", "n", "index", "item", "value",
                     "excluded", "tree"])
    for v in report.violations:
        item = v.get("root")
        if item is None:
            item = " ".join(str(x) for x in v.get("edge", []))
        value = v.get("margin")
        if value is None:
            value = v.get("difference")
        if isinstance(value, Fraction):
            value = q_str(value)
        writer.writerow([report.campaign, v.get("check", ""), v.get("n", ""),
                         v.get("index", ""), item, value,
                         v.get("excluded") or "", v.get("tree", "")])
    return out.getvalue()


def _emit_text(report: ViolationReport) -> str:
    lines = [f"campaign: {report.campaign}"]
    for k, v in report.params.items():
        lines.append(f"  {k}: {v}")
    for k, v in report.corpus.items():
        lines.append(f"  corpus.{k}: {v}")
    lines.append(f"  checks: {', '.join(report.checks)}")
    for k, v in _jsonable(report.extras).items():
        lines.append(f"  {k}: {v}")
    lines.append(f"  violations: {len(report.violations)}")
    for v in report.violations:
        value = v.get("margin")
        if value is None:
            value = v.get("difference")
        if isinstance(value, Fraction):
            value = q_str(value)
        where = v.get("root")
        if where is None:
            where = "edge " + " ".join(str(x) for x in v.get("edge", []))
        else:
            where = f"root {where}"
        excluded = f" [excluded: {v['excluded']}]" if v.get("excluded") else ""
        lines.append(f"    {v.get('check')}: n={v.get('n')} #{v.get('index')} "
                     f"{where} value={value}{excluded} tree={v.get('tree')}")
    lines.append(f"  result: {'PASS' if report.passed else 'FAIL'}")
    lines.append(f"  wall_time_s: {report.wall_time_s:.6f}")
    return "\n".join(lines) + "\n"


def emit_report(report: ViolationReport, fmt: str = "json") -> str:
    """Serialize a report; stable field order, exact rationals as "p/q"."""
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        return _emit_csv(report)
    if fmt == "text":
        return _emit_text(report)
    raise ValueError(f"unknown format {fmt!r}; known: {', '.join(FORMATS)}")
