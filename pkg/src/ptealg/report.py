"""Verification reports: one record per check."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction


def jsonable(obj):
    """Convert exact values and containers into JSON-friendly structures."""
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [jsonable(x) for x in obj]
    return str(obj)


@dataclass
class Check:
    name: str
    params: dict
    passed: bool
    witness: object = None

    def to_record(self):
        return {
            "name": self.name,
            "params": jsonable(self.params),
            "passed": self.passed,
            "witness": jsonable(self.witness),
        }


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, params, passed, witness=None):
        self.checks.append(Check(name, dict(params), bool(passed), witness))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_text(self):
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            params = ", ".join(f"{k}={jsonable(v)}" for k, v in c.params.items())
            line = f"  [{'pass' if c.passed else 'FAIL'}] {c.name}"
            if params:
                line += f" ({params})"
            if c.witness is not None:
                line += f" witness={json.dumps(jsonable(c.witness), sort_keys=True)}"
            lines.append(line)
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)

    def to_records(self):
        return [dict(report=self.title, **c.to_record()) for c in self.checks]
