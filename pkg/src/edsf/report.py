"""Structured command output: labeled results plus checked claims with evidence."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from gmpy2 import mpq, mpz

TRUNCATE_DIGITS = 40


@dataclass
class Check:
    claim: str
    passed: bool
    evidence: dict = field(default_factory=dict)


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    results: list = field(default_factory=list)  # (label, value) pairs
    checks: list = field(default_factory=list)

    def add(self, label, value):
        self.results.append((label, value))

    def check(self, claim, passed, **evidence):
        self.checks.append(Check(claim, bool(passed), evidence))
        return passed

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        doc = {
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "results": [{"label": k, "value": _jsonable(v)} for k, v in self.results],
            "checks": [
                {"claim": c.claim, "passed": c.passed, "evidence": _jsonable(c.evidence)}
                for c in self.checks
            ],
            "passed": self.passed,
        }
        return json.dumps(doc, indent=2)

    def to_text(self):
        lines = [f"== {self.command} =="]
        for k, v in self.inputs.items():
            lines.append(f"  {k}: {_human(v)}")
        for label, value in self.results:
            lines.append(f"{label} = {_human(value)}")
        for c in self.checks:
            ev = ", ".join(f"{k}={_human(v)}" for k, v in c.evidence.items())
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.claim}" + (f"  ({ev})" if ev else ""))
        return "\n".join(lines)


def _jsonable(v):
    # big integers travel as decimal strings so no consumer loses precision
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, type(mpz(0)))):
        return str(v)
    if isinstance(v, (Fraction, type(mpq(0)))):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def truncate_int(n, limit=TRUNCATE_DIGITS):
    s = str(n)
    digits = len(s.lstrip("-"))
    if digits <= limit:
        return s
    return f"{s[:4]}…{s[-4:]} ({digits} digits)"


def _human(v):
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, (int, type(mpz(0)))):
        return truncate_int(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_human(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_human(x)}" for k, x in v.items()) + "}"
    return str(v)
