"""Registry of named curves, base points and magnified (isogenous) pairs.

File format is line oriented::

    [curves]
    id | a1,a2,a3,a4,a6 | x,y | tag tag ...
    [pairs]
    source -> target | degree

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from importlib import resources

from .ec_core import (
    Curve,
    RationalPoint,
    format_curve,
    format_point,
    is_on_curve,
    is_reduced_form,
    parse_curve,
    parse_point,
)
from .errors import EdsfError, ParseError, ValidationError

REGISTRY_ENV = "EDSF_REGISTRY"


@dataclass(frozen=True)
class CurveRecord:
    id: str
    curve: Curve
    point: RationalPoint
    tags: tuple = ()

    @property
    def theorem_grade(self):
        return is_reduced_form(self.curve)


@dataclass(frozen=True)
class MagnifiedPair:
    source_id: str
    target_id: str
    degree: int

    @property
    def coprime_bases(self):
        """Bases m <= 16 admissible for this pair (gcd(m, degree) = 1)."""
        return tuple(m for m in range(2, 17) if math.gcd(m, self.degree) == 1)

    def admits(self, m):
        return math.gcd(m, self.degree) == 1


@dataclass
class Registry:
    records: list = field(default_factory=list)
    pairs: list = field(default_factory=list)

    def get(self, rid):
        for r in self.records:
            if r.id == rid:
                return r
        raise KeyError(f"unknown registry id {rid!r}")

    def pair(self, source_id, target_id):
        for p in self.pairs:
            if (p.source_id, p.target_id) == (source_id, target_id):
                return p
        raise KeyError(f"no registered pair {source_id} -> {target_id}")

    def ids(self):
        return [r.id for r in self.records]


def parse_registry(text):
    reg = Registry()
    section = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in ("curves", "pairs"):
                raise ParseError(f"unknown section [{section}]", line=lineno)
            continue
        fields = [f.strip() for f in line.split("|")]
        if section == "curves":
            if len(fields) not in (3, 4):
                raise ParseError("expected 'id | curve | point | tags'", line=lineno)
            rid = fields[0]
            if not rid or " " in rid:
                raise ParseError(f"bad id {rid!r}", line=lineno, field="id")
            if rid in seen:
                raise ValidationError(f"duplicate id {rid!r} on line {lineno}")
            try:
                curve = parse_curve(fields[1])
            except EdsfError as exc:
                raise ParseError(str(exc), line=lineno, field="curve") from exc
            try:
                point = parse_point(fields[2])
            except ParseError as exc:
                raise ParseError(str(exc), line=lineno, field="point") from exc
            if not is_on_curve(curve, point):
                raise ValidationError(f"line {lineno}: point {fields[2]} is not on curve {fields[1]}")
            tags = tuple(fields[3].split()) if len(fields) == 4 else ()
            reg.records.append(CurveRecord(rid, curve, point, tags))
            seen.add(rid)
        elif section == "pairs":
            if len(fields) != 2 or "->" not in fields[0]:
                raise ParseError("expected 'source -> target | degree'", line=lineno)
            src, tgt = (s.strip() for s in fields[0].split("->", 1))
            try:
                degree = int(fields[1])
            except ValueError as exc:
                raise ParseError("degree must be an integer", line=lineno, field="degree") from exc
            if degree < 2:
                raise ValidationError(f"line {lineno}: isogeny degree must be at least 2")
            for rid in (src, tgt):
                if rid not in seen:
                    raise ValidationError(f"line {lineno}: unknown id {rid!r}")
            reg.pairs.append(MagnifiedPair(src, tgt, degree))
        else:
            raise ParseError("entry outside of a section", line=lineno)
    return reg


def dump_registry(reg):
    out = ["[curves]"]
    for r in reg.records:
        row = f"{r.id} | {format_curve(r.curve)} | {format_point(r.point)}"
        out.append(row + (f" | {' '.join(r.tags)}" if r.tags else ""))
    out += ["", "[pairs]"]
    out += [f"{p.source_id} -> {p.target_id} | {p.degree}" for p in reg.pairs]
    return "\n".join(out) + "\n"


def builtin_registry_text():
    return resources.files("edsf").joinpath("data/registry.txt").read_text()


def load_registry(path=None):
    """Parse a registry file; with no path, EDSF_REGISTRY or the builtin one."""
    if path is None:
        path = os.environ.get(REGISTRY_ENV)
    if path is None:
        return parse_registry(builtin_registry_text())
    with open(path) as fh:
        return parse_registry(fh.read())
