"""Exact group law on integral Weierstrass models over Q.

Curves use the standard convention

    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6

Every rational point on an integral model has the shape (A/D^2, B/D^3) with
gcd(A, D) = gcd(B, D) = 1, so the arithmetic below works on the integer triple
(A, B, D) and pays a single gcd per group operation.  Public functions accept
and return :class:`RationalPoint` values, whose coordinates are always stored
in lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from gmpy2 import gcd, isqrt, mpq, mpz

from .errors import NonSquareDenominator, ParseError, PointNotOnCurve, SingularCurve


@dataclass(frozen=True)
class Curve:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    disc: int = field(init=False, compare=False)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise TypeError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        disc = discriminant(self.a1, self.a2, self.a3, self.a4, self.a6)
        if disc == 0:
            raise SingularCurve(f"discriminant vanishes for {format_curve(self)}")
        object.__setattr__(self, "disc", disc)

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __str__(self):
        return equation_str(self)


def b_invariants(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def discriminant(a1, a2, a3, a4, a6):
    b2, b4, b6, b8 = b_invariants(a1, a2, a3, a4, a6)
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def make_curve(a1, a2, a3, a4, a6):
    """Build a curve from integer coefficients; raises SingularCurve if disc = 0."""
    return Curve(a1, a2, a3, a4, a6)


def is_reduced_form(c):
    """True iff a1, a3 in {0, 1} and a2 in {-1, 0, 1}.  Minimality is not checked."""
    return c.a1 in (0, 1) and c.a3 in (0, 1) and c.a2 in (-1, 0, 1)


def equation_str(c):
    def term(coef, mono):
        if coef == 0:
            return ""
        sign = " - " if coef < 0 else " + "
        mag = abs(coef)
        if mono == "":
            return f"{sign}{mag}"
        return f"{sign}{'' if mag == 1 else mag}{mono}"

    lhs = "y^2" + term(c.a1, "xy") + term(c.a3, "y")
    rhs = "x^3" + term(c.a2, "x^2") + term(c.a4, "x") + term(c.a6, "")
    return f"{lhs} = {rhs}"


def _as_mpq(value):
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("float coordinates are not exact; use int, str or Fraction")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


@dataclass(frozen=True)
class RationalPoint:
    """Affine point with exact rational coordinates, or the identity (x = y = None)."""

    x: mpq | None = None
    y: mpq | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates must be given, or neither for the identity")
        if self.x is not None:
            object.__setattr__(self, "x", _as_mpq(self.x))
            object.__setattr__(self, "y", _as_mpq(self.y))

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def from_abd(cls, a, b, d):
        d2 = d * d
        return cls(mpq(a, d2), mpq(b, d2 * d))

    @property
    def is_identity(self):
        return self.x is None

    @cached_property
    def abd(self):
        """The triple (A, B, D) with x = A/D^2, y = B/D^3; None for the identity."""
        if self.x is None:
            return None
        xd = self.x.denominator
        d = isqrt(xd)
        if d * d != xd or self.y.denominator != xd * d:
            raise NonSquareDenominator(f"{format_point(self)} is not of the form (A/D^2, B/D^3)")
        return (mpz(self.x.numerator), mpz(self.y.numerator), d)

    def __str__(self):
        return format_point(self)


O = RationalPoint()


# Arithmetic on (A, B, D) triples; None is the identity.

def _on_curve_abd(c, P):
    a, b, d = P
    d2 = d * d
    d3 = d2 * d
    lhs = b * b + c.a1 * a * b * d + c.a3 * b * d3
    rhs = a * a * a + c.a2 * a * a * d2 + c.a4 * a * d2 * d2 + c.a6 * d3 * d3
    return lhs == rhs


def _neg_abd(c, P):
    if P is None:
        return None
    a, b, d = P
    return (a, -b - c.a1 * a * d - c.a3 * d * d * d, d)


def _combine(c, num, den, u1, u2, v1):
    # slope = num/den; u_i = x_i*den^2; v1 = y1*den^3
    x3n = num * num + c.a1 * num * den - c.a2 * den * den - u1 - u2
    den2 = den * den
    g = gcd(x3n, den2)
    s = isqrt(g)
    d3 = abs(den) // s
    a3 = x3n // g
    y3n = num * (u1 - x3n) - v1 - c.a1 * x3n * den - c.a3 * den2 * den
    s3 = s * s * s
    b3 = y3n // s3 if den > 0 else -(y3n // s3)
    return (a3, b3, d3)


def _dbl_abd(c, P):
    if P is None:
        return None
    a, b, d = P
    d2 = d * d
    k = 2 * b + c.a1 * a * d + c.a3 * d2 * d
    if k == 0:
        return None
    num = 3 * a * a + 2 * c.a2 * a * d2 + c.a4 * d2 * d2 - c.a1 * b * d
    den = d * k
    u = a * k * k
    return _combine(c, num, den, u, u, b * k * k * k)


def _add_abd(c, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    a1_, b1, d1 = P
    a2_, b2, d2 = Q
    if d1 == d2 and a1_ == a2_:
        if b1 == b2:
            return _dbl_abd(c, P)
        return None
    d1s, d2s = d1 * d1, d2 * d2
    h = a2_ * d1s - a1_ * d2s
    num = b2 * d1s * d1 - b1 * d2s * d2
    den = d1 * d2 * h
    hh = h * h
    return _combine(c, num, den, a1_ * d2s * hh, a2_ * d1s * hh, b1 * d2s * d2 * hh * h)


def _mul_abd(c, n, P):
    R = None
    for bit in bin(n)[2:]:
        R = _dbl_abd(c, R)
        if bit == "1":
            R = _add_abd(c, R, P)
    return R


def _to_point(P):
    return O if P is None else RationalPoint.from_abd(*P)


def is_on_curve(c, p):
    if p.is_identity:
        return True
    try:
        P = p.abd
    except NonSquareDenominator:
        # integral models only carry points with square/cube denominators
        return False
    return _on_curve_abd(c, P)


def _checked_abd(c, p):
    if not is_on_curve(c, p):
        raise PointNotOnCurve(f"{format_point(p)} is not on {equation_str(c)}")
    return p.abd


def negate(c, p):
    return _to_point(_neg_abd(c, _checked_abd(c, p)))


def add(c, p, q):
    return _to_point(_add_abd(c, _checked_abd(c, p), _checked_abd(c, q)))


def scalar_mul(c, n, p):
    """[n]p by left-to-right double-and-add.  Negative n is rejected; use negate."""
    if n < 0:
        raise ValueError("scalar must be nonnegative; negate the point explicitly")
    return _to_point(_mul_abd(c, int(n), _checked_abd(c, p)))


# Text serialization: "a1,a2,a3,a4,a6" and "x,y" (or "O").

def format_curve(c):
    return ",".join(str(a) for a in c.ainvs)


def parse_curve(text):
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 5:
        raise ParseError(f"expected 5 coefficients, got {len(parts)}", field="curve")
    try:
        coeffs = [int(s) for s in parts]
    except ValueError as exc:
        raise ParseError(f"non-integer coefficient in {text!r}", field="curve") from exc
    return make_curve(*coeffs)


def _fmt_rational(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_point(p):
    if p.is_identity:
        return "O"
    return f"{_fmt_rational(p.x)},{_fmt_rational(p.y)}"


def parse_point(text):
    text = text.strip()
    if text == "O":
        return O
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected 'x,y' or 'O', got {text!r}", field="point")
    try:
        return RationalPoint(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational in {text!r}", field="point") from exc
