"""Generalized elliptic Fermat numbers F_k^(m) = D_{m^k} / D_{m^(k-1)} and the
checks built on them: pairwise gcds, entry points, valuations, magnified pairs
and growth against the canonical height."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from gmpy2 import gcd

from .ec_core import is_reduced_form
from .eds import power_term
from .errors import NonExactQuotient, ParityUnsupported, PreconditionFailed, TheoremViolation
from .factorint import ord_q
from .heights import canonical_height_doubling, log_int


@dataclass(frozen=True)
class FermatTerm:
    m: int
    k: int
    value: int


def _require_theorem_grade(c):
    if not is_reduced_form(c):
        raise PreconditionFailed("curve is not in reduced form (a1, a3 in {0,1}, a2 in {-1,0,1})")


def _require_odd(m):
    if m % 2 == 0:
        raise ParityUnsupported(f"m = {m} is even; the valuation argument needs odd m")


def fermat_value(c, p, m, k):
    """F_k^(m) as an integer (gmpy2.mpz for large terms)."""
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    _require_theorem_grade(c)
    if k == 0 or m == 1:
        # still validates the base point (on curve, integral)
        power_term(c, p, m, 0)
        return 1
    hi = power_term(c, p, m, k)
    lo = power_term(c, p, m, k - 1)
    q, r = divmod(hi, lo)
    if r:
        raise NonExactQuotient(f"D_{m}^{k - 1} does not divide D_{m}^{k}")
    return q


def fermat_term(c, p, m, k):
    return FermatTerm(m, k, fermat_value(c, p, m, k))


def fermat_terms(c, p, m, K):
    """[F_0^(m), ..., F_K^(m)]."""
    if m > 1 and K > 0:
        _require_theorem_grade(c)
        power_term(c, p, m, K)  # the size guard fires here, before any lower level is built
    return [fermat_value(c, p, m, k) for k in range(K + 1)]


def gcd_matrix(c, p, m, K, strict=False):
    """{(k, l): gcd(F_k, F_l)} for 0 <= k < l <= K.

    With ``strict`` a gcd not dividing m raises TheoremViolation; otherwise
    violations are left for the caller to inspect.
    """
    _require_odd(m)
    terms = fermat_terms(c, p, m, K)
    table = {}
    for k in range(K + 1):
        for l in range(k + 1, K + 1):
            g = int(gcd(terms[k], terms[l]))
            table[(k, l)] = g
            if strict and m % g:
                raise TheoremViolation(f"gcd(F_{k}, F_{l}) = {g} does not divide {m}")
    return table


def entry_point(c, p, m, q, K):
    """Smallest t in 1..K with q | D_{m^(t-1)}, or None."""
    _require_odd(m)
    for t in range(1, K + 1):
        if power_term(c, p, m, t - 1) % q == 0:
            return t
    return None


def verify_ord_proposition(c, p, m, q, s):
    """ord_q(F_s^(m)) == ord_q(m), given q | D_{m^(s-1)}."""
    _require_odd(m)
    if s < 1:
        raise ValueError("s must be at least 1")
    if power_term(c, p, m, s - 1) % q:
        raise PreconditionFailed(f"{q} does not divide D_{m}^{s - 1}")
    return ord_q(fermat_value(c, p, m, s), q) == ord_q(m, q)


@dataclass
class MagnifiedRow:
    k: int
    source: int
    target: int
    divides: bool


@dataclass
class MagnifiedReport:
    m: int
    rows: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.divides for r in self.rows)


def magnified_divisibility(src_curve, src_point, tgt_curve, tgt_point, m, K, k0=1):
    """For k0 <= k <= K, does F_k^(m)(E', P') divide F_k^(m)(E, P)?

    The caller vouches that (E', P') maps to (E, P) under an isogeny whose
    degree is prime to m.
    """
    report = MagnifiedReport(m)
    for k in range(k0, K + 1):
        a = fermat_value(src_curve, src_point, m, k)
        b = fermat_value(tgt_curve, tgt_point, m, k)
        report.rows.append(MagnifiedRow(k, a, b, b % a == 0))
    return report


def growth_coefficient(m):
    """Limit of log(F_k^(m)) / m^(2k) divided by the canonical height."""
    return Fraction(1, 2) - Fraction(1, 2 * m * m)


@dataclass(frozen=True)
class GrowthRatio:
    m: int
    k: int
    ratio: float
    limit_prediction: float
    height: float

    @property
    def relative_error(self):
        return abs(self.ratio - self.limit_prediction) / self.height


def growth_ratio(c, p, m, k, k_max=8, tol=1e-4):
    if k < 1:
        raise ValueError("k must be at least 1")
    if m < 2:
        raise ValueError("growth needs m >= 2")
    hh = canonical_height_doubling(c, p, k_max=k_max, tol=tol).value
    ratio = log_int(fermat_value(c, p, m, k)) / m ** (2 * k)
    return GrowthRatio(m, k, ratio, float(growth_coefficient(m)) * hh, hh)
