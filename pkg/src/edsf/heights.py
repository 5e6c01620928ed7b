"""Naive and canonical heights.

Heights here are taken on the x-coordinate, h(P) = log max(|A|, D^2), so the
canonical height is the limit of h([2^k]P) / 4^k and also of log(D_n^2) / n^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .ec_core import _checked_abd, _dbl_abd
from .eds import _base_abd, power_decompose
from .errors import IdentityHasNoHeight, TorsionPoint, TorsionOrIdentity

DEFAULT_K_MAX = 8
DEFAULT_TOL = 1e-4


def log_int(n):
    """Natural log of a positive integer of any size."""
    n = int(n)
    if n <= 0:
        raise ValueError("log of a nonpositive integer")
    # math.log splits big ints into mantissa and exponent internally
    return math.log(n)


@dataclass
class HeightEstimate:
    value: float
    approximants: list = field(default_factory=list)  # (level k, approximant)
    error_bound: float = math.inf


def _naive_abd(P):
    a, _, d = P
    return log_int(max(abs(a), d * d))


def naive_height(c, p):
    P = _checked_abd(c, p)
    if P is None:
        raise IdentityHasNoHeight("the identity has no naive height")
    return _naive_abd(P)


def _tail_bound(approx, r):
    """Bound on |limit - last approximant| when level k carries weight 1/r^k.

    Consecutive approximants differ by at most C / r^(k+1), where C bounds
    |h([s]Q) - r h(Q)| over all Q.  C is estimated from the observed steps,
    and the geometric tail then sums to C / ((r - 1) r^k).
    """
    if len(approx) < 2:
        return math.inf
    c = max(abs(b - a) * r ** (j + 1) for j, ((_, a), (_, b)) in enumerate(zip(approx, approx[1:])))
    return c / ((r - 1) * r ** approx[-1][0])


def _finish(approx, r):
    return HeightEstimate(approx[-1][1], approx, _tail_bound(approx, r))


def canonical_height_doubling(c, p, k_max=DEFAULT_K_MAX, tol=DEFAULT_TOL):
    """Approximants h([2^k]P) / 4^k for k = 0..k_max, stopping once the
    estimated tail bound drops below ``tol``.

    A bare difference of consecutive approximants is not used to stop: it can
    vanish by accident, e.g. when h(P) = h([2]P) = 0.
    """
    Q = _checked_abd(c, p)
    if Q is None:
        raise TorsionPoint("the identity is torsion")
    approx = []
    for k in range(k_max + 1):
        if k:
            Q = _dbl_abd(c, Q)
            if Q is None:
                raise TorsionPoint(f"[2^{k}]P is the identity")
        approx.append((k, _naive_abd(Q) / 4 ** k))
        if k >= 2 and _tail_bound(approx, 4) < tol:
            break
    return _finish(approx, 4)


def canonical_height_eds(c, p, m=2, k_max=DEFAULT_K_MAX):
    """Approximants log(D_{m^k}^2) / m^(2k) for k = 0..k_max."""
    _base_abd(c, p)
    approx = []
    for k in range(k_max + 1):
        try:
            d = power_decompose(c, p, m, k).D
        except TorsionOrIdentity as exc:
            raise TorsionPoint(str(exc)) from exc
        approx.append((k, 2 * log_int(d) / m ** (2 * k)))
    return _finish(approx, m * m)


def _canonical_height_numerator(c, p, m=2, k_max=DEFAULT_K_MAX):
    # log|A_{m^k}| / m^(2k); third estimator, used only as a cross-check
    approx = []
    for k in range(k_max + 1):
        a = power_decompose(c, p, m, k).A
        approx.append((k, log_int(abs(a)) / m ** (2 * k) if a else 0.0))
    return _finish(approx, m * m)


def degree_ratio(src_curve, src_point, tgt_curve, tgt_point, k_max=DEFAULT_K_MAX, tol=DEFAULT_TOL):
    """hhat(P) / hhat(P'); approximates the isogeny degree for a magnified pair."""
    num = canonical_height_doubling(tgt_curve, tgt_point, k_max, tol).value
    den = canonical_height_doubling(src_curve, src_point, k_max, tol).value
    return num / den
