"""Elliptic divisibility sequences read off the denominators of [n]P."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import gcd, mpq

from .ec_core import _add_abd, _checked_abd, _mul_abd, _on_curve_abd
from .errors import InfeasibleComputation, NonNormalized, PreconditionFailed, TorsionOrIdentity
from .factorint import ord_q

#: Refuse to build multiples whose denominator D_n is estimated above this many bits.
DEFAULT_MAX_BITS = 1 << 25


def max_bits():
    return int(os.environ.get("EDSF_MAX_BITS", DEFAULT_MAX_BITS))


@dataclass(frozen=True)
class EdsDecomposition:
    """[n]P = (A/D^2, B/D^3) in lowest terms."""

    n: int
    A: int
    B: int
    D: int  # kept as gmpy2.mpz; values reach tens of millions of bits

    @property
    def x(self):
        return mpq(self.A, self.D * self.D)

    @property
    def y(self):
        return mpq(self.B, self.D ** 3)


def _base_abd(c, p):
    P = _checked_abd(c, p)
    if P is None:
        raise TorsionOrIdentity("the identity has no divisibility sequence")
    if P[2] != 1:
        raise NonNormalized(f"base point has D_1 = {P[2]}; an integral point is required")
    return P


def _bits_estimate(c, p, n):
    # log D_n ~ hhat * n^2 / 2 with hhat normalized as lim log(D_n^2)/n^2
    hh = _height_for_guard(c, p)
    return hh * n * n / 2 / math.log(2)


@lru_cache(maxsize=64)
def _height_for_guard(c, p):
    from .heights import canonical_height_doubling

    return canonical_height_doubling(c, p, k_max=5, tol=1e-3).value


def _guard(c, p, n):
    if n <= 4096:
        return
    est = _bits_estimate(c, p, n)
    cap = max_bits()
    if est > cap:
        raise InfeasibleComputation(
            f"D_{n} would have about {est:.3g} bits (cap {cap}); raise EDSF_MAX_BITS to try anyway"
        )


@lru_cache(maxsize=512)
def _multiple(c, p, n):
    P = _base_abd(c, p)
    _guard(c, p, n)
    Q = _mul_abd(c, n, P)
    if Q is None:
        raise TorsionOrIdentity(f"[{n}]P is the identity; P is torsion")
    return Q


@lru_cache(maxsize=512)
def _power_multiple(c, p, m, k):
    # [m^k]P built as [m]([m^(k-1)]P); shares work across a Fermat chain
    if k == 0:
        return _base_abd(c, p)
    _guard(c, p, m ** k)
    prev = _power_multiple(c, p, m, k - 1)
    Q = _mul_abd(c, m, prev)
    if Q is None:
        raise TorsionOrIdentity(f"[{m}^{k}]P is the identity; P is torsion")
    return Q


def clear_caches():
    """Drop memoized multiples (for cold timings, or to release memory)."""
    _multiple.cache_clear()
    _power_multiple.cache_clear()
    _height_for_guard.cache_clear()


def _decomp(n, Q):
    return EdsDecomposition(n, Q[0], Q[1], Q[2])


def eds_decompose(c, p, n):
    """Return (A_n, B_n, D_n) for [n]p."""
    if n < 1:
        raise ValueError("index must be positive")
    return _decomp(n, _multiple(c, p, int(n)))


def power_decompose(c, p, m, k):
    """Decomposition of [m^k]p computed along the chain P, [m]P, [m^2]P, ..."""
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    if m == 1:
        return _decomp(1, _base_abd(c, p))
    return _decomp(m ** k, _power_multiple(c, p, int(m), int(k)))


def eds_term(c, p, n):
    return eds_decompose(c, p, n).D


def power_term(c, p, m, k):
    """D_{m^k}."""
    return power_decompose(c, p, m, k).D


def eds_terms(c, p, indices):
    return [eds_term(c, p, n) for n in indices]


def sequential_terms(c, p, N):
    """D_1..D_N by repeated addition of P, independent of double-and-add."""
    P = _base_abd(c, p)
    out = []
    Q = None
    for n in range(1, N + 1):
        Q = _add_abd(c, Q, P)
        if Q is None:
            raise TorsionOrIdentity(f"[{n}]P is the identity; P is torsion")
        out.append(Q[2])
    return out


def verify_divisibility_law(c, p, N):
    """True iff D_m | D_n for every m | n <= N."""
    D = sequential_terms(c, p, N)
    for n in range(1, N + 1):
        for m in range(1, n + 1):
            if n % m == 0 and D[n - 1] % D[m - 1] != 0:
                return False
    return True


@dataclass(frozen=True)
class SSValuation:
    lhs: int
    rhs: int
    equal: bool


def verify_ss_valuation(c, p, q, n, m):
    """Compare ord_q(D_{mn}) with ord_q(m*D_n) for a prime q dividing D_n.

    The left side never falls below the right; for odd m the two agree.
    Even m is accepted, but then only the inequality is meaningful.
    """
    if m < 1:
        raise ValueError("m must be positive")
    dn = eds_term(c, p, n)
    if dn % q:
        raise PreconditionFailed(f"{q} does not divide D_{n} = {dn}")
    dmn = eds_term(c, p, m * n)
    lhs = ord_q(dmn, q)
    rhs = ord_q(m * dn, q)
    return SSValuation(lhs, rhs, lhs == rhs)


def reconstruct_on_curve(c, dec):
    """Check that (A/D^2, B/D^3) lies on c and the triple is in lowest terms."""
    return (
        gcd(dec.A, dec.D) == 1
        and gcd(dec.B, dec.D) == 1
        and dec.D >= 1
        and _on_curve_abd(c, (dec.A, dec.B, dec.D))
    )
