"""Reduction modulo N, point orders in E(Z/NZ), and the order-universality check."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ec_core import _checked_abd
from .eds import power_term
from .errors import (
    BadReduction,
    NonInvertibleDenominator,
    NonInvertibleSlope,
    OracleScaleExceeded,
    ParityUnsupported,
    PreconditionFailed,
)
from .factorint import factorize, is_prime

ORACLE_LIMIT = 10 ** 6


@dataclass(frozen=True)
class ModPoint:
    N: int
    x: int | None = None
    y: int | None = None

    @property
    def is_identity(self):
        return self.x is None


def _check_modulus(c, N):
    if N < 2:
        raise BadReduction("modulus must be at least 2")
    if math.gcd(N, 6 * c.disc) != 1:
        raise BadReduction(f"gcd({N}, 6*disc) = {math.gcd(N, 6 * c.disc)} != 1")


def reduce_point(c, p, N):
    _check_modulus(c, N)
    P = _checked_abd(c, p)
    if P is None:
        return ModPoint(N)
    a, b, d = (int(v) for v in P)
    g = math.gcd(d, N)
    if g != 1:
        raise NonInvertibleDenominator(f"denominator {d * d} shares factor {g} with {N}")
    di = pow(d, -1, N)
    return ModPoint(N, a * di * di % N, b * di * di * di % N)


def is_on_reduced_curve(c, P):
    if P.is_identity:
        return True
    x, y, N = P.x, P.y, P.N
    return (y * y + c.a1 * x * y + c.a3 * y - (x ** 3 + c.a2 * x * x + c.a4 * x + c.a6)) % N == 0


def mod_negate(c, P):
    if P.is_identity:
        return P
    return ModPoint(P.N, P.x, (-P.y - c.a1 * P.x - c.a3) % P.N)


def mod_add(c, P, Q):
    """Chord-tangent law in Z/NZ.  For composite N a non-unit slope denominator
    raises NonInvertibleSlope carrying a factor of N."""
    if P.is_identity:
        return Q
    if Q.is_identity:
        return P
    N = P.N
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if (x1 - x2) % N == 0:
        if (y1 + y2 + c.a1 * x2 + c.a3) % N == 0:
            return ModPoint(N)
        if (y1 - y2) % N != 0:
            # equal mod some primes of N, opposite mod others
            g = math.gcd(y1 - y2, N)
            raise NonInvertibleSlope(g if 1 < g < N else math.gcd(y1 + y2 + c.a1 * x2 + c.a3, N), N)
        num = 3 * x1 * x1 + 2 * c.a2 * x1 + c.a4 - c.a1 * y1
        den = 2 * y1 + c.a1 * x1 + c.a3
    else:
        num = y2 - y1
        den = x2 - x1
    g = math.gcd(den, N)
    if g != 1:
        raise NonInvertibleSlope(g, N)
    lam = num * pow(den, -1, N) % N
    x3 = (lam * lam + c.a1 * lam - c.a2 - x1 - x2) % N
    y3 = (-(lam + c.a1) * x3 - (y1 - lam * x1) - c.a3) % N
    return ModPoint(N, x3, y3)


def mod_scalar_mul(c, n, P):
    if n < 0:
        raise ValueError("scalar must be nonnegative")
    R = ModPoint(P.N)
    for bit in bin(n)[2:]:
        R = mod_add(c, R, R)
        if bit == "1":
            R = mod_add(c, R, P)
    return R


def point_order_bruteforce(c, p, q):
    """Order of P in E(F_q) by adding P until the identity appears."""
    if q > ORACLE_LIMIT:
        raise OracleScaleExceeded(f"{q} exceeds oracle limit {ORACLE_LIMIT}")
    if not is_prime(q):
        raise PreconditionFailed(f"{q} is not prime")
    P = reduce_point(c, p, q)
    if P.is_identity:
        return 1
    R = P
    n = 1
    # Hasse: the group has at most q + 1 + 2*sqrt(q) points
    bound = q + 2 * math.isqrt(q) + 3
    while not R.is_identity:
        R = mod_add(c, R, P)
        n += 1
        if n > bound:
            raise AssertionError(f"no identity after {bound} steps mod {q}")
    return n


def is_identity_multiple(c, p, n, N):
    """True iff [n]P reduces to the identity modulo every prime power of squarefree N.

    Arithmetic runs directly in Z/NZ; when a slope denominator exposes a factor
    of N the computation splits into the two coprime parts.
    """
    _check_modulus(c, N)
    try:
        return mod_scalar_mul(c, n, reduce_point(c, p, N)).is_identity
    except NonInvertibleSlope as exc:
        g = exc.factor
        h = N // g
        if math.gcd(g, h) != 1:
            raise PreconditionFailed(f"modulus {N} is not squarefree; cannot split at {g}") from exc
        return is_identity_multiple(c, p, n, g) and is_identity_multiple(c, p, n, h)


def has_order_exactly(c, p, m, k, N):
    """True iff P has order exactly m^k in E(Z/NZ).

    Needs [m^k]P = O and, for each prime l | m, [m^k / l]P != O.  For prime m
    this is the usual [m^k]P = O, [m^(k-1)]P != O test.
    """
    _check_modulus(c, N)
    if k == 0 or m == 1:
        return is_identity_multiple(c, p, 1, N)
    n = m ** k
    if not is_identity_multiple(c, p, n, N):
        return False
    return all(not is_identity_multiple(c, p, n // ell, N) for ell in factorize(m).primes())


def verify_order_universality(c, p, m, N, K):
    """Order m^k in E(Z/NZ)  <=>  N | D_{m^k} and N does not divide D_{m^(k-1)},
    checked for every 0 <= k <= K.  Products of Fermat numbers telescope to D."""
    require_ou_base(m)
    _check_modulus(c, N)
    return all(_ou_level(c, p, m, N, k)[0] for k in range(K + 1))


def require_ou_base(m):
    # m = 2 is the classical elliptic Fermat case; other even bases are unproven
    if m % 2 == 0 and m != 2:
        raise ParityUnsupported(f"order universality is only established for odd m and m = 2, not {m}")


def _ou_level(c, p, m, N, k):
    lhs = has_order_exactly(c, p, m, k, N)
    if k == 0:
        rhs = False  # N >= 2 cannot divide D_1 = 1
    else:
        rhs = power_term(c, p, m, k) % N == 0 and power_term(c, p, m, k - 1) % N != 0
    return lhs == rhs, lhs, rhs
