"""Primality testing and factorization for the sizes met in Fermat-number tables.

Pipeline: hint primes, trial division below 10^5, perfect powers, a short
Pollard-Brent run, Pollard p-1 with a prime-gap stage 2, then Pollard-Brent
until the time budget runs out.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import compress

from gmpy2 import iroot, mpz

from .errors import FactorizationTimeout

#: Miller-Rabin with the first 13 prime bases is deterministic below this bound.
MR_DETERMINISTIC_BOUND = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

TRIAL_BOUND = 10 ** 5
PM1_B1 = 10 ** 5
PM1_B2 = 10 ** 7


@lru_cache(maxsize=4)
def primes_below(n):
    """All primes < n (bytearray sieve)."""
    if n < 3:
        return ()
    sieve = bytearray([1]) * n
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n, i)))
    return tuple(compress(range(n), sieve))


def _mr_round(n, d, s, a):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n, rng=None):
    """Miller-Rabin.  Deterministic below MR_DETERMINISTIC_BOUND; above it 64
    extra random bases are used (error below 4^-64)."""
    n = int(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_mr_round(n, d, s, a) for a in _MR_BASES):
        return False
    if n < MR_DETERMINISTIC_BOUND:
        return True
    rng = rng or random.Random(n)
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(64))


def ord_q(n, q):
    """Largest e with q^e | n (n != 0)."""
    if n == 0:
        raise ValueError("ord of 0 is infinite")
    n = mpz(n)
    e = 0
    while n % q == 0:
        n //= q
        e += 1
    return e


@dataclass
class Factorization:
    input: int
    factors: list = field(default_factory=list)  # sorted (prime, exponent) pairs
    certified: bool = True

    def value(self):
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    def primes(self):
        return [p for p, _ in self.factors]

    def flat(self):
        """Primes with multiplicity, ascending."""
        return [p for p, e in self.factors for _ in range(e)]

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def _brent(n, rng, deadline, max_iter=None, batch=128):
    """One Pollard-Brent factor of composite odd n, or None on timeout/iteration cap."""
    done = 0
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                g = math.gcd(q, n)
                k += batch
            done += r
            r *= 2
            if max_iter is not None and done > max_iter:
                return None
            if time.monotonic() > deadline:
                return None
        if g == n:
            # the batch overshot; step back one iteration at a time
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(x - ys, n)
                if g > 1:
                    break
        if g != n:
            return g
        # cycle failure; retry with new parameters


def _pm1(n, b1=PM1_B1, b2=PM1_B2):
    """Pollard p-1 with stage 2; returns a proper factor or None."""
    a = 2
    primes = primes_below(b2 + 1)
    for i, p in enumerate(primes):
        if p > b1:
            break
        pe = p
        while pe * p <= b1:
            pe *= p
        a = pow(a, pe, n)
        if i % 256 == 255:
            g = math.gcd(a - 1, n)
            if g == n:
                return None
            if g > 1:
                return g
    g = math.gcd(a - 1, n)
    if g == n:
        return None
    if g > 1:
        return g
    # stage 2: walk primes in (b1, b2] using precomputed a^gap
    start = next(j for j, p in enumerate(primes) if p > b1)
    steps = {}
    x = pow(a, primes[start], n)
    acc = (x - 1) % n
    prev = primes[start]
    for j in range(start + 1, len(primes)):
        p = primes[j]
        gap = p - prev
        step = steps.get(gap)
        if step is None:
            step = steps[gap] = pow(a, gap, n)
        x = x * step % n
        acc = acc * (x - 1) % n
        prev = p
        if j % 2048 == 0:
            g = math.gcd(acc, n)
            if g == n:
                return None
            if g > 1:
                return g
    g = math.gcd(acc, n)
    if 1 < g < n:
        return g
    return None


def _split(n, rng, deadline):
    for k in range(2, n.bit_length() + 1):
        root, exact = iroot(mpz(n), k)
        if exact:
            return int(root)
        if root < 2:
            break
    g = _brent(n, rng, deadline, max_iter=30000)
    if g:
        return g
    g = _pm1(n)
    if g:
        return g
    return _brent(n, rng, deadline)


def factorize(n, seed=0, budget_secs=60.0, hints=()):
    """Complete factorization of n >= 1.

    ``hints`` are candidate divisors tried first (e.g. primes already known to
    divide a related number); they only speed things up, every reported factor
    is still certified by is_prime.  Raises FactorizationTimeout carrying the
    partial result (with the unfactored remainder) when the budget runs out.
    """
    n = int(n)
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    rng = random.Random(seed)
    deadline = time.monotonic() + budget_secs
    found = {}
    rest = n
    pending = []

    def record(p, e=1):
        found[p] = found.get(p, 0) + e

    for h in sorted({int(h) for h in hints if int(h) > 1}):
        if rest % h == 0:
            rest //= h
            pending.append(h)
            while rest % h == 0:
                rest //= h
                pending.append(h)

    for p in primes_below(TRIAL_BOUND):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            record(p, e)
    if rest > 1:
        pending.append(rest)

    while pending:
        m = pending.pop()
        if m == 1:
            continue
        if is_prime(m):
            record(m)
            continue
        for p in primes_below(TRIAL_BOUND):
            if p * p > m:
                break
            if m % p == 0:
                pending.extend([p, m // p])
                break
        else:
            d = _split(m, rng, deadline)
            if d is None:
                partial = _finish(n, found)
                partial.certified = False
                raise FactorizationTimeout(
                    f"budget of {budget_secs}s exhausted; composite remainder {m}",
                    partial=(partial, m * math.prod(pending)),
                )
            pending.extend([d, m // d])
    return _finish(n, found)


def _finish(n, found):
    factors = sorted(found.items())
    certified = all(p < MR_DETERMINISTIC_BOUND for p, _ in factors)
    return Factorization(n, factors, certified)
