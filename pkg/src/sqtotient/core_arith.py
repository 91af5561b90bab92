"""Exact integer arithmetic substrate: factorization, sieves, totients.

Everything here works with unbounded Python integers; nothing ever wraps
silently. Bulk callers factor through an SPF (smallest prime factor) table,
one-off callers get trial division up to a fixed bound followed by
Miller-Rabin plus Brent-style rho splitting for anything larger.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

__all__ = [
    "Factorization",
    "SpfTable",
    "build_spf",
    "factorize",
    "as_factorization",
    "gcd",
    "mod_pow",
    "is_prime",
    "euler_phi",
    "jordan_totient",
    "divisor_count",
    "primes_upto",
]

# Trial division handles everything below this bound squared; beyond that we
# switch to Miller-Rabin + rho splitting.
_TRIAL_BOUND = 10**6

# Witness set is deterministic for all n < 3.317e24, which comfortably covers
# the 64-bit inputs this package promises to certify.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition of a positive integer.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes; it is empty exactly when n = 1.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"factorization requires n >= 1, got {self.n}")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"exponent must be >= 1, got {p}^{e}")
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors reconstruct {prod}, expected {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


@dataclass(frozen=True)
class SpfTable:
    """Smallest-prime-factor table for 2..limit.

    Entry i is the least prime dividing i; spf[p] == p exactly for primes.
    Memory is 8 bytes per entry (int64), so a limit of 10^8 needs ~800 MB;
    desk-scale use stays at or below 10^7.
    """

    limit: int
    spf: np.ndarray


def build_spf(limit: int) -> SpfTable:
    """Sieve smallest prime factors for all integers up to ``limit``."""
    if limit < 2:
        raise ValueError(f"build_spf requires limit >= 2, got {limit}")
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            spf[p] = p
            block = spf[p * p :: p]
            block[block == 0] = p
    untouched = spf[2:] == 0
    spf[2:][untouched] = np.arange(2, limit + 1, dtype=np.int64)[untouched]
    return SpfTable(limit=limit, spf=spf)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus, for modulus >= 1."""
    if modulus < 1:
        raise ValueError(f"mod_pow requires modulus >= 1, got {modulus}")
    if exponent < 0:
        raise ValueError("negative exponents are not supported")
    return pow(base, exponent, modulus)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (certified for n < 2^64)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Find a nontrivial factor of composite odd n (Brent's cycle variant).

    Deterministic: sweeps the polynomial offset c = 1, 2, 3, ... until a
    factor appears, so repeated runs always split the same way.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # unreachable for composite n


def _split(n: int, out: dict[int, int]):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int, table: SpfTable | None = None) -> Factorization:
    """Factor n >= 1 into its canonical prime-power decomposition.

    Uses the SPF table when one is supplied and n fits, otherwise trial
    division up to 10^6 followed by Miller-Rabin and rho splitting. Output
    is deterministic for a given n.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n == 1:
        return Factorization(1, ())
    counts: dict[int, int] = {}
    if table is not None and n <= table.limit:
        spf = table.spf
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
    else:
        m = n
        while m % 2 == 0:
            m //= 2
            counts[2] = counts.get(2, 0) + 1
        d = 3
        while d <= _TRIAL_BOUND and d * d <= m:
            while m % d == 0:
                m //= d
                counts[d] = counts.get(d, 0) + 1
            d += 2
        if m > 1:
            if m <= _TRIAL_BOUND * _TRIAL_BOUND or is_prime(m):
                # no divisor <= 10^6, so below 10^12 the cofactor is prime
                counts[m] = counts.get(m, 0) + 1
            else:
                _split(m, counts)
    return Factorization(n, tuple(sorted(counts.items())))


def as_factorization(x: int | Factorization, table: SpfTable | None = None) -> Factorization:
    """Coerce an int (or pass through a Factorization) for the totient ops."""
    if isinstance(x, Factorization):
        return x
    return factorize(x, table)


def euler_phi(f: int | Factorization) -> int:
    """Euler's totient: the number of units in Z/nZ."""
    f = as_factorization(f)
    result = 1
    for p, e in f.factors:
        result *= p ** (e - 1) * (p - 1)
    return result


def jordan_totient(k: int, f: int | Factorization) -> int:
    """Jordan totient of order k: n^k * prod_{p|n} (1 - p^-k), exactly."""
    if k < 1:
        raise ValueError(f"jordan_totient requires k >= 1, got {k}")
    f = as_factorization(f)
    result = 1
    for p, e in f.factors:
        result *= p ** (k * (e - 1)) * (p**k - 1)
    return result


def divisor_count(f: int | Factorization) -> int:
    """Number of divisors: prod (e + 1) over the prime-power decomposition."""
    f = as_factorization(f)
    result = 1
    for _, e in f.factors:
        result *= e + 1
    return result


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    composite = np.zeros(limit + 1, dtype=bool)
    for p in range(2, isqrt(limit) + 1):
        if not composite[p]:
            composite[p * p :: p] = True
    return [int(p) for p in range(2, limit + 1) if not composite[p]]
