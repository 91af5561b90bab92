"""Totients of sums of squares.

phi_k(n) counts the k-tuples over Z/nZ whose square sum is a unit mod n;
phi_1 is Euler's totient. The function is multiplicative with prime-power
values

    phi_k(2^r)  = 2^(kr - 1)
    phi_k(p^r)  = p^(kr - 1) (p - 1)                       for odd k
    phi_k(p^r)  = p^(kr - k/2 - 1) (p - 1) (p^(k/2) - s)   for even k,

where s = (-1)^(k(p-1)/4) for odd p. All products are assembled from
integer prime-power blocks; no floating point ever enters. Two oracles
(direct enumeration, and summing residue-class counts over units) plus a
Jordan-totient route for 4 | k cross-check the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .core_arith import Factorization, as_factorization, euler_phi, jordan_totient
from .rho import DEFAULT_GUARD, rho, sum_of_squares_census

__all__ = [
    "PhiQuery",
    "phi_k_brute",
    "phi_k_via_rho",
    "phi_k_prime_power",
    "phi_k",
    "phi_k_via_jordan",
    "phi_ratio_check",
    "even_k_sign",
]


@dataclass(frozen=True)
class PhiQuery:
    """A (tuple length, modulus) evaluation request."""

    k: int
    n: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"tuple length must be >= 1, got {self.k}")
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")


def _query(q: PhiQuery | tuple[int, int]) -> PhiQuery:
    # routes plain (k, n) pairs through the same invariant checks
    if isinstance(q, PhiQuery):
        return q
    k, n = q
    return PhiQuery(k, n)


def even_k_sign(k: int, p: int) -> int:
    """(-1)^(k(p-1)/4) for even k and odd p, as an exact +/-1."""
    if k % 2 or p % 2 == 0:
        raise ValueError("sign is defined for even k and odd p only")
    return -1 if ((k // 2) * ((p - 1) // 2)) % 2 else 1


def phi_k_brute(q: PhiQuery | tuple[int, int], guard: int = DEFAULT_GUARD) -> int:
    """Exhaustive count of tuples whose square sum is a unit mod n."""
    q = _query(q)
    census = sum_of_squares_census(q.k, q.n, guard)
    units = np.array([gcd(r, q.n) == 1 for r in range(q.n)])
    return int(census[units].sum())


def phi_k_via_rho(q: PhiQuery | tuple[int, int]) -> int:
    """Sum of residue-class counts over the units of Z/nZ."""
    q = _query(q)
    if q.n == 1:
        return 1
    return sum(rho(q.k, lam, q.n) for lam in range(1, q.n + 1) if gcd(lam, q.n) == 1)


def phi_k_prime_power(k: int, p: int, r: int) -> int:
    """Exact prime-power value of phi_k."""
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    if p == 2:
        return 2 ** (k * r - 1)
    if k % 2 == 1:
        return p ** (k * r - 1) * (p - 1)
    half = k // 2
    return p ** (k * r - half - 1) * (p - 1) * (p**half - even_k_sign(k, p))


def phi_k(k: int, f: int | Factorization) -> int:
    """Number of k-tuples over Z/nZ whose square sum is invertible."""
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    f = as_factorization(f)
    result = 1
    for p, e in f.factors:
        result *= phi_k_prime_power(k, p, e)
    return result


def phi_k_via_jordan(k: int, f: int | Factorization) -> int:
    """phi_k through the Jordan totient, valid when 4 divides k.

    n^(k/2 - 1) * J_(k/2)(n) * phi(n) * 2^(k/2) / (2^(k/2) - 1 + n mod 2);
    the division must be exact and is asserted, never rounded.
    """
    if k % 4:
        raise ValueError(f"the Jordan route needs 4 | k, got k = {k}")
    f = as_factorization(f)
    n = f.n
    half = k // 2
    numerator = n ** (half - 1) * jordan_totient(half, f) * euler_phi(f) * 2**half
    denominator = 2**half - 1 + n % 2
    if numerator % denominator:
        raise ArithmeticError(
            f"Jordan-route quotient is not integral for k={k}, n={n}"
        )
    return numerator // denominator


def phi_ratio_check(k: int, f: int | Factorization) -> tuple[Fraction, Fraction]:
    """Both sides of the quarter-order ratio identity, as exact rationals.

    For k = 4 mod 8: phi_k(n) / phi_(k/4)(n) against
    n^(k/4) * J_(k/2)(n) * 2^(k/2) / (2^(k/2) - 1 + n mod 2). The two
    returned values are computed independently; callers assert equality.
    """
    if k % 8 != 4:
        raise ValueError(f"the ratio identity needs k = 4 mod 8, got k = {k}")
    f = as_factorization(f)
    n = f.n
    half = k // 2
    lhs = Fraction(phi_k(k, f), phi_k(k // 4, f))
    rhs = Fraction(
        n ** (k // 4) * jordan_totient(half, f) * 2**half,
        2**half - 1 + n % 2,
    )
    return lhs, rhs
