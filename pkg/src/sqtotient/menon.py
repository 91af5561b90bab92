"""Gcd-sum identities over tuples with invertible square sums.

The classical identity sums gcd(j - 1, n) over the units j of Z/nZ and
equals phi(n) d(n). Its square-sum analogue sums gcd(x_1^2+...+x_k^2 - 1, n)
over tuples whose square sum is a unit; dividing by phi_k(n) yields a
candidate cofactor psi_k whose integrality and multiplicativity are open
for k >= 2, so the scans here emit exact rationals and assert nothing in
that regime (k = 1 reduces to the classical j^2 - 1 cofactor, which is
multiplicative, and is asserted).

The tuple sum is never enumerated directly on the main path: grouping
tuples by their square sum lambda turns the n^k-term sum into
sum over units lambda of rho(k, lambda, n) * gcd(lambda - 1, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core_arith import as_factorization, divisor_count, euler_phi
from .phi import phi_k
from .rho import DEFAULT_GUARD, rho, sum_of_squares_census

__all__ = [
    "MenonRow",
    "PsiScanRow",
    "menon_classic",
    "menon_lhs",
    "menon_lhs_brute",
    "psi_table",
    "psi_multiplicativity_scan",
]


@dataclass(frozen=True)
class MenonRow:
    """One gcd-sum measurement: the sum, phi_k, and their exact ratio."""

    k: int
    n: int
    lhs: int
    phi_k: int
    psi: Fraction
    integral: bool


@dataclass(frozen=True)
class PsiScanRow:
    """psi_k(m) psi_k(n) against psi_k(mn) for one coprime pair."""

    m: int
    n: int
    separate: Fraction
    combined: Fraction
    equal: bool


def menon_classic(n: int) -> tuple[int, int]:
    """Both sides of the classical unit gcd-sum identity.

    Returns (sum over units j of gcd(j - 1, n), phi(n) d(n)); the two are
    equal for every n.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    lhs = sum(gcd(j - 1, n) for j in range(1, n + 1) if gcd(j, n) == 1)
    f = as_factorization(n)
    return lhs, euler_phi(f) * divisor_count(f)


def menon_lhs(k: int, n: int) -> int:
    """Gcd-sum over tuples with invertible square sum, via residue classes.

    Costs one rho evaluation per unit residue instead of n^k tuples, so no
    enumeration guard is involved.
    """
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n == 1:
        return 1
    return sum(
        rho(k, lam, n) * gcd(lam - 1, n)
        for lam in range(1, n + 1)
        if gcd(lam, n) == 1
    )


def menon_lhs_brute(k: int, n: int, guard: int = DEFAULT_GUARD) -> int:
    """Same gcd-sum from exhaustive tuple enumeration; cross-check only."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n == 1:
        return 1
    census = sum_of_squares_census(k, n, guard)
    return sum(
        int(census[lam]) * gcd(lam - 1, n)
        for lam in range(n)
        if gcd(lam, n) == 1
    )


def _psi(k: int, n: int) -> Fraction:
    return Fraction(menon_lhs(k, n), phi_k(k, n))


def psi_table(k: int, n_max: int) -> list[MenonRow]:
    """Candidate cofactors psi_k(n) = lhs / phi_k(n) for n = 1..n_max.

    psi is kept as an exact rational in lowest terms so a non-integral
    value, should one appear, is reported losslessly.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    rows = []
    for n in range(1, n_max + 1):
        lhs = menon_lhs(k, n)
        value = phi_k(k, n)
        psi = Fraction(lhs, value)
        rows.append(
            MenonRow(
                k=k,
                n=n,
                lhs=lhs,
                phi_k=value,
                psi=psi,
                integral=psi.denominator == 1,
            )
        )
    return rows


def psi_multiplicativity_scan(k: int, bound: int) -> list[PsiScanRow]:
    """Compare psi_k(m) psi_k(n) with psi_k(mn) over coprime pairs.

    Emits every pair 1 <= m <= n with gcd(m, n) = 1 and mn <= bound, in
    lexicographic order. For k = 1 the cofactor is the classical
    multiplicative one, so any mismatch is an internal error; for k >= 2
    the rows are conjecture data and nothing is asserted.
    """
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    cache: dict[int, Fraction] = {}

    def psi(value: int) -> Fraction:
        out = cache.get(value)
        if out is None:
            out = _psi(k, value)
            cache[value] = out
        return out

    rows = []
    for m in range(1, bound + 1):
        for n in range(m, bound // m + 1):
            if gcd(m, n) != 1:
                continue
            separate = psi(m) * psi(n)
            combined = psi(m * n)
            equal = separate == combined
            if k == 1 and not equal:
                raise ArithmeticError(
                    f"classical cofactor failed multiplicativity at ({m}, {n})"
                )
            rows.append(
                PsiScanRow(m=m, n=n, separate=separate, combined=combined, equal=equal)
            )
    return rows
