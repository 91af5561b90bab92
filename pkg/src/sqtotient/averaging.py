"""Bulk evaluation, asymptotic constants, and average-order reports.

The partial sums S(x) = sum_{n <= x} phi_k(n) grow like C_k x^(k+1)/(k+1)
with

    C_k = 6/pi^2                                            (k odd)
    C_k = 3/4 * prod_{p>2} (1 - 1/p^2 - s_p (p-1)/p^(k/2+2)) (k even),

s_p = (-1)^(k(p-1)/4). The tables are exact integers from an SPF sieve;
the constants are high-precision reals carrying a certified truncation
bound.

A plainly truncated product converges like 1/(P log P), which would need
P ~ 10^9 for nine digits. Instead the product is rearranged: the factors
(1 - 1/p^2) and (1 - s_p/p^m), m = k/2 + 1, are pulled out and replaced by
their closed forms (zeta and Dirichlet-beta values), leaving a residual
product whose log-factors are bounded by 1.4/p^(m+1). The certified tail
is then the crude integral bound 1.4 * P^(-m)/m, small already at P in the
tens of thousands.

Also here: the multiplicative coefficients g_k with phi_k = id_k * g_k
(Dirichlet convolution), an exact convolution checker, and the minimal
order scan along primorials, whose ratio tends to exp(-gamma) for odd k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from concurrent.futures import ThreadPoolExecutor

import mpmath as mp

from .core_arith import SpfTable, build_spf, primes_upto
from .phi import even_k_sign, phi_k_prime_power
from .rho import BudgetExceededError

__all__ = [
    "EulerConstant",
    "AveragingRow",
    "GkCoefficient",
    "ConvolutionReport",
    "phi_k_table",
    "partial_sum",
    "euler_constant",
    "corollary_constant",
    "g_k_table",
    "convolution_check",
    "averaging_report",
    "minimal_order_scan",
]

# |log h_p| <= _C_LOG / p^d for every residual factor family used below;
# see _residual_tail for the derivation.
_C_LOG = 1.4

_WORK_DPS = 30

_MAX_PRIMORIAL_PRIMES = 10_000


@dataclass(frozen=True)
class EulerConstant:
    """A computed asymptotic constant with a certified truncation bound.

    ``value`` is guaranteed to lie within ``tail_bound`` of the value the
    same computation yields at any larger prime bound.
    """

    k: int
    value: mp.mpf
    prime_bound: int
    tail_bound: mp.mpf


@dataclass(frozen=True)
class AveragingRow:
    """One measured line of an average-order report; asserts nothing."""

    x: int
    partial_sum: int
    main_term: float
    rel_error: float
    error_ratio: float


@dataclass(frozen=True)
class GkCoefficient:
    """Table of the convolution coefficients g_k(n), indexed by n.

    g_k(1) = 1 and g_k vanishes off squarefree numbers; values are signed
    exact integers.
    """

    k: int
    limit: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class ConvolutionReport:
    """Outcome of checking sum_{d|n} g_k(d) (n/d)^k = phi_k(n) up to a limit."""

    k: int
    limit: int
    ok: bool
    first_mismatch: tuple[int, int, int] | None  # (n, expected phi_k, convolution)


def _table_values(k: int, lo: int, hi: int, spf, cache: dict) -> list[int]:
    # factor each n independently off the SPF table so chunks are order-free
    out = []
    for n in range(lo, hi):
        value = 1
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            block = cache.get((p, e))
            if block is None:
                block = phi_k_prime_power(k, p, e)
                cache[(p, e)] = block
            value *= block
        out.append(value)
    return out


def phi_k_table(
    k: int,
    x: int,
    threads: int = 1,
    table: SpfTable | None = None,
) -> list[int]:
    """Exact phi_k(n) for all n <= x, indexed by n (slot 0 is a placeholder).

    Factors every entry through one SPF sieve pass instead of per-value
    trial division. Chunks are independent, so the optional thread pool
    changes nothing about the result, only the scheduling.
    """
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if x < 1:
        raise ValueError(f"range end must be >= 1, got {x}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    if x == 1:
        return [0, 1]
    if table is None or table.limit < x:
        table = build_spf(x)
    spf = table.spf
    cache: dict[tuple[int, int], int] = {}
    if threads == 1:
        return [0, 1] + _table_values(k, 2, x + 1, spf, cache)
    chunk = max(1024, (x - 1) // (threads * 8) + 1)
    spans = [(lo, min(lo + chunk, x + 1)) for lo in range(2, x + 1, chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda s: _table_values(k, s[0], s[1], spf, cache), spans))
    values = [0, 1]
    for part in parts:  # merge strictly in span order
        values.extend(part)
    return values


def partial_sum(k: int, x: int, table: SpfTable | None = None) -> int:
    """Exact sum of phi_k(n) for n <= x."""
    return sum(phi_k_table(k, x, table=table))


def _dirichlet_beta(s) -> mp.mpf:
    # L(s, chi_4) through the Hurwitz zeta function
    return mp.mpf(4) ** (-s) * (mp.zeta(s, mp.mpf(1) / 4) - mp.zeta(s, mp.mpf(3) / 4))


def _odd_prime_zeta_product(s: int) -> mp.mpf:
    # prod_{p odd} (1 - p^-s) in closed form
    return 1 / (mp.zeta(s) * (1 - mp.mpf(2) ** (-s)))


def _residual_tail(p_bound: int, decay: int) -> mp.mpf:
    """Certified bound on sum_{p > P} |log h_p| when |log h_p| <= C/p^decay.

    Every residual family below satisfies |h_p - 1| <= 1.27/p^decay (the
    numerator is below 1 and the pulled-out denominators are >= (8/9)^2),
    hence |log h_p| <= 1.33/p^decay; 1.4 adds margin. Primes are then
    replaced by all integers and the sum by the integral, so the bound is
    crude but unconditional.
    """
    return mp.mpf(_C_LOG) * p_bound ** (1 - decay) / (decay - 1)


def _product_factor(k: int, p) -> mp.mpf:
    sign = even_k_sign(k, int(p))
    return 1 - 1 / p**2 - sign * (p - 1) / p ** (k // 2 + 2)


def _pulled_out_base(k: int, p) -> mp.mpf:
    m = k // 2 + 1
    sign = even_k_sign(k, int(p))
    return (1 - 1 / p**2) * (1 - mp.mpf(sign) / p**m)


def _assemble(prefactor, residual_at, decay: int, tol, start_bound: int):
    """Truncated residual product with a certified two-sided tail bound."""
    p_bound = start_bound
    while _residual_tail(p_bound, decay) * 4 > tol:
        p_bound *= 2
    while True:
        log_acc = mp.mpf(0)
        for p in primes_upto(p_bound):
            if p == 2:
                continue
            log_acc += mp.log(residual_at(mp.mpf(p)))
        value = prefactor * mp.exp(log_acc)
        tail = 2 * value * mp.expm1(_residual_tail(p_bound, decay))
        if tail <= tol:
            return value, p_bound, tail
        p_bound *= 2


def euler_constant(k: int, tol: float = 1e-9, prime_bound: int | None = None) -> EulerConstant:
    """The average-order constant C_k with a certified truncation bound.

    Odd k needs no product: the constant is 6/pi^2 exactly. Even k runs the
    rearranged truncated product until the certified tail drops below
    ``tol``; pass ``prime_bound`` to pin the truncation point instead (the
    reported tail stays certified either way).
    """
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    with mp.workdps(_WORK_DPS):
        if k % 2 == 1:
            return EulerConstant(k=k, value=6 / mp.pi**2, prime_bound=0, tail_bound=mp.mpf(0))
        m = k // 2 + 1
        prefactor = mp.mpf(3) / 4 * _odd_prime_zeta_product(2)
        if (k // 2) % 2:  # k = 2 mod 4: the pulled-out factor carries chi_4
            prefactor /= _dirichlet_beta(m)
        else:
            prefactor *= _odd_prime_zeta_product(m)

        def residual(p):
            return _product_factor(k, p) / _pulled_out_base(k, p)

        if prime_bound is None:
            value, p_used, tail = _assemble(prefactor, residual, m + 1, mp.mpf(tol), 64)
        else:
            value, p_used, tail = _assemble(
                prefactor, residual, m + 1, mp.inf, prime_bound
            )
        return EulerConstant(k=k, value=value, prime_bound=p_used, tail_bound=tail)


def corollary_constant(k: int, tol: float = 1e-9, prime_bound: int | None = None) -> EulerConstant:
    """Leading coefficient of x^(k+1) in the k = 2 and k = 4 partial sums.

    Computed from the residue-class product forms (split over p mod 4 for
    k = 2), so it is an independent evaluation route; it must agree with
    euler_constant(k)/(k+1) within the two tail bounds.
    """
    if k not in (2, 4):
        raise ValueError(f"corollary form exists for k in (2, 4), got {k}")
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    with mp.workdps(_WORK_DPS):
        if k == 2:
            prefactor = mp.mpf(1) / 4 * _odd_prime_zeta_product(2) / _dirichlet_beta(2)

            def residual(p):
                if int(p) % 4 == 1:
                    return (1 - 2 / p**2 + 1 / p**3) / (1 - 1 / p**2) ** 2
                return (1 - 1 / p**3) / (1 - 1 / p**4)

            decay = 3
        else:
            prefactor = (
                mp.mpf(3) / 20 * _odd_prime_zeta_product(2) * _odd_prime_zeta_product(3)
            )

            def residual(p):
                # the base expands to 1 - 1/p^2 - 1/p^3 + 1/p^5, so the
                # residual deviation is (1/p^4 - 1/p^5)/base
                return (1 - 1 / p**2 - 1 / p**3 + 1 / p**4) / (
                    (1 - 1 / p**2) * (1 - 1 / p**3)
                )

            decay = 4
        if prime_bound is None:
            value, p_used, tail = _assemble(prefactor, residual, decay, mp.mpf(tol), 64)
        else:
            value, p_used, tail = _assemble(prefactor, residual, decay, mp.inf, prime_bound)
        return EulerConstant(k=k, value=value, prime_bound=p_used, tail_bound=tail)


def g_k_table(k: int, limit: int, table: SpfTable | None = None) -> GkCoefficient:
    """Multiplicative convolution coefficients g_k(n) for n <= limit.

    Prime values are -2^(k-1) at p = 2 and
    -p^(k-1) - s_p p^(k/2-1)(p-1) at odd p; anything non-squarefree is 0.
    """
    if k < 1 or k % 2:
        raise ValueError(f"the convolution decomposition is used for even k, got {k}")
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    values = [0] * (limit + 1)
    values[1] = 1
    if limit >= 2:
        if table is None or table.limit < limit:
            table = build_spf(limit)
        spf = table.spf
        prime_value: dict[int, int] = {}
        for n in range(2, limit + 1):
            value = 1
            m = n
            while m > 1 and value:
                p = int(spf[m])
                m //= p
                if m % p == 0:
                    value = 0  # p^2 | n
                    break
                gp = prime_value.get(p)
                if gp is None:
                    if p == 2:
                        gp = -(2 ** (k - 1))
                    else:
                        gp = -(p ** (k - 1)) - even_k_sign(k, p) * p ** (k // 2 - 1) * (p - 1)
                    prime_value[p] = gp
                value *= gp
            values[n] = value
    return GkCoefficient(k=k, limit=limit, values=tuple(values))


def convolution_check(k: int, limit: int, table: SpfTable | None = None) -> ConvolutionReport:
    """Verify sum_{d|n} g_k(d) (n/d)^k = phi_k(n) exactly for all n <= limit."""
    if table is None and limit >= 2:
        table = build_spf(limit)
    coeffs = g_k_table(k, limit, table)
    expected = phi_k_table(k, limit, table=table)
    powers = [e**k for e in range(limit + 1)]
    acc = [0] * (limit + 1)
    for d in range(1, limit + 1):
        gd = coeffs.values[d]
        if gd == 0:
            continue
        for e in range(1, limit // d + 1):
            acc[d * e] += gd * powers[e]
    for n in range(1, limit + 1):
        if acc[n] != expected[n]:
            return ConvolutionReport(k=k, limit=limit, ok=False, first_mismatch=(n, expected[n], acc[n]))
    return ConvolutionReport(k=k, limit=limit, ok=True, first_mismatch=None)


def _error_scale(k: int, x: int) -> float:
    # the comparison scale x^k R_k(x) for the secondary error column
    if k % 2 == 1:
        r = math.log(x) ** (2 / 3) * math.log(math.log(x)) ** (4 / 3)
    else:
        r = math.log(x)
    return x**k * r


def averaging_report(
    k: int,
    xs: list[int],
    tol: float = 1e-9,
    table: SpfTable | None = None,
    threads: int = 1,
) -> list[AveragingRow]:
    """Measure exact partial sums against the main term C_k x^(k+1)/(k+1).

    One row per range end: the exact sum, the main term, the relative
    error, and the error divided by x^k R_k(x). The report only measures;
    nothing here asserts a bound.
    """
    if not xs:
        raise ValueError("need at least one range end")
    if any(x < 3 for x in xs):
        raise ValueError("range ends must be >= 3 so log log x is positive")
    if list(xs) != sorted(xs):
        raise ValueError("range ends must be ascending")
    constant = euler_constant(k, tol)
    top = xs[-1]
    values = phi_k_table(k, top, table=table, threads=threads)
    rows = []
    with mp.workdps(_WORK_DPS):
        running = 0
        upto = 0
        for x in xs:
            running += sum(values[upto + 1 : x + 1])
            upto = x
            main = constant.value * mp.mpf(x) ** (k + 1) / (k + 1)
            rel = (running - main) / main
            ratio = (running - main) / _error_scale(k, x)
            rows.append(
                AveragingRow(
                    x=x,
                    partial_sum=running,
                    main_term=float(main),
                    rel_error=float(rel),
                    error_ratio=float(ratio),
                )
            )
    return rows


def minimal_order_scan(
    k: int, prime_count: int, experimental: bool = False
) -> list[tuple[int, float]]:
    """Ratios phi_k(n) log log n / n^k along primorials n = 2*3*5*...

    For odd k the ratio climbs toward exp(-gamma). Starts at the third
    primorial, 30, below which log log n is not usefully positive. Even k
    is accepted only with ``experimental=True``: the scan then just emits
    data, since no limit is asserted for it.
    """
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if k % 2 == 0 and not experimental:
        raise ValueError(
            "the asserted limit exists for odd k; pass experimental=True to emit even-k data"
        )
    if prime_count < 3:
        raise ValueError("need at least the first three primes")
    if prime_count > _MAX_PRIMORIAL_PRIMES:
        raise BudgetExceededError(
            prime_count, _MAX_PRIMORIAL_PRIMES, "primorial scan length"
        )
    bound = 15 * prime_count  # p_m < m (log m + log log m) with slack
    primes = primes_upto(max(bound, 30))[:prime_count]
    if len(primes) < prime_count:
        primes = primes_upto(bound * 4)[:prime_count]
    rows: list[tuple[int, float]] = []
    primorial = 1
    scaled = Fraction(1)  # phi_k(n) / n^k, exact
    with mp.workdps(_WORK_DPS):
        for count, p in enumerate(primes, start=1):
            primorial *= p
            scaled *= Fraction(phi_k_prime_power(k, p, 1), p**k)
            if count >= 3:
                loglog = mp.log(mp.log(mp.mpf(primorial)))
                rows.append((primorial, float(mp.mpf(scaled.numerator) / scaled.denominator * loglog)))
    return rows
