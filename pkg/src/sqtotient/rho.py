"""Counting k-tuples with a prescribed square sum modulo n.

rho(k, lam, n) is the number of (x_1, ..., x_k) in (Z/nZ)^k with
x_1^2 + ... + x_k^2 = lam (mod n). For lam coprime to n the value is
multiplicative in n and reduces to prime powers:

  * odd p:  rho(k, lam, p^s) = p^((s-1)(k-1)) * rho(k, lam, p), and the
    prime case is p^(k-1) +/- a signed power of p picked by the parity of
    k and whether lam is a quadratic residue (Euler criterion).
  * p = 2:  the reduction bottoms out at modulus 8 instead of 2, so the
    moduli 2, 4, 8 are produced by the exact integer recurrence
    R_k = M(n) . R_(k-1), where M(n) is the circulant matrix of
    single-coordinate counts and R_1 is a census of squares mod n.

The classical trigonometric closed forms for moduli 2, 4, 8 are also
implemented, in exact Z[sqrt(2)] arithmetic (every sine and cosine that
appears is 0, +/-1 or +/-sqrt(2)/2, and the irrational parts cancel); they
serve as a cross-check against the recurrence, never as the primary path.

For gcd(lam, n) > 1 no formula is attempted: the public entry point falls
back to the guarded exhaustive oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .core_arith import as_factorization, is_prime

__all__ = [
    "DEFAULT_GUARD",
    "BudgetExceededError",
    "ResidueVector",
    "CountMatrix",
    "LebesgueTerms",
    "sum_of_squares_census",
    "rho_brute",
    "rho_odd_prime",
    "rho_odd_prime_power",
    "rho_base_vector",
    "rho_pow2",
    "rho",
    "closed_form_rho2",
    "closed_form_rho4",
    "trig_closed_form_rho8",
]

# Default ceiling on the number of tuples an exhaustive enumeration may visit.
DEFAULT_GUARD = 10**8

# Largest intermediate array of partial square sums the census kernel keeps
# in memory before falling back to an outer Python loop.
_LEVEL_CAP = 1 << 22

# Matrix-recurrence moduli are meant to be tiny (2, 4, 8 and test moduli);
# the cost is O(k * n^2) big-int operations.
_RECURRENCE_CAP = 1024


class BudgetExceededError(RuntimeError):
    """Raised when a computation would exceed its resource budget."""

    def __init__(self, required: int, budget: int, what: str):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs a budget of {required}, over the limit of {budget}; "
            f"raise the guard to at least {required} to run it"
        )


@dataclass(frozen=True)
class ResidueVector:
    """Counts of square sums per residue class: counts[lam] = rho(k, lam, n)."""

    n: int
    k: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n:
            raise ValueError("need exactly one count per residue class")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")
        if sum(self.counts) != self.n**self.k:
            raise ValueError("counts must sum to n^k")


@dataclass(frozen=True)
class CountMatrix:
    """Circulant matrix with entry (i, j) = rho(1, i - j mod n, n).

    Applying it to the length-(k-1) residue vector yields the length-k one;
    every row is a cyclic shift of row 0 and sums to n.
    """

    n: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def for_modulus(cls, n: int) -> "CountMatrix":
        row0 = _square_census(n)
        rows = tuple(
            tuple(row0[(i - j) % n] for j in range(n)) for i in range(n)
        )
        return cls(n=n, entries=rows)

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        """Exact integer matrix-vector product."""
        n = self.n
        return tuple(
            sum(self.entries[i][j] * vec[j] for j in range(n)) for i in range(n)
        )


def _square_census(n: int) -> tuple[int, ...]:
    counts = [0] * n
    for x in range(n):
        counts[x * x % n] += 1
    return tuple(counts)


def sum_of_squares_census(k: int, n: int, guard: int = DEFAULT_GUARD) -> np.ndarray:
    """Tally square sums over all n^k tuples by direct enumeration.

    Returns an int64 array c with c[r] = number of k-tuples whose square sum
    is congruent to r mod n. Every tuple is visited (chunked, vectorized);
    anything over ``guard`` tuple evaluations is refused.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    total = n**k
    if total > guard:
        raise BudgetExceededError(total, guard, f"enumerating {n}^{k} tuples")
    sq = (np.arange(n, dtype=np.int64) ** 2) % n
    if k == 1:
        return np.bincount(sq, minlength=n)

    # Grow the array of partial square sums one coordinate at a time while it
    # fits; whatever coordinates remain are iterated in an outer loop.
    level = sq.copy()
    depth = 1
    while depth < k and level.size * n <= _LEVEL_CAP:
        level = (level[:, None] + sq[None, :]).ravel()
        level = np.where(level >= n, level - n, level)
        depth += 1
    if depth == k:
        return np.bincount(level, minlength=n)

    counts = np.zeros(n, dtype=np.int64)
    for prefix in itertools.product(range(n), repeat=k - depth):
        shift = sum(int(sq[x]) for x in prefix) % n
        # entries stay below 2n, so one folded bincount replaces a mod pass
        folded = np.bincount(level + shift, minlength=2 * n)
        counts += folded[:n]
        counts += folded[n:]
    return counts


def rho_brute(k: int, lam: int, n: int, guard: int = DEFAULT_GUARD) -> int:
    """Exhaustive count of tuples with square sum lam mod n.

    Works for every lam, including gcd(lam, n) > 1; cost is n^k tuple
    evaluations under the guard.
    """
    census = sum_of_squares_census(k, n, guard)
    return int(census[lam % n])


@dataclass(frozen=True)
class LebesgueTerms:
    """Signed correction terms for the odd-prime count.

    t (defined for odd k) has magnitude p^((k-1)/2); ell (defined for even
    k) has magnitude p^((k-2)/2). The sign exponents (p-1)(k-1)/4 and
    k(p-1)/4 are exact integers in their parity cases, which is asserted
    before (-1) is raised to them.
    """

    p: int
    k: int
    t: int | None
    ell: int | None

    @classmethod
    def for_case(cls, k: int, p: int) -> "LebesgueTerms":
        if k % 2 == 1:
            quad = (p - 1) * (k - 1)
            if quad % 4:
                raise ArithmeticError("sign exponent (p-1)(k-1)/4 is not integral")
            sign = -1 if (quad // 4) % 2 else 1
            return cls(p=p, k=k, t=sign * p ** ((k - 1) // 2), ell=None)
        quad = k * (p - 1)
        if quad % 4:
            raise ArithmeticError("sign exponent k(p-1)/4 is not integral")
        sign = -1 if (quad // 4) % 2 else 1
        return cls(p=p, k=k, t=None, ell=sign * p ** ((k - 2) // 2))


def _is_quadratic_residue(lam: int, p: int) -> bool:
    # Euler criterion; lam is known to be a unit mod p.
    return pow(lam, (p - 1) // 2, p) == 1


def rho_odd_prime(k: int, lam: int, p: int) -> int:
    """Count solutions of a square-sum congruence modulo an odd prime.

    Requires p odd prime and lam a unit mod p. Odd k splits on whether lam
    is a quadratic residue; even k does not depend on lam at all.
    """
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    lam %= p
    if lam == 0:
        raise ValueError(f"lam must be a unit modulo {p}")
    terms = LebesgueTerms.for_case(k, p)
    if k % 2 == 1:
        if _is_quadratic_residue(lam, p):
            return p ** (k - 1) + terms.t
        return p ** (k - 1) - terms.t
    return p ** (k - 1) - terms.ell


def rho_odd_prime_power(k: int, lam: int, p: int, s: int) -> int:
    """Lift the odd-prime count to p^s: multiply by p^((s-1)(k-1))."""
    if s < 1:
        raise ValueError(f"exponent must be >= 1, got {s}")
    if p != 2 and lam % p == 0:
        raise ValueError(f"lam must be a unit modulo {p}")
    return p ** ((s - 1) * (k - 1)) * rho_odd_prime(k, lam % p, p)


@lru_cache(maxsize=4096)
def rho_base_vector(k: int, n: int) -> ResidueVector:
    """All residue-class counts at once via the exact matrix recurrence.

    R_1 is a direct census of squares mod n; each further coordinate is one
    integer matrix-vector product. Intended for the power-of-two base moduli
    and small test moduli.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if n > _RECURRENCE_CAP:
        raise BudgetExceededError(n, _RECURRENCE_CAP, f"matrix recurrence at modulus {n}")
    if k == 1:
        return ResidueVector(n=n, k=1, counts=_square_census(n))
    previous = rho_base_vector(k - 1, n)
    matrix = _count_matrix_cached(n)
    return ResidueVector(n=n, k=k, counts=matrix.apply(previous.counts))


@lru_cache(maxsize=128)
def _count_matrix_cached(n: int) -> CountMatrix:
    return CountMatrix.for_modulus(n)


def rho_pow2(k: int, lam: int, s: int) -> int:
    """Count at modulus 2^s for odd lam.

    s <= 3 reads the recurrence value directly; above that the count scales
    by 2^((s-3)(k-1)) from the modulus-8 value.
    """
    if s < 1:
        raise ValueError(f"exponent must be >= 1, got {s}")
    if lam % 2 == 0:
        raise ValueError("lam must be odd for power-of-two moduli")
    if s <= 3:
        return rho_base_vector(k, 2**s).counts[lam % 2**s]
    return 2 ** ((s - 3) * (k - 1)) * rho_base_vector(k, 8).counts[lam % 8]


def rho(k: int, lam: int, n: int, guard: int = DEFAULT_GUARD) -> int:
    """Number of k-tuples mod n whose square sum is lam.

    For lam a unit mod n this is the product of prime-power counts (Chinese
    remainder decomposition). For gcd(lam, n) > 1 there is no formula and
    the guarded exhaustive oracle is used instead.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    lam %= n
    if n == 1:
        return 1
    if gcd(lam, n) != 1:
        return rho_brute(k, lam, n, guard)
    result = 1
    for p, e in as_factorization(n).factors:
        if p == 2:
            result *= rho_pow2(k, lam % 2**e, e)
        else:
            result *= rho_odd_prime_power(k, lam, p, e)
    return result


# ---------------------------------------------------------------------------
# Exact trigonometric closed forms at moduli 2, 4, 8.
#
# Values are handled as a + b*sqrt(2) with Fraction coefficients. sin and
# cos of quarter-turn multiples come from 8-entry tables, and half-integer
# powers of two split into an integer power times sqrt(2).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Sqrt2Value:
    a: Fraction
    b: Fraction

    def __add__(self, other: "_Sqrt2Value") -> "_Sqrt2Value":
        return _Sqrt2Value(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "_Sqrt2Value") -> "_Sqrt2Value":
        return _Sqrt2Value(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "_Sqrt2Value") -> "_Sqrt2Value":
        return _Sqrt2Value(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def scaled(self, q: Fraction) -> "_Sqrt2Value":
        return _Sqrt2Value(self.a * q, self.b * q)

    def as_count(self) -> int:
        if self.b != 0:
            raise ArithmeticError(f"irrational part failed to cancel: {self}")
        if self.a.denominator != 1 or self.a < 0:
            raise ArithmeticError(f"closed form is not a count: {self}")
        return int(self.a)


def _rat(v) -> _Sqrt2Value:
    return _Sqrt2Value(Fraction(v), Fraction(0))


_HALF_ROOT2 = _Sqrt2Value(Fraction(0), Fraction(1, 2))
_NEG_HALF_ROOT2 = _Sqrt2Value(Fraction(0), Fraction(-1, 2))
_ZERO = _rat(0)
# sin(pi*m/4) and cos(pi*m/4) indexed by m mod 8
_SIN = (_ZERO, _HALF_ROOT2, _rat(1), _HALF_ROOT2, _ZERO, _NEG_HALF_ROOT2, _rat(-1), _NEG_HALF_ROOT2)
_COS = (_rat(1), _HALF_ROOT2, _ZERO, _NEG_HALF_ROOT2, _rat(-1), _NEG_HALF_ROOT2, _ZERO, _HALF_ROOT2)


def _pow2_half(j: int) -> _Sqrt2Value:
    """2^(j/2) for j >= 0, exactly."""
    if j % 2 == 0:
        return _rat(2 ** (j // 2))
    return _Sqrt2Value(Fraction(0), Fraction(2 ** ((j - 1) // 2)))


def closed_form_rho2(k: int) -> int:
    """Closed form at modulus 2 (lam = 1): 2^(k-1)."""
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    return 2 ** (k - 1)


def closed_form_rho4(k: int, lam: int) -> int:
    """Closed form at modulus 4: 4^(k-1) +/- 2^(3k/2 - 1) sin(pi k / 4)."""
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    if lam % 4 not in (1, 3):
        raise ValueError("lam must be 1 or 3 at modulus 4")
    wave = _pow2_half(3 * k - 2) * _SIN[k % 8]
    value = _rat(4 ** (k - 1))
    value = value + wave if lam % 4 == 1 else value - wave
    return value.as_count()


def trig_closed_form_rho8(k: int, lam: int) -> int:
    """Closed form at modulus 8, one case per odd residue class.

    Each case is 2^(2k-3) times an integer combination of 2^k, a
    half-integer power of two, and quarter-turn sines and cosines; the
    evaluation is exact and the sqrt(2) parts must cancel.
    """
    if k < 1:
        raise ValueError(f"tuple length must be >= 1, got {k}")
    lam %= 8
    if lam not in (1, 3, 5, 7):
        raise ValueError("lam must be odd at modulus 8")
    two_k = _rat(2**k)
    wave = _pow2_half(k + 2) * _SIN[k % 8]
    two = _rat(2)
    if lam == 1:
        inner = two_k + wave + two * _SIN[(k + 1) % 8] - two * _COS[(3 * k + 1) % 8]
    elif lam == 3:
        inner = two_k - wave - two * (_COS[(k + 1) % 8] + _COS[(3 * (k + 1)) % 8])
    elif lam == 5:
        inner = two_k + wave - two * _SIN[(k + 1) % 8] + two * _COS[(3 * k + 1) % 8]
    else:
        inner = two_k - wave - two * _SIN[(3 * k + 1) % 8] + two * _COS[(k + 1) % 8]
    return inner.scaled(Fraction(2) ** (2 * k - 3)).as_count()
