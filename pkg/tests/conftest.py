"""Shared fixtures and independent reference implementations.

The reference census here is deliberately naive pure Python (itertools
over every tuple) so the library's vectorized enumeration and its formula
paths are both checked against something that shares no code with them.
"""

from itertools import product
from math import gcd

import pytest


def naive_census(k: int, n: int) -> list[int]:
    counts = [0] * n
    for tup in product(range(n), repeat=k):
        counts[sum(x * x for x in tup) % n] += 1
    return counts


def naive_phi_k(k: int, n: int) -> int:
    return sum(
        1
        for tup in product(range(n), repeat=k)
        if gcd(sum(x * x for x in tup), n) == 1
    )


def naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@pytest.fixture(scope="session")
def spf_100k():
    from sqtotient import build_spf

    return build_spf(100_000)
