"""Exact combinatorial number families: Bernoulli, Stirling (second kind),
Eulerian, and binomial coefficients.

Everything is computed in exact arithmetic (`int` / `fractions.Fraction`) and
memoized; repeated lookups are cheap and the caches behave like pure
functions (safe under concurrent use).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = ["bernoulli", "binomial", "eulerian", "stirling2"]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 outside 0 <= k <= n.

    Negative n also yields 0; summation loops rely on the coefficient itself
    as the range guard.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n under the B_1 = -1/2 convention.

    These are the coefficients of x/(e^x - 1) = sum B_n x^n / n!, computed
    through the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0.  Intended for
    moderate indices (n up to a few hundred).
    """
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(n):
        acc += comb(n + 1, k) * bernoulli(k)
    return -acc / (n + 1)


@lru_cache(maxsize=None)
def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind S(n, m).

    Counts partitions of an n-element set into m nonempty blocks, via the
    alternating sum (1/m!) sum_{i=0}^{m} (-1)^i C(m, i) (m - i)^n.  The
    formula already gives S(0, 0) = 1 and S(n, m) = 0 for m > n.
    """
    if n < 0 or m < 0:
        raise ValueError("Stirling indices must be nonnegative")
    if m > n:
        return 0
    total = sum((-1) ** i * comb(m, i) * (m - i) ** n for i in range(m + 1))
    value, rem = divmod(total, factorial(m))
    assert rem == 0
    return value


@lru_cache(maxsize=None)
def eulerian(n: int, m: int) -> int:
    """Eulerian number <n, m>: permutations of {1..n} with exactly m descents.

    Zero outside 0 <= m <= max(n - 1, 0); <0, 0> = 1.  Uses the explicit
    formula sum_{k=0}^{m} (-1)^k C(n+1, k) (m - k + 1)^n.
    """
    if n < 0:
        raise ValueError("Eulerian row index must be nonnegative")
    if m < 0 or m > max(n - 1, 0):
        return 0
    return sum((-1) ** k * comb(n + 1, k) * (m - k + 1) ** n for k in range(m + 1))
