"""Residue tables for numerical semigroups.

For coprime generators a_1 < ... < a_k, every residue class i mod a_1 has a
least representable member m_i (with m_0 = 0).  The table (m_0, ..., m_{a-1})
drives every formula downstream: the Frobenius number, the genus, and all
power and weighted sums.  Tables come from a shortest-path computation for
arbitrary generators, or from a closed-form fill when the generators form an
arithmetic progression.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import Iterable

__all__ = [
    "AperyTable",
    "ArithProgression",
    "Generators",
    "apery_arith",
    "apery_general",
    "apery_polynomial",
    "as_arith_progression",
]


@dataclass(frozen=True)
class Generators:
    """A validated generating set: strictly increasing, coprime, k >= 2.

    Input order does not matter; duplicates are dropped.
    """

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(sorted(set(values)))
        if not all(isinstance(v, int) and v > 0 for v in vals):
            raise ValueError("generators must be positive integers")
        if len(vals) < 2:
            raise ValueError("need at least two distinct generators")
        g = 0
        for v in vals:
            g = gcd(g, v)
        if g != 1:
            raise ValueError(f"generators must be coprime overall (gcd = {g})")
        object.__setattr__(self, "values", vals)

    @property
    def modulus(self) -> int:
        return self.values[0]

    @property
    def largest(self) -> int:
        return self.values[-1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ArithProgression:
    """Generators a, a+d, ..., a+(k-1)d with gcd(a, d) = 1 and 2 <= k <= a.

    The decomposition a - 1 = q(k-1) + r with 0 <= r < k-1 (so q >= 1) shapes
    the closed-form residue table and every arithmetic-progression formula.
    """

    a: int
    d: int
    k: int

    def __post_init__(self) -> None:
        if self.a < 2 or self.d < 1 or self.k < 2:
            raise ValueError("need a >= 2, d >= 1, k >= 2")
        if self.k > self.a:
            raise ValueError(f"need k <= a (got k={self.k}, a={self.a})")
        if gcd(self.a, self.d) != 1:
            raise ValueError(f"need gcd(a, d) = 1 (got gcd = {gcd(self.a, self.d)})")

    @property
    def q(self) -> int:
        return (self.a - 1) // (self.k - 1)

    @property
    def r(self) -> int:
        return (self.a - 1) % (self.k - 1)

    @property
    def largest(self) -> int:
        return self.a + (self.k - 1) * self.d

    def generators(self) -> Generators:
        return Generators(self.a + j * self.d for j in range(self.k))


@dataclass(frozen=True)
class AperyTable:
    """m[i] = least representable integer congruent to i mod `modulus`; m[0] = 0."""

    modulus: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.m) != self.modulus:
            raise ValueError("table length must equal the modulus")
        if self.m[0] != 0:
            raise ValueError("the zero residue entry must be 0")
        for i, mi in enumerate(self.m):
            if mi < 0 or mi % self.modulus != i:
                raise ValueError(f"entry {mi} does not represent residue {i}")


def apery_general(gens: Generators) -> AperyTable:
    """Residue table for arbitrary generators.

    Dijkstra over the a_1 residue classes: an arc i -> (i + a_j) mod a_1 of
    weight a_j extends a representable value by one generator.  Distances
    from residue 0 are exactly the m_i (finite graph, positive weights).
    """
    a1 = gens.modulus
    steps = [g for g in gens.values[1:] if g % a1 != 0]
    dist: list[int | None] = [None] * a1
    dist[0] = 0
    heap: list[tuple[int, int]] = [(0, 0)]
    while heap:
        d, v = heapq.heappop(heap)
        if dist[v] is not None and d > dist[v]:
            continue
        for g in steps:
            w = (v + g) % a1
            nd = d + g
            if dist[w] is None or nd < dist[w]:
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return AperyTable(a1, tuple(dist))  # type: ignore[arg-type]


def apery_arith(ap: ArithProgression) -> AperyTable:
    """Closed-form residue table for an arithmetic progression.

    Row s (1 <= s <= q) holds s*a + ((s-1)(k-1)+t)*d for t = 1..k-1, and when
    r > 0 a final partial row (q+1)*a + (q(k-1)+t)*d for t = 1..r, giving the
    a-1 nonzero entries.  Agrees with :func:`apery_general` on the same
    generators.
    """
    a, d, k, q, r = ap.a, ap.d, ap.k, ap.q, ap.r
    m = [0] * a
    for s in range(1, q + 1):
        base = s * a
        offset = (s - 1) * (k - 1)
        for t in range(1, k):
            value = base + (offset + t) * d
            m[value % a] = value
    for t in range(1, r + 1):
        value = (q + 1) * a + (q * (k - 1) + t) * d
        m[value % a] = value
    return AperyTable(a, tuple(m))


def apery_polynomial(table: AperyTable) -> list[int]:
    """P(x) = sum_i x^{m_i}: ascending dense coefficients, one term per residue."""
    out = [0] * (max(table.m) + 1)
    for mi in table.m:
        out[mi] += 1
    return out


def as_arith_progression(gens: Generators) -> ArithProgression | None:
    """Recognize an arithmetic progression, or return None.

    Generators beyond the a-th term are redundant (a + j*d with j >= a equals
    (a + (j-a)*d) + d*a), so k is truncated to a without changing the
    semigroup; this keeps the closed forms inside their k <= a hypothesis.
    """
    vals = gens.values
    a = vals[0]
    if a < 2:
        return None
    d = vals[1] - vals[0]
    if any(vals[i + 1] - vals[i] != d for i in range(1, len(vals) - 1)):
        return None
    k = min(len(vals), a)
    if k < 2:
        return None
    return ArithProgression(a, d, k)
