"""Dense univariate polynomial helpers.

Polynomials are sequences of coefficients in ascending degree order.  The
arithmetic helpers are generic: coefficients may be ints, Fractions, or any
values supporting +, -, * (ring elements included, for evaluation).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "add",
    "derivative",
    "divmod_exact",
    "eval_at",
    "eval_sparse",
    "ext_gcd",
    "mul",
    "sub",
    "trim",
]


def trim(p: Sequence) -> list:
    """Drop trailing zero coefficients."""
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return list(p[:n])


def add(p: Sequence, q: Sequence) -> list:
    out = list(p) if len(p) >= len(q) else list(q)
    small = q if len(p) >= len(q) else p
    for i, c in enumerate(small):
        out[i] = out[i] + c
    return trim(out)


def sub(p: Sequence, q: Sequence) -> list:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] = out[i] - c
    return trim(out)


def mul(p: Sequence, q: Sequence) -> list:
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return trim(out)


def derivative(p: Sequence, times: int = 1) -> list:
    out = list(p)
    for _ in range(times):
        out = [i * c for i, c in enumerate(out)][1:]
    return trim(out)


def eval_at(p: Sequence, x):
    """Horner evaluation; the result type follows the coefficient/point types."""
    acc = 0
    for c in reversed(trim(p)):
        acc = acc * x + c
    return acc


def eval_sparse(p: Sequence, x):
    """Evaluate by walking the nonzero terms in ascending degree.

    Power gaps are bridged with x ** delta, so sparse high-degree polynomials
    cost O(terms * log degree) multiplications instead of O(degree).
    """
    acc = 0
    power = None
    last = 0
    for e, c in enumerate(p):
        if not c:
            continue
        power = x ** e if power is None else power * x ** (e - last)
        last = e
        acc = acc + c * power
    return acc


def divmod_exact(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Polynomial division over the rationals: returns (quotient, remainder)."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in p]
    rem = trim(rem)
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(0, len(rem) - len(q) + 1)
    while len(rem) >= len(q):
        c = rem[-1] / lead
        d = len(rem) - len(q)
        quot[d] = c
        for i, qc in enumerate(q):
            rem[i + d] -= c * qc
        rem = trim(rem)
    return quot, rem


def ext_gcd(p: Sequence, q: Sequence) -> tuple[list, list, list]:
    """Extended Euclid over Q[x]: returns (g, s, t) with s*p + t*q = g.

    g is monic when nonzero.
    """
    r0, r1 = trim([Fraction(c) for c in p]), trim([Fraction(c) for c in q])
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quot, rem = divmod_exact(r0, r1)
        r0, r1 = r1, trim(rem)
        s0, s1 = s1, sub(s0, mul(quot, s1))
        t0, t1 = t1, sub(t0, mul(quot, t1))
    if r0:
        lead = r0[-1]
        if lead != 1:
            r0 = [c / lead for c in r0]
            s0 = [c / lead for c in s0]
            t0 = [c / lead for c in t0]
    return r0, s0, t0
