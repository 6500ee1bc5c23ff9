"""Closed forms for generators in arithmetic progression a, a+d, ..., a+(k-1)d.

Nothing here materializes the residue table: the table's known row structure
(q full rows of k-1 entries plus r leftovers, a-1 = q(k-1)+r) is exploited
directly, which keeps every computation polynomial in q, k and the exponent
instead of in the table size.

The weighted sums split into three regimes, dispatched on the weight w:

* w^a != 1 and w^d != 1: generic regime; the moment generating polynomial of
  the table collapses to geometric blocks (``weighted_moment_ap``).
* w^a != 1 and w^d  = 1: the weight is constant along each table row
  (``weighted_moment_unity_d``).
* w^a  = 1 and w^d != 1: the unity-weight engine with row-wise column sums.

Since gcd(a, d) = 1, w^a = 1 = w^d would force w = 1, which is excluded.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .apery import ArithProgression
from .exact import bernoulli, binomial
from .numberfield import RingElement, as_element, is_power_unity
from .sylvester import eulerian_tail, moment_from_polynomial, weighted_sum_from_moments

__all__ = [
    "WeightedSumAP",
    "column_term",
    "frobenius_ap",
    "genus_ap",
    "power_sum_ap",
    "weight_branch",
    "weighted_moment_ap",
    "weighted_moment_unity_d",
    "weighted_sum_ap",
]


def frobenius_ap(ap: ArithProgression) -> int:
    """Largest gap: floor((a-2)/(k-1)) * a + (a-1) * d."""
    return (ap.a - 2) // (ap.k - 1) * ap.a + (ap.a - 1) * ap.d


def genus_ap(ap: ArithProgression) -> int:
    """Number of gaps: ((a-1)(q+d) + r(q+1)) / 2."""
    value = Fraction((ap.a - 1) * (ap.q + ap.d) + ap.r * (ap.q + 1), 2)
    if value.denominator != 1:
        raise ArithmeticError("non-integral genus: invalid (a, d, k) decomposition")
    return int(value)


def power_sum_ap(ap: ArithProgression, mu: int) -> int:
    """mu-th power sum of the gaps, as an explicit triple sum.

    Expanding the table rows by the binomial theorem and summing each row
    with Bernoulli polynomials gives

        s_mu = (1/(mu+1)) sum_{k,l,j} C(mu+1,k) C(mu+1-k,l) C(l+1,j)
                 * B_k B_j a^{mu-l} d^l / (l+1)
                 * [ (q+1)^{mu+1-k-l} a^{l+1-j} - 1
                     - sum_{i=1}^{q} ((i+1)^{mu+1-k-l} - i^{mu+1-k-l})
                                     (i(k-1)+1)^{l+1-j} ]
               + (B_{mu+1}/(mu+1)) (a^{mu+1} - 1).
    """
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    a, d, k, q = ap.a, ap.d, ap.k, ap.q
    total = Fraction(0)
    for kappa in range(mu + 1):
        b_kappa = bernoulli(kappa)
        if not b_kappa:
            continue
        for l in range(mu + 2 - kappa):
            e = mu + 1 - kappa - l
            for j in range(l + 1):
                b_j = bernoulli(j)
                if not b_j:
                    continue
                coeff = (
                    Fraction(binomial(mu + 1, kappa) * binomial(mu + 1 - kappa, l) * binomial(l + 1, j))
                    * b_kappa
                    * b_j
                    * Fraction(a) ** (mu - l)
                    * Fraction(d) ** l
                    / (l + 1)
                )
                bracket = (q + 1) ** e * a ** (l + 1 - j) - 1
                bracket -= sum(
                    ((i + 1) ** e - i ** e) * (i * (k - 1) + 1) ** (l + 1 - j)
                    for i in range(1, q + 1)
                )
                total += coeff * bracket
    total = total / (mu + 1) + bernoulli(mu + 1) / (mu + 1) * (a ** (mu + 1) - 1)
    if total.denominator != 1:
        raise ArithmeticError("non-integral power sum: internal fault")
    return int(total)


def _table_polynomial(ap: ArithProgression) -> list[int]:
    """sum_i x^{m_i} assembled from geometric blocks, never from the table.

    The rational generating expression for the row structure has denominators
    (x^d - 1) and (x^{a_k} - 1) that divide their numerators exactly, so the
    quotient is expanded directly as geometric sums:

        1 + x^{a+d} (1 + x^d + ... + x^{(k-2)d}) (1 + x^{a_k} + ... + x^{(q-1)a_k})
          + x^{q a_k + a + d} (1 + x^d + ... + x^{(r-1)d}).

    Polynomializing first avoids spurious singularities when the evaluation
    point happens to satisfy x^{a_k} = 1.
    """
    a, d, k, q, r = ap.a, ap.d, ap.k, ap.q, ap.r
    ak = ap.largest
    top = (q + 1) * a + (q * (k - 1) + r) * d if r else q * ak
    out = [0] * (top + 1)
    out[0] = 1
    for s in range(q):
        base = a + d + s * ak
        for t in range(k - 1):
            out[base + t * d] += 1
    base = q * ak + a + d
    for t in range(r):
        out[base + t * d] += 1
    return out


def weighted_moment_ap(ap: ArithProgression, nu: int, lam) -> RingElement:
    """sum_i m_i^nu lam^{m_i} without building the residue table.

    The geometric-block polynomial is differentiated symbolically and
    recombined with Stirling weights; no division by ring elements occurs, so
    the value is defined for every nonzero weight.
    """
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    lam = as_element(lam)
    if lam.is_zero:
        raise ValueError("weight 0 is not allowed")
    return moment_from_polynomial(_table_polynomial(ap), nu, lam)


def weighted_moment_unity_d(ap: ArithProgression, nu: int, lam) -> RingElement:
    """sum_i m_i^nu lam^{m_i} when lam^d = 1.

    Row s of the table then carries the constant weight lam^{sa}, so each row
    telescopes through Bernoulli sums; the nu = 0 value includes the unit
    contribution of the zero residue, matching :func:`weighted_moment_ap`.
    """
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    lam = as_element(lam)
    if not is_power_unity(lam, ap.d):
        raise ValueError("this route requires the weight to satisfy lam^d = 1")
    a, d, k, q, r = ap.a, ap.d, ap.k, ap.q, ap.r
    la = lam ** a
    la_pow = [lam.ring.one]
    for _ in range(q + 1):
        la_pow.append(la_pow[-1] * la)
    total = lam.ring.zero
    for l in range(nu + 1):
        e = nu - l
        inner = lam.ring.zero
        for j in range(l + 1):
            b_j = bernoulli(j)
            if not b_j:
                continue
            c = Fraction(binomial(l + 1, j)) * b_j
            bracket = -(la_pow[1] * (a ** e)) * c
            for s in range(1, q + 1):
                step = la_pow[s + 1] * ((s + 1) * a) ** e - la_pow[s] * (s * a) ** e
                bracket = bracket - step * (c * (s * (k - 1) + 1) ** (l + 1 - j))
            bracket = bracket + la_pow[q + 1] * (
                c * ((q + 1) * a) ** e * (q * (k - 1) + r + 1) ** (l + 1 - j)
            )
            inner = inner + bracket
        total = total + inner * (Fraction(binomial(nu, l) * d ** l) / (l + 1))
    if nu == 0:
        total = total + 1
    return total


def column_term(j: int, ell: int, d: int, lam) -> RingElement:
    """lam^{j d} * j^ell, the column contribution in the unity-weight rows.

    Computed as the plain product (with 0^0 = 1); the equivalent derivative
    form sum_h S(ell, h) j(j-1)...(j-h+1) (lam^d)^j is kept as a test oracle.
    """
    lam = as_element(lam)
    return lam ** (j * d) * j ** ell


def weight_branch(ap: ArithProgression, lam) -> str:
    """Which closed-form regime applies: "general", "unity-d" or "unity-a"."""
    lam = as_element(lam)
    unity_a = is_power_unity(lam, ap.a)
    unity_d = is_power_unity(lam, ap.d)
    assert not (unity_a and unity_d), "impossible for a weight other than 1"
    if unity_a:
        return "unity-a"
    if unity_d:
        return "unity-d"
    return "general"


def _unity_a_sum(ap: ArithProgression, mu: int, lam: RingElement) -> RingElement:
    """Weighted gap sum when lam^a = 1 and lam^d != 1.

    The residue pairing engine specializes row by row: with D_j = lam^{jd} j^l,

        s_mu^(w) = (1/(mu+1)) sum_n C(mu+1, n) B_n a^{n-1}
                     sum_l C(mu+1-n, l) d^l
                       [ sum_{s=1}^{q} (sa)^{mu+1-n-l} sum_{j in row s} D_j
                         + ((q+1)a)^{mu+1-n-l} sum_{j in last row} D_j ]
                   + (-1)^{mu+1}/(lam-1)^{mu+1} sum_j <mu, j> lam^{j+1},

    where row s covers j = (s-1)(k-1)+1 .. s(k-1) and the last row covers
    j = q(k-1)+1 .. q(k-1)+r.
    """
    a, d, k, q, r = ap.a, ap.d, ap.k, ap.q, ap.r
    ld = lam ** d
    ld_pow = [lam.ring.one]
    for _ in range(a - 1):
        ld_pow.append(ld_pow[-1] * ld)
    total = lam.ring.zero
    for n in range(mu + 1):
        b_n = bernoulli(n)
        if not b_n:
            continue
        outer = lam.ring.zero
        for l in range(mu + 2 - n):
            e = mu + 1 - n - l
            rows = lam.ring.zero
            for s in range(1, q + 1):
                block = lam.ring.zero
                for j in range((s - 1) * (k - 1) + 1, s * (k - 1) + 1):
                    block = block + ld_pow[j] * j ** l
                rows = rows + block * (s * a) ** e
            block = lam.ring.zero
            for j in range(q * (k - 1) + 1, q * (k - 1) + r + 1):
                block = block + ld_pow[j] * j ** l
            rows = rows + block * ((q + 1) * a) ** e
            outer = outer + rows * (binomial(mu + 1 - n, l) * d ** l)
        total = total + outer * (Fraction(binomial(mu + 1, n)) * b_n * Fraction(a) ** (n - 1))
    total = total * Fraction(1, mu + 1)
    inv_l = (lam - 1).inverse()
    return total + (-1) ** (mu + 1) * inv_l ** (mu + 1) * eulerian_tail(mu, lam)


class WeightedSumAP(NamedTuple):
    value: RingElement
    branch: str  # "general" | "unity-d" | "unity-a"


def weighted_sum_ap(ap: ArithProgression, mu: int, lam) -> WeightedSumAP:
    """Weighted gap sum by closed form, dispatched on the weight regime.

    Equals the general residue-table engine on the same generators; weights 0
    and 1 are rejected (1 would be the plain power sum).
    """
    if mu < 1:
        raise ValueError("mu must be positive for weighted sums")
    lam = as_element(lam)
    if lam.is_zero:
        raise ValueError("weight 0 is not allowed")
    if lam == lam.ring.one:
        raise ValueError("weight 1 is not allowed (use power_sum_ap)")
    branch = weight_branch(ap, lam)
    if branch == "unity-a":
        return WeightedSumAP(_unity_a_sum(ap, mu, lam), branch)
    if branch == "unity-d":
        moment = lambda nu: weighted_moment_unity_d(ap, nu, lam)
    else:
        moment = lambda nu: weighted_moment_ap(ap, nu, lam)
    return WeightedSumAP(weighted_sum_from_moments(ap.a, mu, lam, moment), branch)
