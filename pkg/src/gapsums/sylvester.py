"""Gap-set statistics for arbitrary coprime generators, driven by the
residue table.

For a table m_0, ..., m_{a-1} (a = smallest generator), the gap set is
{ m_i - j*a : 1 <= i < a, 1 <= j <= (m_i - i)/a }, which turns every gap sum
into a sum over the table:

* Frobenius number:  g = max_i m_i - a
* genus:             n = (1/a) sum m_i - (a-1)/2
* power sums:        s_mu = (1/(mu+1)) sum_{k=0}^{mu} C(mu+1,k) B_k a^{k-1}
                     sum_i m_i^{mu+1-k}  +  (B_{mu+1}/(mu+1)) (a^{mu+1} - 1)

Weighted sums s_mu^(w) = sum w^n n^mu over the gaps split on whether w^a = 1:
the general engine divides by (w^a - 1), the unity engine uses the residue
pairing i = m_i mod a instead.  Both consume the weighted moments
sum_i m_i^nu w^{m_i}, which are always computed along two independent routes
and compared exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from . import polys
from .apery import AperyTable, Generators, apery_general, apery_polynomial, as_arith_progression
from .exact import bernoulli, binomial, eulerian, stirling2
from .numberfield import RingElement, as_element, is_power_unity

__all__ = [
    "GapSummary",
    "WeightedSum",
    "eulerian_tail",
    "eulerian_weight",
    "frobenius",
    "genus",
    "moment_from_polynomial",
    "power_sum",
    "summarize",
    "weighted_moment",
    "weighted_sum",
    "weighted_sum_general",
    "weighted_sum_unity_a",
]


def frobenius(table: AperyTable) -> int:
    """Largest gap: max m_i minus the modulus (-1 when there are no gaps)."""
    return max(table.m) - table.modulus


def genus(table: AperyTable) -> int:
    """Number of gaps: (1/a) sum m_i - (a-1)/2, always an exact integer."""
    a = table.modulus
    value = Fraction(sum(table.m), a) - Fraction(a - 1, 2)
    if value.denominator != 1:
        raise ArithmeticError("non-integral genus: residue table is corrupted")
    return int(value)


def power_sum(table: AperyTable, mu: int) -> int:
    """mu-th power sum of the gaps; mu = 0 recovers the genus."""
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    a = table.modulus
    total = Fraction(0)
    for k in range(mu + 1):
        b = bernoulli(k)
        if not b:
            continue
        inner = sum(mi ** (mu + 1 - k) for mi in table.m[1:])
        total += binomial(mu + 1, k) * b * Fraction(a) ** (k - 1) * inner
    total = total / (mu + 1) + bernoulli(mu + 1) / (mu + 1) * (a ** (mu + 1) - 1)
    if total.denominator != 1:
        raise ArithmeticError("non-integral power sum: internal fault")
    return int(total)


def moment_from_polynomial(coeffs: Sequence[int], nu: int, lam: RingElement) -> RingElement:
    """Evaluate sum_e c_e e^nu lam^e from P(x) = sum_e c_e x^e.

    Uses the derivative route sum_{h<=nu} S(nu,h) lam^h P^(h)(lam), where
    S(nu,h) are Stirling numbers of the second kind; P is differentiated
    symbolically and each derivative is evaluated sparsely.
    """
    lam = as_element(lam)
    total = lam.ring.zero
    current = list(coeffs)
    for h in range(nu + 1):
        s = stirling2(nu, h)
        if s:
            total = total + s * lam ** h * polys.eval_sparse(current, lam)
        current = polys.derivative(current)
    return total


def weighted_moment(table: AperyTable, nu: int, lam) -> RingElement:
    """sum_i m_i^nu lam^{m_i} over the whole table (the m_0 = 0 entry
    contributes 1 when nu = 0 and nothing otherwise).

    Computed twice: directly term by term, and through the derivative route
    on the table polynomial.  The two must agree exactly.
    """
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    lam = as_element(lam)
    if lam.is_zero:
        raise ValueError("weight 0 is not allowed")
    direct = lam.ring.zero
    for mi in table.m:
        direct = direct + mi ** nu * lam ** mi  # 0**0 == 1 covers the m_0 entry
    derived = moment_from_polynomial(apery_polynomial(table), nu, lam)
    if direct != derived:
        raise ArithmeticError("weighted moment routes disagree: internal fault")
    return direct


def eulerian_weight(n: int, x: RingElement) -> RingElement:
    """sum_{j=0}^{n} <n, n-j> x^j."""
    total = x.ring.zero
    for j in range(n + 1):
        c = eulerian(n, n - j)
        if c:
            total = total + c * x ** j
    return total


def eulerian_tail(mu: int, lam: RingElement) -> RingElement:
    """sum_{j=0}^{mu-1} <mu, j> lam^{j+1} (equal to eulerian_weight by the
    row symmetry of the Eulerian numbers)."""
    total = lam.ring.zero
    for j in range(mu):
        c = eulerian(mu, j)
        if c:
            total = total + c * lam ** (j + 1)
    return total


def weighted_sum_from_moments(
    modulus: int, mu: int, lam: RingElement, moment: Callable[[int], RingElement]
) -> RingElement:
    """Weighted gap sum for lam^a != 1 (a = modulus), from a moment source.

    With M(nu) = sum_i m_i^nu lam^{m_i} (the nu = 0 value including the unit
    contribution of m_0), the sum telescopes to

        sum_{n=0}^{mu} (-a)^n / (lam^a - 1)^{n+1} C(mu, n)
            * [ sum_{j=0}^{n} <n, n-j> lam^{ja} ] * M(mu - n)
        + (-1)^{mu+1} / (lam - 1)^{mu+1} * sum_{j=0}^{mu} <mu, mu-j> lam^j .

    The n = mu term consumes M(0) directly, so no 0^0 convention is needed.
    """
    la = lam ** modulus
    inv_la = (la - 1).inverse()
    total = lam.ring.zero
    for n in range(mu + 1):
        total = total + (
            binomial(mu, n)
            * Fraction(-modulus) ** n
            * inv_la ** (n + 1)
            * eulerian_weight(n, la)
            * moment(mu - n)
        )
    inv_l = (lam - 1).inverse()
    return total + (-1) ** (mu + 1) * inv_l ** (mu + 1) * eulerian_weight(mu, lam)


def _require_weight(mu: int, lam) -> RingElement:
    if mu < 1:
        raise ValueError("mu must be positive for weighted sums")
    lam = as_element(lam)
    if lam.is_zero:
        raise ValueError("weight 0 is not allowed")
    if lam == lam.ring.one:
        raise ValueError("weight 1 is not allowed (use the unweighted power sum)")
    return lam


def weighted_sum_general(table: AperyTable, mu: int, lam) -> RingElement:
    """Weighted gap sum when lam^a != 1, from the residue table."""
    lam = _require_weight(mu, lam)
    if is_power_unity(lam, table.modulus):
        raise ValueError(
            "weight is a root of unity of the modulus order; use weighted_sum_unity_a"
        )
    return weighted_sum_from_moments(
        table.modulus, mu, lam, lambda nu: weighted_moment(table, nu, lam)
    )


def weighted_sum_unity_a(table: AperyTable, mu: int, lam) -> RingElement:
    """Weighted gap sum when lam^a = 1 (lam != 1), e.g. alternating sums.

    Two equivalent statements are evaluated and compared exactly:

    * difference form, using the residue pairing i = m_i mod a:
        (1/(mu+1)) sum_n C(mu+1, n) B_n a^{n-1}
            sum_{i>=1} (m_i^{mu+1-n} - i^{mu+1-n}) lam^{m_i}
    * moment form: the same outer sum over m_i^{mu+1-n} lam^{m_i} alone, plus
      the geometric tail (-1)^{mu+1}/(lam-1)^{mu+1} sum_j <mu, j> lam^{j+1}.
    """
    lam = _require_weight(mu, lam)
    a = table.modulus
    if not is_power_unity(lam, a):
        raise ValueError("weight is not a root of unity of the modulus order")
    diff_form = lam.ring.zero
    moment_form = lam.ring.zero
    for n in range(mu + 1):
        b = bernoulli(n)
        if not b:
            continue
        scale = binomial(mu + 1, n) * b * Fraction(a) ** (n - 1)
        diff_inner = lam.ring.zero
        e = mu + 1 - n
        for i in range(1, a):
            diff_inner = diff_inner + (table.m[i] ** e - i ** e) * lam ** table.m[i]
        diff_form = diff_form + scale * diff_inner
        moment_form = moment_form + scale * weighted_moment(table, e, lam)
    diff_form = diff_form * Fraction(1, mu + 1)
    inv_l = (lam - 1).inverse()
    moment_form = moment_form * Fraction(1, mu + 1) + (
        (-1) ** (mu + 1) * inv_l ** (mu + 1) * eulerian_tail(mu, lam)
    )
    if diff_form != moment_form:
        raise ArithmeticError("unity-weight forms disagree: internal fault")
    return diff_form


class WeightedSum(NamedTuple):
    value: RingElement
    branch: str  # "general" | "unity-a"


def weighted_sum(gens: Generators, mu: int, lam) -> WeightedSum:
    """Weighted gap sum for arbitrary generators, dispatching on whether the
    weight is a root of unity of order dividing the smallest generator."""
    lam = _require_weight(mu, lam)
    table = apery_general(gens)
    if is_power_unity(lam, table.modulus):
        return WeightedSum(weighted_sum_unity_a(table, mu, lam), "unity-a")
    return WeightedSum(weighted_sum_general(table, mu, lam), "general")


@dataclass(frozen=True)
class GapSummary:
    """Bundled results for one generator set, with per-entry method tags."""

    generators: tuple[int, ...]
    frobenius: int
    genus: int
    power_sums: Mapping[int, int]
    weight: RingElement | None
    weighted_sums: Mapping[int, RingElement]
    methods: Mapping[str, str]


def summarize(
    gens: Generators,
    power_mus: Iterable[int] = (),
    weight=None,
    weighted_mus: Iterable[int] = (),
    method: str = "auto",
) -> GapSummary:
    """Bundle the Frobenius number, genus, and requested sums.

    ``method`` selects the evaluation path: "auto" takes the closed forms
    when the generators form an arithmetic progression and the residue-table
    engine otherwise; "apery", "closed-form" and "oracle" force a path
    ("closed-form" requires progression input).  Each entry records the path
    that produced it.
    """
    from . import arithprog, oracle  # deferred: arithprog builds on this module

    ap = as_arith_progression(gens)
    if method == "auto":
        method = "closed-form" if ap is not None else "apery"
    if method == "closed-form" and ap is None:
        raise ValueError("closed forms need generators in arithmetic progression")
    if method not in ("apery", "closed-form", "oracle"):
        raise ValueError(f"unknown method {method!r}")
    if weighted_mus and weight is None:
        raise ValueError("weighted sums need a weight")

    methods: dict[str, str] = {}
    power_sums: dict[int, int] = {}
    weighted_sums: dict[int, RingElement] = {}

    if method == "closed-form":
        tag = "ap-closed-form"
        frob, count = arithprog.frobenius_ap(ap), arithprog.genus_ap(ap)
        for mu in sorted(set(power_mus)):
            power_sums[mu] = arithprog.power_sum_ap(ap, mu)
            methods[f"power_sum[{mu}]"] = tag
        if weight is not None:
            for mu in sorted(set(weighted_mus)):
                value, branch = arithprog.weighted_sum_ap(ap, mu, weight)
                weighted_sums[mu] = value
                methods[f"weighted_sum[{mu}]"] = f"{tag}/{branch}"
    elif method == "oracle":
        tag = "oracle"
        gs = oracle.gap_set(gens)
        frob = max(gs.gaps, default=-1)
        count = len(gs.gaps)
        for mu in sorted(set(power_mus)):
            power_sums[mu] = oracle.power_sum(gs, mu)
            methods[f"power_sum[{mu}]"] = tag
        if weight is not None:
            for mu in sorted(set(weighted_mus)):
                weighted_sums[mu] = oracle.weighted_sum(gs, mu, weight)
                methods[f"weighted_sum[{mu}]"] = tag
    else:
        tag = "general-apery"
        table = apery_general(gens)
        frob, count = frobenius(table), genus(table)
        for mu in sorted(set(power_mus)):
            power_sums[mu] = power_sum(table, mu)
            methods[f"power_sum[{mu}]"] = tag
        if weight is not None:
            for mu in sorted(set(weighted_mus)):
                value, branch = weighted_sum(gens, mu, weight)
                weighted_sums[mu] = value
                methods[f"weighted_sum[{mu}]"] = f"{tag}/{branch}"
    methods["frobenius"] = tag
    methods["genus"] = tag

    return GapSummary(
        generators=gens.values,
        frobenius=frob,
        genus=count,
        power_sums=power_sums,
        weight=as_element(weight) if weight is not None else None,
        weighted_sums=weighted_sums,
        methods=methods,
    )
