"""Unit tests for the arithmetic-progression closed forms."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import random_progressions, reference_weights
from gapsums import (
    ArithProgression,
    LambdaSpec,
    apery_arith,
    as_element,
    column_term,
    frobenius,
    frobenius_ap,
    genus_ap,
    power_sum,
    power_sum_ap,
    stirling2,
    weight_branch,
    weighted_moment,
    weighted_moment_ap,
    weighted_moment_unity_d,
    weighted_sum,
    weighted_sum_ap,
)
from gapsums import oracle
from gapsums.arithprog import _table_polynomial

AP_13 = ArithProgression(13, 3, 5)
AP_14 = ArithProgression(14, 3, 6)
AP_12 = ArithProgression(12, 5, 7)


def test_frobenius_closed_form():
    assert frobenius_ap(ArithProgression(25, 4, 9)) == 146
    assert frobenius_ap(AP_13) == 62
    assert frobenius_ap(ArithProgression(2, 1, 2)) == 1


def test_genus_closed_form():
    assert genus_ap(AP_13) == 36
    assert genus_ap(AP_14) == 37
    assert genus_ap(ArithProgression(2, 1, 2)) == 1


def test_power_sum_closed_form_reference_values():
    assert power_sum_ap(AP_13, 4) == 71099730
    assert power_sum_ap(ArithProgression(25, 4, 10), 6) == 57956823758511
    assert power_sum_ap(ArithProgression(25, 4, 12), 6) == 36249074667429


def test_power_sum_closed_form_pair_reduction():
    # with k = 2 and mu = 1 the triple sum collapses to the classical
    # (1/12)(a-1)(b-1)(2ab-a-b-1) for the pair (a, b = a + d)
    for a, b in [(2, 3), (5, 7), (9, 20), (11, 13), (20, 33)]:
        value = Fraction((a - 1) * (b - 1) * (2 * a * b - a - b - 1), 12)
        assert power_sum_ap(ArithProgression(a, b - a, 2), 1) == value


def test_power_sum_mu0_is_genus():
    for ap in random_progressions(25, seed=44):
        assert power_sum_ap(ap, 0) == genus_ap(ap)


def test_closed_forms_match_table_and_oracle_randomized():
    for ap in random_progressions(100, seed=606, max_a=60, max_d=9, max_k=8):
        table = apery_arith(ap)
        gs = oracle.gap_set(ap.generators())
        assert frobenius_ap(ap) == frobenius(table) == (max(gs.gaps) if gs.gaps else -1)
        for mu in range(6):
            value = power_sum_ap(ap, mu)
            assert value == power_sum(table, mu)
            assert value == oracle.power_sum(gs, mu)


# --- closed-form moments ----------------------------------------------------


def test_table_polynomial_structure():
    for ap in (AP_13, AP_14, AP_12, ArithProgression(2, 1, 2)):
        poly = _table_polynomial(ap)
        assert sum(poly) == ap.a  # one term per residue
        exponents = sorted(i for i, c in enumerate(poly) if c)
        assert exponents == sorted(apery_arith(ap).m)


def test_moment_without_table_matches_direct_sum():
    table = apery_arith(AP_14)
    lam = as_element(7)
    expected = sum(m * 7 ** m for m in table.m)
    assert weighted_moment_ap(AP_14, 1, lam) == expected


def test_moment_without_table_matches_table_moment():
    z5 = LambdaSpec.zeta(5).element()
    lam = z5 ** 3
    table = apery_arith(AP_12)
    for nu in range(4):
        assert weighted_moment_ap(AP_12, nu, lam) == weighted_moment(table, nu, lam)


def test_moment_unity_d():
    z5 = LambdaSpec.zeta(5).element()
    table = apery_arith(AP_12)  # d = 5, so z5^d = 1
    direct0 = sum((z5 ** m for m in table.m), z5.ring.zero)
    assert weighted_moment_unity_d(AP_12, 0, z5) == direct0
    for nu in range(1, 4):
        assert weighted_moment_unity_d(AP_12, nu, z5) == weighted_moment(table, nu, z5)
    with pytest.raises(ValueError):
        weighted_moment_unity_d(AP_14, 1, z5)  # z5^3 != 1: wrong branch


def test_column_term():
    assert column_term(0, 0, 3, as_element(-1)) == 1  # 0^0 = 1 convention
    assert column_term(2, 1, 3, as_element(-1)) == 2  # (-1)^6 * 2
    theta = LambdaSpec.root(3, 2).element()
    assert column_term(2, 3, 3, theta) == theta ** 6 * 8


def test_column_term_against_derivative_identity():
    # lam^{jd} j^l == sum_h S(l, h) j(j-1)...(j-h+1) (lam^d)^j
    rng = random.Random(12)
    weights = [as_element(-1), as_element(Fraction(2, 3)), LambdaSpec.zeta(5).element()]
    for _ in range(40):
        j, ell, d = rng.randint(0, 9), rng.randint(0, 4), rng.randint(1, 6)
        lam = rng.choice(weights)
        xd = lam ** d
        acc = xd.ring.zero
        for h in range(ell + 1):
            falling = 1
            for t in range(h):
                falling *= j - t
            acc = acc + stirling2(ell, h) * falling * xd ** j
        assert column_term(j, ell, d, lam) == acc


# --- weighted closed forms --------------------------------------------------


def test_weighted_closed_form_reference_values():
    w = LambdaSpec.custom((1, 0, 1), (4, 3)).element()
    value, branch = weighted_sum_ap(AP_14, 5, w)
    assert branch == "general"
    assert value.coeffs == (
        Fraction(58604955584641578954030966530484875253297329000101560480),
        Fraction(-69984733631939902694215153740002368436325991046609895240),
    )

    z5 = LambdaSpec.zeta(5).element()
    value, branch = weighted_sum_ap(AP_12, 1, z5)
    assert branch == "unity-d"
    gs = oracle.gap_set(AP_12.generators())
    assert value == oracle.weighted_sum(gs, 1, z5)

    value, branch = weighted_sum_ap(AP_14, 2, as_element(-1))
    assert branch == "unity-a"
    assert value == -6380


def test_weight_branch_classification():
    assert weight_branch(AP_14, as_element(-1)) == "unity-a"
    assert weight_branch(AP_13, as_element(-1)) == "general"  # 13 odd, 3 odd
    assert weight_branch(ArithProgression(13, 2, 5), as_element(-1)) == "unity-d"
    z5 = LambdaSpec.zeta(5).element()
    assert weight_branch(AP_12, z5) == "unity-d"
    assert weight_branch(ArithProgression(15, 2, 4), z5) == "unity-a"
    assert weight_branch(AP_14, as_element(7)) == "general"


def test_weighted_closed_form_rejects_degenerate_weights():
    with pytest.raises(ValueError):
        weighted_sum_ap(AP_14, 2, as_element(1))
    with pytest.raises(ValueError):
        weighted_sum_ap(AP_14, 2, as_element(0))
    with pytest.raises(ValueError):
        weighted_sum_ap(AP_14, 0, as_element(7))


def test_weighted_closed_form_equivalence_smoke():
    weights = [spec.element() for spec in reference_weights()]
    for ap in random_progressions(6, seed=99, max_a=20, max_d=7, max_k=6):
        gens = ap.generators()
        gs = oracle.gap_set(gens)
        for lam in weights:
            value, branch = weighted_sum_ap(ap, 2, lam)
            engine_value, engine_branch = weighted_sum(gens, 2, lam)
            assert value == engine_value
            assert value == oracle.weighted_sum(gs, 2, lam)
            if branch == "unity-a":
                assert engine_branch == "unity-a"
