"""
Tests for padic/splitting.py
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ExpSumLab.density.solutions import p_weight
from ExpSumLab.padic.ramified import make_ramified
from ExpSumLab.padic.splitting import (
    ExactPiRational,
    anton_congruence_holds,
    check_lambda_congruence,
    digit_factorial,
    exp_series_coeffs,
    lambda_coeffs,
)
from ExpSumLab.utils.errors import BudgetError, PrecisionError

def test_pi_relation():
    """pi^(p-1) = -p exactly and v_pi(pi^k) = k."""
    for p in (2, 3, 5):
        assert ExactPiRational.pi_power(p, p - 1) == -p
        for k in range(7):
            assert ExactPiRational.pi_power(p, k).valuation() == k

def test_exact_arithmetic():
    """Products reduce by pi^(p-1) = -p; the zero element has infinite valuation."""
    p = 3
    pi = ExactPiRational.pi_power(p, 1)
    assert pi * pi == -3
    assert (pi + 1) - pi == 1
    assert (pi / 2) * 2 == pi
    assert ExactPiRational(p, []).valuation() == float("inf")
    assert ExactPiRational(p, [Fraction(1, 3)]).valuation() == -2

def test_to_padic():
    """pi maps to varpi^v; non-integral elements raise."""
    ram = make_ramified(3, 1, 5, 2)
    assert ExactPiRational.pi_power(3, 1).to_padic(ram) == ram.pi()
    assert ExactPiRational(3, [Fraction(1, 2)]).to_padic(ram) * 2 == 1
    with pytest.raises(PrecisionError):
        ExactPiRational(3, [Fraction(1, 3)]).to_padic(ram)

@pytest.mark.parametrize("p, m, n_max", [(2, 1, 8), (3, 1, 8), (2, 2, 9), (5, 1, 11)])
def test_lambda_matches_series_composition(p, m, n_max):
    """The finite-sum formula agrees with composing exp."""
    assert lambda_coeffs(p, m, n_max) == exp_series_coeffs(p, m, n_max)

def test_first_lambdas():
    """lambda_0 = 1 and lambda_1 = pi."""
    table = lambda_coeffs(3, 1, 2)
    assert table[0] == 1
    assert table[1] == ExactPiRational.pi_power(3, 1)

@pytest.mark.parametrize("p, m", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)])
def test_lambda_congruence_holds(p, m):
    """lambda_n = pi^(s_p(n))/n!! mod pi^(s_p(n)+p-1) for all n <= 2q."""
    q = p**m
    table = lambda_coeffs(p, m, 2 * q)
    for n in range(2 * q + 1):
        report = check_lambda_congruence(p, m, n, table)
        assert report, f"n = {n}"
        assert report.weight == p_weight(n, p)

def test_corrupted_lambda_is_caught():
    """Perturbing lambda_1 breaks the congruence at n = 1."""
    table = lambda_coeffs(2, 1, 4)
    table[1] = table[1] + 1
    assert not check_lambda_congruence(2, 1, 1, table).holds

def test_short_table_and_budget():
    """Missing indices raise PrecisionError; large tables BudgetError."""
    with pytest.raises(PrecisionError):
        check_lambda_congruence(2, 1, 5, lambda_coeffs(2, 1, 3))
    with pytest.raises(BudgetError):
        lambda_coeffs(2, 1, 10, budget=5)

def test_digit_factorial():
    """7 = (2 1)_3 gives 2! 1! = 2; without the top digit 1."""
    assert digit_factorial(7, 3) == 2
    assert digit_factorial(7, 3, exclude_top=True) == 1
    assert digit_factorial(0, 5) == 1

@given(n=st.integers(min_value=0, max_value=80), p=st.sampled_from([2, 3, 5, 7]))
def test_anton_congruence(n, p):
    """n! = (-p)^a n!! mod p^(a+1)."""
    assert anton_congruence_holds(p, n)

def test_known_lambda_values():
    """lambda_3 = pi^3/6 - pi for p = 3; lambda_4 = pi^2 mod pi^4 for q = 9."""
    pi = ExactPiRational.pi_power(3, 1)
    lam3 = lambda_coeffs(3, 1, 3)[3]
    assert lam3 == ExactPiRational.pi_power(3, 3, Fraction(1, 6)) - pi
    assert lam3.valuation() >= 3
    lam4 = lambda_coeffs(3, 2, 4)[4]
    assert (lam4 - ExactPiRational.pi_power(3, 2)).valuation() >= 4
