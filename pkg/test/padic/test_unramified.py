"""
Tests for padic/unramified.py
"""

import pytest
from hypothesis import given, settings, strategies as st

from ExpSumLab.ff.field import make_field
from ExpSumLab.padic.unramified import (
    UnramCtx,
    frobenius,
    make_unramified,
    p_valuation,
    teichmuller,
    teichmuller_modulus,
)

def test_p_valuation():
    """v_p of integers, zero capped."""
    assert p_valuation(24, 2, 10) == 3
    assert p_valuation(7, 7, 10) == 1
    assert p_valuation(0, 3, 5) == 5

@pytest.mark.parametrize(
    "p, m, expected",
    [
        (2, 1, (0, 1)),
        (2, 2, (1, 1, 1)),
        (3, 2, (1, 0, 1)),
    ],
)
def test_teichmuller_modulus_exact_cases(p, m, expected):
    """Cyclotomic factors that are already exact over Z."""
    modulo = p**6
    assert teichmuller_modulus(p, m, 6) == tuple(c % modulo for c in expected)

@pytest.mark.parametrize("p, m, K", [(2, 3, 5), (5, 2, 4), (3, 3, 3)])
def test_generator_is_root_of_unity(p, m, K):
    """x^(q-1) = 1 and G reduces to the F_q modulus."""
    ctx = make_unramified(p, m, K)
    assert ctx.generator() ** (p**m - 1) == 1
    assert tuple(c % p for c in ctx.modulus) == make_field(p, m).modulus

def test_precision_must_be_positive():
    """K = 0 is rejected."""
    with pytest.raises(ValueError):
        UnramCtx(p=2, m=1, K=0)

@settings(max_examples=30, deadline=None)
@given(code=st.integers(min_value=1, max_value=8))
def test_teichmuller_lift(code):
    """omega(c)^q = omega(c), omega(c) = c mod p, and tau omega(c) = omega(c^p)."""
    ctx = make_unramified(3, 2, 4)
    c = make_field(3, 2).from_code(code)
    lift = teichmuller(ctx, c)
    assert lift ** 9 == lift
    assert lift.reduce() == c
    assert frobenius(ctx, lift) == teichmuller(ctx, c**3)

def test_frobenius_has_order_m():
    """tau^m is the identity and tau is multiplicative."""
    ctx = make_unramified(2, 3, 5)
    a = ctx.element([3, 1, 7])
    b = ctx.element([1, 2, 0])
    assert frobenius(ctx, a, times=3) == a
    assert frobenius(ctx, a * b) == frobenius(ctx, a) * frobenius(ctx, b)

def test_teichmuller_rejects_foreign_field():
    """The residue field must match."""
    ctx = make_unramified(2, 2, 4)
    with pytest.raises(ValueError):
        teichmuller(ctx, make_field(2, 3).one())

def test_inverse_and_valuation():
    """Units invert; multiples of p have positive valuation."""
    ctx = make_unramified(5, 2, 6)
    a = ctx.element([2, 3])
    assert a * a.inverse() == 1
    assert (a * 25).valuation() == 2
    assert ctx.zero().valuation() == 6
    with pytest.raises(ZeroDivisionError):
        (a * 5).inverse()
