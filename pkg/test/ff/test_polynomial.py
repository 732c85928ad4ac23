"""
Tests for ff/polynomial.py
"""

import pytest

from ExpSumLab.ff.field import embed, extend_field, make_field
from ExpSumLab.ff.polynomial import SparsePoly, eval_poly, univariate

def test_from_terms_drops_zero_coefficients():
    """Zero coefficients vanish and terms are sorted."""
    f3 = make_field(3, 1)
    f = SparsePoly.from_terms(f3, {(2, 0): 1, (0, 1): 3, (1, 1): "2"})
    assert f.exponents == ((1, 1), (2, 0))
    assert f.n == 2
    assert f.degree() == 2

def test_from_terms_validation():
    """Mismatched dimensions and duplicates raise."""
    f2 = make_field(2, 1)
    with pytest.raises(ValueError):
        SparsePoly.from_terms(f2, {(1,): 1, (1, 1): 1})
    with pytest.raises(ValueError):
        SparsePoly.from_terms(f2, {(-1,): 1})
    with pytest.raises(ValueError):
        SparsePoly.from_terms(f2, {})

def test_eval_in_extension():
    """Coefficients of f over F_4 embed into F_16 before evaluation."""
    f4 = make_field(2, 2)
    f = univariate(f4, {3: "a", 1: 1})
    f16 = extend_field(f4, 2)
    a = embed(f16, f4.generator())
    for x in f16.elements():
        assert eval_poly(f, [x]) == a * x**3 + x

def test_eval_dimension_check():
    """Points must have n coordinates."""
    f = univariate(make_field(5, 1), {2: 1})
    with pytest.raises(ValueError):
        eval_poly(f, [])

def test_coefficient_and_str():
    """Missing exponents read as zero; str shows every term."""
    f4 = make_field(2, 2)
    f = SparsePoly.from_terms(f4, {(1, 1): "a"})
    assert f.coefficient((1, 1)) == f4.generator()
    assert f.coefficient((2, 0)).is_zero()
    assert str(f) == "(a)*x1*x2"
