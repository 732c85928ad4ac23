"""
Tests for dwork/series.py
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ExpSumLab.dwork.series import TruncatedSeries

def test_padding_and_truncation():
    """Coefficients are padded with zeros and cut after degree K."""
    s = TruncatedSeries([1, 2], 3)
    assert s.coeffs == [1, 2, 0, 0]
    assert TruncatedSeries([1, 2, 3, 4, 5], 2).coeffs == [1, 2, 3]
    with pytest.raises(ValueError):
        TruncatedSeries([], 2)
    assert TruncatedSeries([], 2, zero=0).coeffs == [0, 0, 0]

def test_geometric_inverse():
    """(1 - T)^(-1) = 1 + T + T^2 + ..."""
    s = TruncatedSeries([1, -1], 5)
    assert s.inverse().coeffs == [1] * 6
    assert s.power(-2).coeffs == [1, 2, 3, 4, 5, 6]

def test_power_and_scale():
    """(1 + T)^2 and s(2T)."""
    s = TruncatedSeries([1, 1], 3)
    assert s.power(2).coeffs == [1, 2, 1, 0]
    assert s.power(0).coeffs == [1, 0, 0, 0]
    assert TruncatedSeries([1, 1, 1], 3).scale(2).coeffs == [1, 2, 4, 0]

def test_non_unit_constant_is_not_inverted():
    """Only constant term 1 is inverted."""
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([2, 1], 3).inverse()

def test_precisions_do_not_mix():
    """Adding series of different truncation raises."""
    with pytest.raises(ValueError):
        TruncatedSeries([1], 2) + TruncatedSeries([1], 3)

def test_map_and_scalar_multiplication():
    """Coefficientwise maps and multiplication by a ring element."""
    s = TruncatedSeries([Fraction(1), Fraction(1, 2)], 2)
    assert (s * 2).coeffs == [2, 1, 0]
    assert (3 * s).coeffs == [3, Fraction(3, 2), 0]
    assert s.map(lambda a: a * 4).coeffs == [4, 2, 0]
    assert s.truncate(1).coeffs == [1, Fraction(1, 2)]

@settings(deadline=None, max_examples=50)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_inverse_is_two_sided(tail):
    """s * s^(-1) = 1 for any integer series with constant term 1."""
    K = len(tail)
    s = TruncatedSeries([1] + tail, K)
    one = TruncatedSeries([1], K, zero=0)
    assert s * s.inverse() == one
    assert s.inverse() * s == one
