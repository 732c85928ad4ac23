"""
Tests for lfun/exponential_sum.py
"""

import pytest

from ExpSumLab.ff.field import make_field
from ExpSumLab.ff.polynomial import SparsePoly, univariate
from ExpSumLab.lfun.cyclotomic import CycInt
from ExpSumLab.lfun.exponential_sum import (
    exp_sum,
    l_series,
    max_degree_within_budget,
    point_counts,
    series_from_sums,
)
from ExpSumLab.utils.errors import BudgetError, IntegralityError

F2 = make_field(2, 1)
F3 = make_field(3, 1)

def test_trace_histograms():
    """Counts by trace sum to q^(rn)."""
    assert point_counts(univariate(F2, {1: 1}), 3).tolist() == [4, 4]
    assert point_counts(univariate(F3, {2: 1}), 1).tolist() == [1, 2, 0]
    assert point_counts(univariate(F2, {3: 1}), 2).tolist() == [4, 0]

def test_exponential_sums():
    """S_1(x) = 0, S_1(x^2 / F_3) = 1 + 2 zeta, S_2(x^3 / F_2) = 4."""
    assert exp_sum(univariate(F2, {1: 1}), 1) == 0
    assert exp_sum(univariate(F3, {2: 1}), 1) == CycInt(3, [1, 2])
    assert exp_sum(univariate(F2, {3: 1}), 2) == 4

def test_l_series_of_cube():
    """L(x^3 / F_2) = 1 + 2 T^2."""
    exact = l_series(univariate(F2, {3: 1}), 4)
    assert exact.integer_coefficients() == [1, 0, 2, 0, 0]
    assert [int(s) for s in exact.sums] == [0, 4, 0, -8]
    assert exact.k_max == 4
    assert (exact.p, exact.m, exact.n) == (2, 1, 1)

def test_l_series_of_product():
    """L(xy / F_2) = 1 / (1 - 2T)."""
    f = SparsePoly.from_terms(F2, {(1, 1): 1})
    assert l_series(f, 3).integer_coefficients() == [1, 2, 4, 8]

def test_conjugate_series():
    """zeta -> zeta^2 on L(x^2) gives L(2 x^2)."""
    exact = l_series(univariate(F3, {2: 1}), 2)
    twisted = l_series(univariate(F3, {2: 2}), 2)
    assert exact.conjugate(2).coeffs == list(twisted.coeffs)

def test_series_from_sums():
    """Newton's recursion, and a non-integral case."""
    sums = [CycInt(2, [0]), CycInt(2, [4])]
    assert series_from_sums(2, sums, 2) == [1, 0, 2]
    with pytest.raises(IntegralityError):
        series_from_sums(3, [CycInt(3, [1, 0]), CycInt(3, [0, 0])], 2)

def test_budgets_and_arguments():
    """r_max below k_max and oversized scans raise."""
    f = univariate(F2, {3: 1})
    with pytest.raises(ValueError):
        l_series(f, 3, r_max=2)
    with pytest.raises(BudgetError):
        l_series(f, 5, budget=10)
    g = SparsePoly.from_terms(F2, {(1, 1): 1})
    assert max_degree_within_budget(g, 100) == 3

def test_threads_do_not_change_counts():
    """Chunked parallel counting gives the same histogram."""
    f = SparsePoly.from_terms(F3, {(2, 1): 1, (0, 1): 2})
    assert point_counts(f, 1, threads=2).tolist() == point_counts(f, 1).tolist()
