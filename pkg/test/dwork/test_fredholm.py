"""
Tests for dwork/fredholm.py
"""

import pytest

from ExpSumLab.dwork.fredholm import (
    certified_index_bound,
    cyclic_expansion,
    cyclic_minor_check,
    fm_coefficients,
    fredholm_determinant,
    fredholm_truncated,
    inclusion_exclusion_check,
    l_from_fredholm,
    leibniz_determinant,
    operator_indices,
)
from ExpSumLab.dwork.manin import build_problem
from ExpSumLab.dwork.matrix import charpoly_divfree
from ExpSumLab.ff.field import make_field
from ExpSumLab.ff.polynomial import SparsePoly, univariate
from ExpSumLab.lfun.exponential_sum import l_series
from ExpSumLab.padic.ramified import valuation_meets
from ExpSumLab.utils.errors import BudgetError, PrecisionError

def _cube():
    return build_problem(univariate(make_field(2, 1), {3: 1}), k_max=3)

def test_certified_bound():
    """x^3 over F_2: window varpi^4 = pi^2, decay 1/4 per index, largest exponent 3."""
    assert certified_index_bound(_cube()) == (24,)

def test_certified_bound_scales_with_window():
    """The decay bound is linear in the window, so it only ever grows past the digit weights."""
    ctx = _cube()
    assert certified_index_bound(ctx, window=2) == (12,)
    assert certified_index_bound(ctx, window=8) == (48,)
    with pytest.raises(PrecisionError):
        fredholm_truncated(ctx, (0,), index_bound=23)

def test_operator_indices():
    """Exact support J, or every index whose support contains J."""
    assert operator_indices((0,), (2, 2), 2) == [(1, 0), (2, 0)]
    assert len(operator_indices((0,), (2, 2), 2, exact_support=False)) == 6
    assert operator_indices((0, 1), (1, 2), 2) == [(1, 1), (1, 2)]

def test_fm_constant_term():
    """F(0) = 1 and f_1 = gamma pi for a linear term."""
    ctx = build_problem(univariate(make_field(3, 1), {1: 1}), k_max=2)
    table = fm_coefficients(ctx.gamma, ctx.ram, [4])
    assert table[(0,)] == 1
    assert table[(1,)] == ctx.ram.pi()

@pytest.mark.parametrize(
    "p, degree, k_max",
    [(2, 1, 3), (2, 3, 3), (3, 2, 2)],
)
def test_fredholm_product_matches_exact_series(p, degree, k_max):
    """The determinant product agrees with the exact L-series up to the window."""
    f = univariate(make_field(p, 1), {degree: 1})
    ctx = build_problem(f, k_max=k_max)
    window = ctx.threshold(k_max)
    series = l_from_fredholm(ctx, window=window)
    exact = l_series(f, k_max).to_series(ctx.ram)
    for k in range(k_max + 1):
        assert valuation_meets((exact[k] - series[k]).valuation(), window)

def test_bound_below_certificate_is_rejected():
    """A smaller box than the certified one raises."""
    ctx = _cube()
    with pytest.raises(PrecisionError):
        fredholm_truncated(ctx, (0,), index_bound=3)

def test_matrix_budget():
    """Boxes above the budget raise."""
    ctx = _cube()
    with pytest.raises(BudgetError):
        fredholm_truncated(ctx, (0,), matrix_budget=10)

def test_degenerate_subset_gives_one():
    """A coordinate of J missed by D_J makes det(I - T A_J) = 1."""
    f = SparsePoly.from_terms(make_field(2, 1), {(1, 1): 1})
    ctx = build_problem(f, k_max=1)
    det = fredholm_truncated(ctx, (0,))
    assert det[0] == 1 and det[1] == 0

def test_elimination_matches_berkowitz():
    """Series elimination and the division-free charpoly agree."""
    ram = _cube().ram
    rows = [[ram.scalar(a) for a in row] for row in [[1, 2, 0], [3, 0, 1], [0, 1, 1]]]
    eliminated = fredholm_determinant(rows, 3, ram.one(), ram.zero())
    assert eliminated == charpoly_divfree(rows, 3, ram.one(), ram.zero())

def test_cyclic_expansion_is_the_determinant():
    """Leibniz and the expansion over cycle structures agree on integers."""
    rows = [[2, -1, 3, 0], [1, 4, 0, 2], [0, 5, -2, 1], [3, 0, 1, 1]]
    assert leibniz_determinant(rows, 1, 0) == cyclic_expansion(rows, 1, 0)
    assert leibniz_determinant([[1, 2], [3, 4]], 1, 0) == -2

def test_minor_check():
    """A Dwork minor on a few indices."""
    assert cyclic_minor_check(_cube(), [(1,), (2,), (3,)])
    with pytest.raises(ValueError):
        cyclic_minor_check(_cube(), [(1,), (1,)])

def test_inclusion_exclusion():
    """xy over F_2: det on supports containing {x} factors over J."""
    f = SparsePoly.from_terms(make_field(2, 1), {(1, 1): 1})
    ctx = build_problem(f, k_max=1)
    assert inclusion_exclusion_check(ctx, (0,))
