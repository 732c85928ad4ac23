"""
Tests for ff/points.py
"""

import pytest

from ExpSumLab.ff.field import make_field
from ExpSumLab.ff.points import check_point_budget, enumerate_points, point_chunks
from ExpSumLab.utils.errors import BudgetError

def test_enumerate_points_order():
    """The first coordinate is the least significant digit."""
    f3 = make_field(3, 1)
    points = [tuple(x.code for x in point) for point in enumerate_points(f3, 2)]
    assert len(points) == 9
    assert points[:4] == [(0, 0), (1, 0), (2, 0), (0, 1)]
    assert len(set(points)) == 9

def test_enumerate_points_range():
    """[start, stop) selects consecutive point numbers."""
    f4 = make_field(2, 2)
    full = list(enumerate_points(f4, 2))
    assert list(enumerate_points(f4, 2, start=5, stop=9)) == full[5:9]

def test_point_chunks_cover():
    """Chunks partition all point numbers."""
    f5 = make_field(5, 1)
    chunks = point_chunks(f5, 2, num_chunks=3)
    assert chunks[0][0] == 0 and chunks[-1][1] == 25
    assert sum(stop - start for start, stop in chunks) == 25

def test_point_budget():
    """Exceeding the budget raises BudgetError naming the size."""
    f4 = make_field(2, 2)
    assert check_point_budget(f4, 3, budget=64) == 64
    with pytest.raises(BudgetError, match="64"):
        check_point_budget(f4, 3, budget=63)
