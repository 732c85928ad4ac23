"""
Tests for ff/tables.py
"""

import numpy as np
import pytest

from ExpSumLab.ff.field import make_field, trace_to_prime
from ExpSumLab.ff.points import enumerate_points
from ExpSumLab.ff.polynomial import SparsePoly, eval_poly
from ExpSumLab.ff.tables import build_power_trace_table, coordinate_codes

@pytest.mark.parametrize("p, degree", [(2, 1), (2, 2), (3, 2), (5, 1), (2, 3)])
def test_table_traces(p, degree):
    """traces[k] is the trace of g^k."""
    ctx = make_field(p, degree)
    table = build_power_trace_table(ctx)
    g = table.generator
    expected = [trace_to_prime(ctx, g**k) for k in range(ctx.order - 1)]
    np.testing.assert_array_equal(table.traces, np.array(expected, dtype=np.uint8))

def test_logs_of_targets():
    """Requested discrete logs satisfy g^log = target."""
    ctx = make_field(3, 2)
    targets = (1, 3, 5)
    table = build_power_trace_table(ctx, targets)
    for code, log in zip(targets, table.logs):
        assert table.generator**log == ctx.from_code(code)

def test_zero_target_rejected():
    """Zero has no discrete logarithm."""
    with pytest.raises(ValueError):
        build_power_trace_table(make_field(2, 2), (0,))

@pytest.mark.parametrize(
    "p, degree, terms",
    [
        (2, 2, {(3, 0): "a", (1, 1): 1}),
        (3, 2, {(2, 1): "a + 1", (0, 1): 2}),
        (5, 1, {(1, 2): 3, (2, 0): 1}),
    ],
)
def test_trace_values_match_direct_evaluation(p, degree, terms):
    """Vectorised Tr(f(x)) agrees with evaluating f point by point."""
    ctx = make_field(p, degree)
    f = SparsePoly.from_terms(ctx, terms)
    table = build_power_trace_table(ctx, tuple(c.code for _, c in f.terms))
    log_terms = [(d, log) for (d, _), log in zip(f.terms, table.logs)]
    points = list(enumerate_points(ctx, 2))
    coordinates = np.array(
        [[coordinate_codes(table, x) for x in point] for point in points], dtype=np.int64
    )
    expected = [trace_to_prime(ctx, eval_poly(f, point)) for point in points]
    np.testing.assert_array_equal(table.trace_values(coordinates, log_terms), expected)
