"""
Tests for controller/verifier.py
"""

from fractions import Fraction

import pytest

from ExpSumLab.controller.config import ProblemConfig
from ExpSumLab.controller.verifier import _warn_literal, verify_congruence, verify_curve
from ExpSumLab.utils.errors import BudgetError, ConventionWarning

CUBE = ProblemConfig.from_terms(2, 1, {3: "1"}, kmax=4, name="x^3/F2")
LINE = ProblemConfig.from_terms(2, 1, {1: "1"}, kmax=3, name="x/F2")

def test_cube_congruence():
    """x^3 over F_2 passes at every degree."""
    report = verify_congruence(CUBE)
    assert report.passed
    assert report.delta == Fraction(1, 2)
    assert (report.u, report.v) == (1, 2)
    assert report.support == ((1,), (2,))
    assert report.subsets == [((0,), Fraction(1, 2))]
    assert not report.correction_applied
    assert report.alternate_correction_passed is None
    assert [row.threshold for row in report.rows] == [1, 2, 3, 4, 5]

def test_empty_set_correction_is_needed():
    """x over F_2 has delta = n: it passes with the correction and fails without."""
    report = verify_congruence(LINE)
    assert report.correction_applied
    assert report.passed
    assert report.alternate_correction_passed is False
    bare = verify_congruence(LINE.with_overrides(empty_correction="off"))
    assert not bare.passed
    assert [row.k for row in bare.rows if not row.passed][0] == 1

def test_both_conventions():
    """The literal form is reported alongside the proof form."""
    report = verify_congruence(CUBE.with_overrides(sign_convention="both"))
    assert report.convention == "proof"
    assert report.literal_passed is True
    assert "literal convention: PASS" in report.to_text()

def test_product_of_variables():
    """xy over F_3: one factor with exponent -1."""
    cfg = ProblemConfig.from_terms(3, 1, {(1, 1): "1"}, kmax=3)
    assert verify_congruence(cfg).passed

def test_point_budget_lowers_kmax():
    """The compared degree shrinks to what the budget can count."""
    report = verify_congruence(CUBE.with_overrides(rmax_budget=8))
    assert report.k_max == 3
    assert len(report.rows) == 4
    with pytest.raises(BudgetError):
        verify_congruence(CUBE.with_overrides(rmax_budget=1))

def test_report_serialization():
    """JSON fields, timing on request and the coefficient table."""
    report = verify_congruence(CUBE)
    payload = report.to_dict()
    assert payload["verdict"] == "pass"
    assert payload["delta"] == "1/2"
    assert payload["subsets"] == [{"I": [1], "delta": "1/2"}]
    assert payload["coefficients"][0]["valuation"].startswith(">=")
    assert "seconds" not in payload
    assert "seconds" in report.to_dict(include_timing=True)
    table = report.to_table()
    assert list(table.columns) == ["k", "LHS", "RHS", "v(LHS-RHS)", "threshold", "pass"]
    assert table["pass"].all()
    assert '"verdict": "pass"' in report.to_json()

@pytest.mark.parametrize(
    "p, m, terms",
    [(2, 1, {3: "1"}), (3, 1, {2: "1"}), (2, 2, {3: "1"})],
)
def test_curve_congruence(p, m, terms):
    """The curve numerator against the norm of the right-hand side."""
    report = verify_curve(ProblemConfig.from_terms(p, m, terms, kmax=2))
    assert report.kind == "curve"
    assert report.passed

def test_curve_needs_one_variable():
    """Curves are only defined for univariate f."""
    with pytest.raises(ValueError):
        verify_curve(ProblemConfig.from_terms(2, 1, {(1, 1): "1"}))

def test_literal_failure_warns():
    """A literal failure next to a proof pass is a ConventionWarning."""
    with pytest.warns(ConventionWarning):
        _warn_literal(CUBE, True, False)
