"""
Tests for utils/errors.py
"""

import pytest

from ExpSumLab.utils.errors import (
    BudgetError,
    ConfigError,
    ExpSumLabError,
    InfiniteDensityError,
    IntegralityError,
    PrecisionError,
)

def test_budget_error_message():
    """The message names the enumeration, its size and the budget."""
    error = BudgetError("A^2(F_4)", 16, 10)
    assert str(error) == "A^2(F_4) needs 16 items, above the budget of 10."
    assert (error.size, error.budget) == (16, 10)

@pytest.mark.parametrize(
    "error_type, builtin",
    [
        (BudgetError, RuntimeError),
        (PrecisionError, ArithmeticError),
        (IntegralityError, ArithmeticError),
        (InfiniteDensityError, ValueError),
        (ConfigError, ValueError),
    ],
)
def test_hierarchy(error_type, builtin):
    """Library errors are caught both as ExpSumLabError and as builtins."""
    assert issubclass(error_type, ExpSumLabError)
    assert issubclass(error_type, builtin)
