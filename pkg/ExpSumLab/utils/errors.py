"""
Exception and warning types raised across ExpSumLab.
"""


class ExpSumLabError(Exception):
    """Base class of all library errors."""


class BudgetError(ExpSumLabError, RuntimeError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, what: str, size: int, budget: int):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(
            f"{what} needs {size} items, above the budget of {budget}."
        )


class PrecisionError(ExpSumLabError, ArithmeticError):
    """The working precision is insufficient for the requested result."""


class IntegralityError(ExpSumLabError, ArithmeticError):
    """A quantity that must be integral is not; signals an internal bug."""


class InfiniteDensityError(ExpSumLabError, ValueError):
    """The operation requires an exponent set of finite density."""


class NoSolutionError(ExpSumLabError, ValueError):
    """E_{D,p}(r) is empty at the requested length."""


class UnsupportedInputError(ExpSumLabError, ValueError):
    """The input lies outside the class of problems handled here."""


class ConfigError(ExpSumLabError, ValueError):
    """Malformed configuration file or command line arguments."""


class ConventionWarning(UserWarning):
    """Two documented conventions disagree on a checked quantity."""
