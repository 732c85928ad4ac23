"""
ExpSumLab Utilities Package

Common helpers used across the library:
- Constants (budgets, run options, report columns)
- Exception hierarchy
- Logging setup for the command line
"""

from .constants import *
from .errors import (
    ExpSumLabError,
    BudgetError,
    PrecisionError,
    IntegralityError,
    InfiniteDensityError,
    NoSolutionError,
    UnsupportedInputError,
    ConfigError,
    ConventionWarning,
)
from .logging_setup import configure_logging

__all__ = [
    # constants
    "DEFAULT_POINT_BUDGET",
    "DEFAULT_SOLUTION_BUDGET",
    "DEFAULT_NODE_BUDGET",
    "DEFAULT_DIGIT_BUDGET",
    "DEFAULT_LAMBDA_BUDGET",
    "DEFAULT_MATRIX_BUDGET",
    "DEFAULT_KMAX",
    "DEFAULT_THREADS",
    "DEFAULT_CHUNK_SIZE",
    "EMPTY_CORRECTION_AUTO",
    "EMPTY_CORRECTION_ON",
    "EMPTY_CORRECTION_OFF",
    "EMPTY_CORRECTION_MODES",
    "SIGN_PROOF",
    "SIGN_LITERAL",
    "SIGN_BOTH",
    "SIGN_CONVENTIONS",
    "EXIT_PASS",
    "EXIT_FAIL",
    "EXIT_INPUT_ERROR",
    "EXIT_BUDGET_ERROR",
    "EXIT_PRECISION_ERROR",
    "REPORT_SCHEMA_VERSION",
    "THRESHOLD_NOTE",
    "DEGREE",
    "LHS_COEFFICIENT",
    "RHS_COEFFICIENT",
    "DIFFERENCE_VALUATION",
    "THRESHOLD",
    "PASSED",
    "CHECK_SUITE",
    "CHECK_CASE",
    "CHECK_DETAIL",
    "CHECK_FLAGGED",

    # errors
    "ExpSumLabError",
    "BudgetError",
    "PrecisionError",
    "IntegralityError",
    "InfiniteDensityError",
    "NoSolutionError",
    "UnsupportedInputError",
    "ConfigError",
    "ConventionWarning",

    # logging_setup
    "configure_logging",
]
