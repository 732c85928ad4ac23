"""
ExpSumLab Controller Module

Problem configuration, the congruence and curve verifiers, the
self-test corpus and the command controller behind the command line.
"""

from .config import ProblemConfig, load_config
from .verifier import (
    CoefficientRow,
    VerifyReport,
    compare_series,
    verify_congruence,
    verify_curve,
)
from .selftest import (
    SUITES,
    DEFAULT_CORPUS,
    CheckRow,
    SelftestReport,
    selftest,
)
from .commands import CommandResult, Controller

__all__ = [
    "ProblemConfig",
    "load_config",
    "CoefficientRow",
    "VerifyReport",
    "compare_series",
    "verify_congruence",
    "verify_curve",
    "SUITES",
    "DEFAULT_CORPUS",
    "CheckRow",
    "SelftestReport",
    "selftest",
    "CommandResult",
    "Controller",
]
