"""
ExpSumLab p-adic Module

Fixed-precision arithmetic in the unramified ring O_m (Teichmüller
modulus, Frobenius), its totally ramified extension by varpi, the exact
field Q(pi), the splitting-function coefficients lambda_n and zeta_p.
"""

from .unramified import (
    UnramCtx,
    UnramElement,
    make_unramified,
    teichmuller,
    teichmuller_modulus,
    frobenius,
    p_valuation,
)
from .ramified import (
    AtLeast,
    Valuation,
    RamCtx,
    PadicScalar,
    make_ramified,
    zeta_p,
    embed_cyc,
    auto_precision,
    valuation_meets,
    valuation_to_json,
)
from .splitting import (
    ExactPiRational,
    LambdaCongruenceReport,
    lambda_coeffs,
    check_lambda_congruence,
    anton_congruence_holds,
    exp_series_coeffs,
    base_p_digits,
    digit_factorial,
)

__all__ = [
    "UnramCtx",
    "UnramElement",
    "make_unramified",
    "teichmuller",
    "teichmuller_modulus",
    "frobenius",
    "p_valuation",
    "AtLeast",
    "Valuation",
    "RamCtx",
    "PadicScalar",
    "make_ramified",
    "zeta_p",
    "embed_cyc",
    "auto_precision",
    "valuation_meets",
    "valuation_to_json",
    "ExactPiRational",
    "LambdaCongruenceReport",
    "lambda_coeffs",
    "check_lambda_congruence",
    "anton_congruence_holds",
    "exp_series_coeffs",
    "base_p_digits",
    "digit_factorial",
]
