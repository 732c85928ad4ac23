"""
ExpSumLab Dwork Module

Truncated series, matrices over O_m[varpi] with division-free
characteristic polynomials, the matrices M(Gamma_I) and the right-hand
side of the congruence, and an independent route to L(A^n, f; T) through
truncated Fredholm determinants.
"""

from .series import TruncatedSeries
from .matrix import (
    MatrixO,
    charpoly_divfree,
    determinant,
    twisted_product,
)
from .manin import (
    GammaCtx,
    SubsetData,
    ProblemContext,
    build_gamma,
    build_M,
    build_problem,
    factor_scale,
    rhs_factor,
    resolve_correction,
    rhs_assemble,
)
from .fredholm import (
    fm_coefficients,
    certified_index_bound,
    operator_indices,
    operator_rows,
    fredholm_determinant,
    fredholm_truncated,
    l_from_fredholm,
    leibniz_determinant,
    cyclic_expansion,
    cyclic_minor_check,
    inclusion_exclusion_check,
)

__all__ = [
    "TruncatedSeries",
    "MatrixO",
    "charpoly_divfree",
    "determinant",
    "twisted_product",
    "GammaCtx",
    "SubsetData",
    "ProblemContext",
    "build_gamma",
    "build_M",
    "build_problem",
    "factor_scale",
    "rhs_factor",
    "resolve_correction",
    "rhs_assemble",
    "fm_coefficients",
    "certified_index_bound",
    "operator_indices",
    "operator_rows",
    "fredholm_determinant",
    "fredholm_truncated",
    "l_from_fredholm",
    "leibniz_determinant",
    "cyclic_expansion",
    "cyclic_minor_check",
    "inclusion_exclusion_check",
]
