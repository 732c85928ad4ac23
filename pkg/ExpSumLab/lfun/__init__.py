"""
ExpSumLab L-function Module

Exact Z[zeta_p] arithmetic, exponential sums by point counting, the exact
L-series of f over affine space, and the zeta numerator of the
Artin-Schreier curve y^p - y = f(x) with its Galois norm.
"""

from .cyclotomic import CycInt, conjugate
from .exponential_sum import (
    LSeriesExact,
    point_counts,
    exp_sum,
    series_from_sums,
    l_series,
    max_degree_within_budget,
)
from .artin_schreier import (
    CurveNumerator,
    CharacterProductReport,
    curve_genus,
    curve_point_count,
    artin_schreier_numerator,
    conjugate_pi,
    norm_poly,
    character_product_check,
)

__all__ = [
    "CycInt",
    "conjugate",
    "LSeriesExact",
    "point_counts",
    "exp_sum",
    "series_from_sums",
    "l_series",
    "max_degree_within_budget",
    "CurveNumerator",
    "CharacterProductReport",
    "curve_genus",
    "curve_point_count",
    "artin_schreier_numerator",
    "conjugate_pi",
    "norm_poly",
    "character_product_check",
]
