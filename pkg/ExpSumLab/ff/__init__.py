"""
ExpSumLab Finite Field Module

The tower F_p ⊂ F_q ⊂ F_{q^r}: deterministic field construction,
embeddings, traces, sparse polynomials, point enumeration and the
power/trace tables behind fast exponential sums.
"""

from .prime_poly import (
    is_prime,
    is_irreducible,
    least_irreducible,
    prime_factors,
)
from .field import (
    FieldCtx,
    FFElement,
    make_field,
    extend_field,
    primitive_element,
    embed,
    trace_to_prime,
    relative_trace,
    restrict_to_base,
    parse_element,
)
from .polynomial import SparsePoly, eval_poly, univariate
from .points import (
    enumerate_points,
    point_chunks,
    number_of_points,
    check_point_budget,
)
from .tables import (
    PowerTraceTable,
    build_power_trace_table,
    coordinate_codes,
)

__all__ = [
    "is_prime",
    "is_irreducible",
    "least_irreducible",
    "prime_factors",
    "FieldCtx",
    "FFElement",
    "make_field",
    "extend_field",
    "primitive_element",
    "embed",
    "trace_to_prime",
    "relative_trace",
    "restrict_to_base",
    "parse_element",
    "SparsePoly",
    "eval_poly",
    "univariate",
    "enumerate_points",
    "point_chunks",
    "number_of_points",
    "check_point_budget",
    "PowerTraceTable",
    "build_power_trace_table",
    "coordinate_codes",
]
