"""
ExpSumLab Density Module

Solutions of the modular equations attached to an exponent set D, their
supports and digits, the p-density delta_p(D) as an exact minimum cycle
mean, the minimal support and the digit sets V(e, e').
"""

from .exponent_set import ExponentSet, Infinity, INFINITY, DensityValue
from .solutions import (
    Solution,
    p_weight,
    digits,
    reduce_mod,
    shift,
    support_map,
    is_irreducible,
    glue,
    solution_from_digits,
    enumerate_solutions,
    s_min,
    minimal_solutions,
    minimal_irreducible_solutions,
    density_bruteforce,
)
from .support_graph import (
    SupportGraph,
    MinMeanCycle,
    build_support_graph,
    min_mean_cycle,
    closed_walk_minimum,
    support_cycles,
)
from .density import (
    DigitSet,
    DensityReport,
    density,
    minimal_support,
    digit_sets,
    digit_sets_from_solutions,
    qualifying_subsets,
    solutions_with_support,
    digit_bijection_holds,
    subset_density_bound_holds,
    solutions_meet_weight_bound,
    density_report,
)

__all__ = [
    "ExponentSet",
    "Infinity",
    "INFINITY",
    "DensityValue",
    "Solution",
    "p_weight",
    "digits",
    "reduce_mod",
    "shift",
    "support_map",
    "is_irreducible",
    "glue",
    "solution_from_digits",
    "enumerate_solutions",
    "s_min",
    "minimal_solutions",
    "minimal_irreducible_solutions",
    "density_bruteforce",
    "SupportGraph",
    "MinMeanCycle",
    "build_support_graph",
    "min_mean_cycle",
    "closed_walk_minimum",
    "support_cycles",
    "DigitSet",
    "DensityReport",
    "density",
    "minimal_support",
    "digit_sets",
    "digit_sets_from_solutions",
    "qualifying_subsets",
    "solutions_with_support",
    "digit_bijection_holds",
    "subset_density_bound_holds",
    "solutions_meet_weight_bound",
    "density_report",
]
