"""
p-density, minimal support and digit sets V(e, e').
"""

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

from ExpSumLab.density.exponent_set import DensityValue, ExponentSet, INFINITY, Vector
from ExpSumLab.density.solutions import (
    Solution,
    enumerate_solutions,
    minimal_irreducible_solutions,
    minimal_solutions,
)
from ExpSumLab.density.support_graph import (
    DigitVector,
    MinMeanCycle,
    build_support_graph,
    min_mean_cycle,
)
from ExpSumLab.utils.constants import DEFAULT_SOLUTION_BUDGET
from ExpSumLab.utils.errors import InfiniteDensityError

logger = logging.getLogger(__name__)


def _cycle_data(exponents: ExponentSet, p: int) -> MinMeanCycle:
    return min_mean_cycle(build_support_graph(exponents, p))


def density(exponents: ExponentSet, p: int) -> DensityValue:
    """
    delta_p(D) = mu* / (p - 1), or `INFINITY` when D is empty or lies in
    a coordinate hyperplane.

    Parameters
    ----------
    exponents : ExponentSet
        The set D.
    p : int
        The prime.

    Returns
    -------
    Fraction or Infinity
        The density in lowest terms.
    """
    if exponents.is_hyperplane_contained():
        return INFINITY
    try:
        mean = _cycle_data(exponents, p).mean
    except InfiniteDensityError:
        return INFINITY
    return mean / (p - 1)


def minimal_support(exponents: ExponentSet, p: int) -> Tuple[Vector, ...]:
    """
    Sigma_p(D), the critical nodes, sorted; N_p(D) is its length.

    Raises
    ------
    InfiniteDensityError
        If the density is infinite.
    """
    return _cycle_data(exponents, p).critical_nodes


@dataclass(frozen=True)
class DigitSet:
    """V(e, e') and its common weight w(e, e')."""

    vectors: Tuple[DigitVector, ...]
    weight: int


def digit_sets(exponents: ExponentSet, p: int) -> Dict[Tuple[Vector, Vector], DigitSet]:
    """
    V(e, e') for every critical edge: the least-weight digit vectors.

    Pairs of support points that are not critical edges are absent from
    the mapping (their V is empty).
    """
    support = build_support_graph(exponents, p)
    out = {}
    for e, e_prime in _cycle_data(exponents, p).critical_edges:
        data = support.graph.get_edge_data(e, e_prime)
        out[(e, e_prime)] = DigitSet(vectors=data["min_digits"], weight=data["weight"])
    return out


def digit_sets_from_solutions(
    exponents: ExponentSet, p: int, max_length: int, budget: int = DEFAULT_SOLUTION_BUDGET
) -> Dict[Tuple[Vector, Vector], DigitSet]:
    """
    V(e, e') read off minimal irreducible solutions of length <= R: the
    digit vector of position 0 of U, filed under (phi_U(-1), phi_U(0)).
    """
    value = density(exponents, p)
    found: Dict[Tuple[Vector, Vector], set] = {}
    for r in range(1, max_length + 1):
        for U in minimal_irreducible_solutions(exponents, p, r, value, budget):
            key = (U.support[-1], U.support[0])
            found.setdefault(key, set()).add(U.digit_vector(0))
    return {
        key: DigitSet(vectors=tuple(sorted(vectors)), weight=sum(min(vectors)))
        for key, vectors in sorted(found.items())
    }


def qualifying_subsets(exponents: ExponentSet, p: int) -> List[Tuple[int, ...]]:
    """
    Non-empty I (0-based) with delta_p(D_I) finite and
    delta_p(D_I) + n - #I = delta_p(D), by size then lexicographically.
    """
    n = exponents.n
    target = density(exponents, p)
    if target is INFINITY:
        return []
    subsets = []
    for size in range(1, n + 1):
        for indices in combinations(range(n), size):
            value = density(exponents.restrict(indices), p)
            if value is not INFINITY and value + (n - size) == target:
                subsets.append(indices)
    return subsets


def solutions_with_support(
    exponents: ExponentSet,
    p: int,
    phi: Sequence[Vector],
    budget: int = DEFAULT_SOLUTION_BUDGET,
) -> List[Solution]:
    """Minimal solutions of length len(phi) whose support is phi."""
    phi = tuple(tuple(e) for e in phi)
    return [
        U
        for U in minimal_solutions(exponents, p, len(phi), budget=budget)
        if U.support == phi
    ]


def digit_bijection_holds(
    exponents: ExponentSet,
    p: int,
    phi: Sequence[Vector],
    budget: int = DEFAULT_SOLUTION_BUDGET,
) -> bool:
    """
    Minimal solutions with support phi correspond one to one to
    prod_i V(phi(-i-1), phi(-i)) through their digits.
    """
    phi = tuple(tuple(e) for e in phi)
    r = len(phi)
    sets = digit_sets(exponents, p)
    factors = []
    for i in range(r):
        key = (phi[(-i - 1) % r], phi[-i % r])
        factors.append(sets[key].vectors if key in sets else ())
    expected = set(product(*factors))
    extracted = [
        tuple(U.digit_vector(i) for i in range(r))
        for U in solutions_with_support(exponents, p, phi, budget)
    ]
    return len(extracted) == len(set(extracted)) and set(extracted) == expected


def subset_density_bound_holds(exponents: ExponentSet, p: int) -> bool:
    """delta_p(D) <= delta_p(D_I) + n - #I for every non-empty I."""
    target = density(exponents, p)
    n = exponents.n
    for size in range(1, n + 1):
        for indices in combinations(range(n), size):
            value = density(exponents.restrict(indices), p)
            if value is not INFINITY and target > value + (n - size):
                return False
    return True


def solutions_meet_weight_bound(
    exponents: ExponentSet, p: int, r: int, budget: int = DEFAULT_SOLUTION_BUDGET
) -> bool:
    """Every solution of length r has density >= delta_p(D)."""
    value = density(exponents, p)
    return all(U.density >= value for U in enumerate_solutions(exponents, p, r, budget))


@dataclass(frozen=True)
class DensityReport:
    """Density, minimum mean and minimal support of (D, p)."""

    exponents: ExponentSet
    p: int
    density: DensityValue
    mean: DensityValue
    support: Tuple[Vector, ...]
    critical_edges: Tuple[Tuple[Vector, Vector], ...]
    digit_sets: Dict[Tuple[Vector, Vector], DigitSet]

    @property
    def support_size(self) -> int:
        return len(self.support)

    def to_dict(self) -> dict:
        return {
            "exponents": [list(d) for d in self.exponents.vectors],
            "p": self.p,
            "density": str(self.density),
            "mean": str(self.mean),
            "support": [list(e) for e in self.support],
            "support_size": self.support_size,
            "digit_sets": [
                {
                    "from": list(e),
                    "to": list(e_prime),
                    "vectors": [list(v) for v in digit_set.vectors],
                    "weight": digit_set.weight,
                }
                for (e, e_prime), digit_set in sorted(self.digit_sets.items())
            ],
        }


def density_report(exponents: ExponentSet, p: int) -> DensityReport:
    """Everything the density subcommand prints."""
    value = density(exponents, p)
    if value is INFINITY:
        return DensityReport(exponents, p, INFINITY, INFINITY, (), (), {})
    cycle_data = _cycle_data(exponents, p)
    return DensityReport(
        exponents=exponents,
        p=p,
        density=value,
        mean=cycle_data.mean,
        support=cycle_data.critical_nodes,
        critical_edges=cycle_data.critical_edges,
        digit_sets=digit_sets(exponents, p),
    )