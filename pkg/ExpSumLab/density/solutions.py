"""
Solutions of the modular equations sum_D u_d d = 0 mod p^r - 1.

A solution of length r is a tuple U = (u_d)_{d in D} with 0 <= u_d <= p^r - 1,
sum_D u_d d = 0 mod p^r - 1 componentwise, and every coordinate of
sum_D u_d d positive. Its p-weight is the sum of all base-p digits.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np

from ExpSumLab.density.exponent_set import DensityValue, ExponentSet, INFINITY, Vector
from ExpSumLab.utils.constants import DEFAULT_SOLUTION_BUDGET
from ExpSumLab.utils.errors import BudgetError, NoSolutionError

logger = logging.getLogger(__name__)


def p_weight(n: int, p: int) -> int:
    """s_p(n), the sum of the base-p digits of n."""
    total = 0
    while n:
        n, digit = divmod(n, p)
        total += digit
    return total


def digits(n: int, p: int, r: int) -> Tuple[int, ...]:
    """The r lowest base-p digits of n, least significant first."""
    out = []
    for _ in range(r):
        n, digit = divmod(n, p)
        out.append(digit)
    return tuple(out)


def reduce_mod(u: int, p: int, r: int) -> int:
    """
    0 for u = 0, else the representative of u mod p^r - 1 in [1, p^r - 1].

    The p-weight never increases: s_p(u) >= s_p(reduce_mod(u, p, r)).
    """
    if u < 0:
        raise ValueError(f"u must be non-negative, got {u}")
    if u == 0:
        return 0
    modulus = p**r - 1
    residue = u % modulus
    return residue if residue else modulus


def shift_value(u: int, p: int, r: int) -> int:
    """delta_r(u): the residue of p*u mod p^r - 1, fixing 0 and p^r - 1."""
    modulus = p**r - 1
    if u == modulus:
        return u
    return (p * u) % modulus


@dataclass(frozen=True)
class Solution:
    """
    An element U of E_{D,p}(r).

    Attributes
    ----------
    exponents : ExponentSet
        The set D.
    p : int
        The prime.
    r : int
        The length.
    values : Tuple[int, ...]
        u_d for d in D, in the order of ``exponents.vectors``.
    """

    exponents: ExponentSet
    p: int
    r: int
    values: Tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"solution length must be positive, got {self.r}")
        if len(self.values) != len(self.exponents):
            raise ValueError("one value per exponent vector is needed")
        top = self.p**self.r - 1
        if any(not 0 <= u <= top for u in self.values):
            raise ValueError(f"values must lie in [0, {top}]")
        total = self.total()
        if any(t % top for t in total) or any(t <= 0 for t in total):
            raise ValueError(f"{self.values} is not a solution of length {self.r}")

    def total(self) -> Vector:
        """sum_D u_d d."""
        n = self.exponents.n
        return tuple(
            sum(u * d[i] for u, d in zip(self.values, self.exponents.vectors)) for i in range(n)
        )

    @property
    def digits(self) -> Tuple[Tuple[int, ...], ...]:
        """(#D) x r digit array, least significant digit first."""
        return tuple(digits(u, self.p, self.r) for u in self.values)

    def digit_vector(self, position: int) -> Tuple[int, ...]:
        """(digit_position(u_d))_{d in D}."""
        return tuple(row[position % self.r] for row in self.digits)

    @property
    def weight(self) -> int:
        return sum(p_weight(u, self.p) for u in self.values)

    @property
    def density(self) -> Fraction:
        return Fraction(self.weight, (self.p - 1) * self.r)

    def shift(self) -> "Solution":
        """delta_r applied to every u_d: the digits rotate by one place."""
        return Solution(
            self.exponents,
            self.p,
            self.r,
            tuple(shift_value(u, self.p, self.r) for u in self.values),
        )

    @cached_property
    def support(self) -> Tuple[Vector, ...]:
        """[phi_U(0), ..., phi_U(r-1)], phi_U(k) = (sum_D delta^k(u_d) d)/(p^r - 1)."""
        top = self.p**self.r - 1
        out = []
        current = self
        for _ in range(self.r):
            out.append(tuple(t // top for t in current.total()))
            current = current.shift()
        return tuple(out)

    def is_irreducible(self) -> bool:
        """True iff phi_U is injective."""
        return len(set(self.support)) == len(self.support)

    def __str__(self) -> str:
        return f"U{self.values} (r={self.r}, weight={self.weight})"


def shift(U: Solution) -> Solution:
    return U.shift()


def support_map(U: Solution) -> List[Vector]:
    return list(U.support)


def is_irreducible(U: Solution) -> bool:
    return U.is_irreducible()


def glue(U: Solution, U_prime: Solution) -> Solution:
    """
    The solution v_d = p^r u'_d + u_d of length r + r'.

    Raises
    ------
    ValueError
        If phi_U(0) differs from phi_U'(0), or the sets or primes differ.
    """
    if U.exponents != U_prime.exponents or U.p != U_prime.p:
        raise ValueError("solutions of different problems cannot be glued")
    if U.support[0] != U_prime.support[0]:
        raise ValueError(
            f"supports differ at 0: {U.support[0]} != {U_prime.support[0]}"
        )
    scale = U.p**U.r
    values = tuple(scale * b + a for a, b in zip(U.values, U_prime.values))
    return Solution(U.exponents, U.p, U.r + U_prime.r, values)


def solution_from_digits(
    exponents: ExponentSet, p: int, digit_vectors: List[Tuple[int, ...]]
) -> Solution:
    """Solution whose digit at position i is ``digit_vectors[i]`` (one entry per d)."""
    r = len(digit_vectors)
    values = tuple(
        sum(vector[j] * p**i for i, vector in enumerate(digit_vectors))
        for j in range(len(exponents))
    )
    return Solution(exponents, p, r, values)


def solution_space_size(exponents: ExponentSet, p: int, r: int) -> int:
    return (p**r) ** len(exponents)


def _solution_mask(exponents: ExponentSet, p: int, r: int, budget: int):
    size = solution_space_size(exponents, p, r)
    if size > budget:
        raise BudgetError(f"E_(D,{p})({r}) scan", size, budget)
    top = p**r - 1
    k = len(exponents)
    grid = np.indices((top + 1,) * k).reshape(k, -1).T.astype(np.int64)
    matrix = np.array(exponents.vectors, dtype=np.int64).reshape(k, exponents.n)
    totals = grid @ matrix
    mask = np.all(totals % top == 0, axis=1) & np.all(totals > 0, axis=1)
    return grid, mask


def enumerate_solutions(
    exponents: ExponentSet, p: int, r: int, budget: int = DEFAULT_SOLUTION_BUDGET
) -> List[Solution]:
    """
    All elements of E_{D,p}(r) in lexicographic order of (u_d).

    Parameters
    ----------
    exponents : ExponentSet
        The set D.
    p : int
        The prime.
    r : int
        The length, at least 1.
    budget : int
        Largest admissible (p^r)^{#D}.

    Returns
    -------
    List[Solution]
        The solutions; empty when D lies in a coordinate hyperplane.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if exponents.is_hyperplane_contained():
        return []
    grid, mask = _solution_mask(exponents, p, r, budget)
    return [
        Solution(exponents, p, r, tuple(int(u) for u in row)) for row in grid[mask]
    ]


def _weights(values: np.ndarray, p: int) -> np.ndarray:
    weights = np.zeros(values.shape[0], dtype=np.int64)
    current = values.copy()
    while np.any(current):
        weights += (current % p).sum(axis=1)
        current //= p
    return weights


def s_min(
    exponents: ExponentSet,
    p: int,
    r: int,
    method: str = "auto",
    budget: int = DEFAULT_SOLUTION_BUDGET,
) -> int:
    """
    s_{D,p}(r), the least p-weight of a solution of length r.

    Parameters
    ----------
    exponents : ExponentSet
        The set D.
    p : int
        The prime.
    r : int
        The length.
    method : {"auto", "enumerate", "graph"}
        "enumerate" scans E_{D,p}(r); "graph" takes the least weight of a
        closed walk of length r in the support graph. "auto" scans when
        the scan fits the budget.
    budget : int
        Scan budget.

    Raises
    ------
    NoSolutionError
        If E_{D,p}(r) is empty.
    """
    if method not in ("auto", "enumerate", "graph"):
        raise ValueError(f"unknown method {method!r}")
    if exponents.is_hyperplane_contained():
        raise NoSolutionError(f"E_(D,{p})({r}) is empty: {exponents} lies in a hyperplane")
    if method == "auto":
        method = "enumerate" if solution_space_size(exponents, p, r) <= budget else "graph"
    if method == "graph":
        from ExpSumLab.density.support_graph import build_support_graph, closed_walk_minimum

        value = closed_walk_minimum(build_support_graph(exponents, p), r)
        if value is None:
            raise NoSolutionError(f"E_(D,{p})({r}) is empty")
        return value
    grid, mask = _solution_mask(exponents, p, r, budget)
    if not mask.any():
        raise NoSolutionError(f"E_(D,{p})({r}) is empty")
    return int(_weights(grid[mask], p).min())


def minimal_solutions(
    exponents: ExponentSet,
    p: int,
    r: int,
    density: Optional[DensityValue] = None,
    budget: int = DEFAULT_SOLUTION_BUDGET,
) -> List[Solution]:
    """Solutions of length r whose density equals delta_p(D)."""
    if density is None:
        from ExpSumLab.density.density import density as compute_density

        density = compute_density(exponents, p)
    if density is INFINITY:
        return []
    target = density * (p - 1) * r
    return [U for U in enumerate_solutions(exponents, p, r, budget) if U.weight == target]


def minimal_irreducible_solutions(
    exponents: ExponentSet,
    p: int,
    r: int,
    density: Optional[DensityValue] = None,
    budget: int = DEFAULT_SOLUTION_BUDGET,
) -> List[Solution]:
    """MI_{D,p}(r): minimal solutions with injective support."""
    return [U for U in minimal_solutions(exponents, p, r, density, budget) if U.is_irreducible()]


def density_bruteforce(
    exponents: ExponentSet, p: int, max_length: int, budget: int = DEFAULT_SOLUTION_BUDGET
) -> DensityValue:
    """
    min_{r <= R} s_{D,p}(r) / (r (p - 1)), an upper bound for the density
    reached as soon as R covers a critical cycle.
    """
    if exponents.is_hyperplane_contained():
        return INFINITY
    best = None
    for r in range(1, max_length + 1):
        try:
            value = Fraction(s_min(exponents, p, r, budget=budget), r * (p - 1))
        except NoSolutionError:
            continue
        if best is None or value < best:
            best = value
    return INFINITY if best is None else best
