"""
Exponential sums S_r(f) by exhaustive, chunked point counting and the
exact L-series exp(sum_r S_r T^r / r) over Z[zeta_p].
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ExpSumLab.dwork.series import TruncatedSeries
from ExpSumLab.ff.field import embed, extend_field
from ExpSumLab.ff.points import check_point_budget
from ExpSumLab.ff.polynomial import SparsePoly
from ExpSumLab.ff.tables import PowerTraceTable, build_power_trace_table
from ExpSumLab.hpc.hpc import chunk_bounds, process_jobs
from ExpSumLab.lfun.cyclotomic import CycInt
from ExpSumLab.padic import RamCtx
from ExpSumLab.utils.constants import (
    DEFAULT_CHUNK_SIZE,
    DEFAULT_POINT_BUDGET,
    DEFAULT_THREADS,
)

logger = logging.getLogger(__name__)


def _count_chunk(
    table: PowerTraceTable,
    terms: Tuple[Tuple[Tuple[int, ...], int], ...],
    n: int,
    start: int,
    stop: int,
) -> np.ndarray:
    """Trace histogram of the points numbered [start, stop)."""
    order = table.ctx.order
    index = np.arange(start, stop, dtype=np.int64)
    coordinates = np.empty((stop - start, n), dtype=np.int64)
    for i in range(n):
        index, digit = np.divmod(index, order)
        coordinates[:, i] = digit
    traces = table.trace_values(coordinates, terms)
    return np.bincount(traces, minlength=table.ctx.p).astype(np.int64)


def point_counts(
    f: SparsePoly,
    r: int,
    threads: int = DEFAULT_THREADS,
    budget: int = DEFAULT_POINT_BUDGET,
) -> np.ndarray:
    """
    N_j = #{x in A^n(F_{q^r}) : Tr(f(x)) = j} for j = 0, ..., p-1.

    Parameters
    ----------
    f : SparsePoly
        Polynomial over F_q.
    r : int
        Extension degree.
    threads : int
        Number of workers.
    budget : int
        Largest admissible q^(rn).

    Returns
    -------
    np.ndarray
        The p counts, summing to q^(rn).

    Raises
    ------
    BudgetError
        If q^(rn) exceeds `budget`.
    """
    extension = extend_field(f.field, r)
    total = check_point_budget(extension, f.n, budget)
    coefficients = [embed(extension, c) for _, c in f.terms]
    table = build_power_trace_table(extension, tuple(c.code for c in coefficients))
    terms = tuple((d, log) for (d, _), log in zip(f.terms, table.logs))

    jobs = [
        {"func": _count_chunk, "table": table, "terms": terms, "n": f.n, "start": start, "stop": stop}
        for start, stop in chunk_bounds(total, threads, DEFAULT_CHUNK_SIZE)
    ]
    counts = np.zeros(extension.p, dtype=np.int64)
    for chunk in process_jobs(jobs, task=f"points of A^{f.n}({extension})", num_threads=threads):
        counts += chunk
    if int(counts.sum()) != total:
        raise ArithmeticError(f"trace histogram sums to {counts.sum()}, expected {total}")
    logger.debug("trace histogram over %s: %s", extension, counts.tolist())
    return counts


def exp_sum(
    f: SparsePoly,
    r: int,
    threads: int = DEFAULT_THREADS,
    budget: int = DEFAULT_POINT_BUDGET,
) -> CycInt:
    """S_r(f) = sum_j N_j zeta^j, exactly."""
    return CycInt.from_counts([int(c) for c in point_counts(f, r, threads, budget)])


@dataclass(frozen=True)
class LSeriesExact:
    """
    L(A^n, f; T) = exp(sum_r S_r T^r / r) truncated at k_max.

    Attributes
    ----------
    f : SparsePoly
        The polynomial.
    coeffs : Tuple[CycInt, ...]
        a_0 = 1, a_1, ..., a_{k_max}.
    sums : Tuple[CycInt, ...]
        S_1, ..., S_{k_max}.
    r_max : int
        Largest extension degree counted.
    """

    f: SparsePoly
    coeffs: Tuple[CycInt, ...]
    sums: Tuple[CycInt, ...]
    r_max: int

    @property
    def p(self) -> int:
        return self.f.field.p

    @property
    def m(self) -> int:
        return self.f.field.degree

    @property
    def n(self) -> int:
        return self.f.n

    @property
    def k_max(self) -> int:
        return len(self.coeffs) - 1

    def to_series(self, ram: RamCtx) -> TruncatedSeries:
        """The coefficients embedded in O_m[varpi]."""
        return TruncatedSeries([a.to_padic(ram) for a in self.coeffs], self.k_max, ram.zero())

    def conjugate(self, a: int) -> TruncatedSeries:
        """L(A^n, a f; T): zeta -> zeta^a on every coefficient."""
        return TruncatedSeries([c.conjugate(a) for c in self.coeffs], self.k_max)

    def integer_coefficients(self) -> List[int]:
        """The coefficients as integers (always possible for p = 2)."""
        return [int(a) for a in self.coeffs]


def series_from_sums(p: int, sums: List[CycInt], k_max: int) -> List[CycInt]:
    """
    exp(sum_r S_r T^r / r) by k a_k = sum_{r=1}^k S_r a_{k-r}.

    Raises
    ------
    IntegralityError
        If some k a_k is not divisible by k.
    """
    coeffs = [CycInt.from_int(p, 1)]
    for k in range(1, k_max + 1):
        total = CycInt.from_int(p, 0)
        for r in range(1, k + 1):
            total = total + sums[r - 1] * coeffs[k - r]
        coeffs.append(total.exact_div(k))
    return coeffs


def l_series(
    f: SparsePoly,
    k_max: int,
    r_max: Optional[int] = None,
    threads: int = DEFAULT_THREADS,
    budget: int = DEFAULT_POINT_BUDGET,
) -> LSeriesExact:
    """
    Exact L-series of f up to T^k_max.

    Parameters
    ----------
    f : SparsePoly
        Polynomial over F_q.
    k_max : int
        Largest degree.
    r_max : int, optional
        Largest extension degree allowed; at least `k_max`.
    threads, budget :
        Passed to `point_counts`.

    Raises
    ------
    ValueError
        If `r_max` < `k_max`.
    BudgetError
        If q^(k_max n) exceeds `budget`.
    IntegralityError
        If a coefficient is not in Z[zeta_p].
    """
    r_max = k_max if r_max is None else r_max
    if r_max < k_max:
        raise ValueError(f"coefficients up to T^{k_max} need S_1, ..., S_{k_max}; r_max={r_max}")
    p = f.field.p
    sums = [exp_sum(f, r, threads, budget) for r in range(1, k_max + 1)]
    logger.info("exponential sums of %s: %s", f, sums)
    coeffs = series_from_sums(p, sums, k_max)
    return LSeriesExact(f=f, coeffs=tuple(coeffs), sums=tuple(sums), r_max=k_max)


def max_degree_within_budget(f: SparsePoly, budget: int = DEFAULT_POINT_BUDGET) -> int:
    """Largest r with q^(r n) <= budget (0 if none)."""
    q, r = f.field.order, 0
    while q ** ((r + 1) * f.n) <= budget:
        r += 1
    return r
