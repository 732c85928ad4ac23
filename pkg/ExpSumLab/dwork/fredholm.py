"""
Dwork's trace formula with truncated Fredholm determinants.

For J ⊆ {1..n}, A_J is the matrix (f^(m)_{q i - j}) on the indices i in
N^n whose support is exactly J, where

    F^(m)(X) = prod_{d in D} theta_m(gamma_d X^d) = sum_k f^(m)_k X^k,
    theta_m(X) = exp(pi X - pi X^q) = sum_u lambda_u X^u.

With g_J(T) = det(I - q^(n-#J) T A_J) and g_{} = 1 - q^n T,

    L(A^n, f; T) = prod_J [prod_{i=0}^{#J} g_J(q^i T)^((-1)^i C(#J, i))]^((-1)^(#J+1)).

Entries of index above B decay, so truncating every box at the bound of
`certified_index_bound` leaves each T^k coefficient exact modulo
varpi^window.
"""

import logging
from fractions import Fraction
from itertools import combinations, permutations, product
from math import ceil, comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ExpSumLab.dwork.manin import GammaCtx, ProblemContext
from ExpSumLab.dwork.series import TruncatedSeries
from ExpSumLab.padic import PadicScalar, RamCtx, lambda_coeffs
from ExpSumLab.utils.constants import DEFAULT_MATRIX_BUDGET
from ExpSumLab.utils.errors import BudgetError, PrecisionError

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def fm_coefficients(
    gamma: GammaCtx, ram: RamCtx, bounds: Sequence[int], level: Optional[int] = None
) -> Dict[Vector, PadicScalar]:
    """
    Coefficients f_k of prod_d theta(gamma_d X^d) for 0 <= k <= bounds.

    Parameters
    ----------
    gamma : GammaCtx
        Exponents and Teichmüller lifts.
    ram : RamCtx
        The ring of the coefficients.
    bounds : Sequence[int]
        Largest index per coordinate.
    level : int, optional
        theta_level(X) = exp(pi X - pi X^(p^level)); defaults to m
        (level 1 gives Dwork's F).

    Returns
    -------
    Dict[Vector, PadicScalar]
        Non-zero coefficients only.
    """
    level = gamma.m if level is None else level
    bounds = tuple(bounds)
    table: Dict[Vector, PadicScalar] = {tuple([0] * len(bounds)): ram.one()}
    for d in gamma.exponents.vectors:
        u_max = min(b // c for b, c in zip(bounds, d) if c)
        lambdas = [value.to_padic(ram) for value in lambda_coeffs(ram.p, level, u_max)]
        powers = [ram.one()]
        lift = ram.scalar(gamma.gamma[d])
        for _ in range(u_max):
            powers.append(powers[-1] * lift)
        terms = [
            (u, lambdas[u] * powers[u]) for u in range(u_max + 1) if not lambdas[u].is_zero()
        ]
        updated: Dict[Vector, PadicScalar] = {}
        for k, value in table.items():
            for u, term in terms:
                index = tuple(a + u * c for a, c in zip(k, d))
                if any(i > b for i, b in zip(index, bounds)):
                    break
                product_term = value * term
                updated[index] = updated[index] + product_term if index in updated else product_term
        table = {k: value for k, value in updated.items() if not value.is_zero()}
    return table


def certified_index_bound(ctx: ProblemContext, window: Optional[int] = None) -> Tuple[int, ...]:
    """
    Per-coordinate bound B with every omitted contribution divisible by
    varpi^window.

    v_pi(lambda_u) >= u (p-1)^2 / p^(m+1), so a cycle through an index with
    i_c > B_c carries v_pi >= (q-1) B_c (p-1)^2 / (p^(m+1) max_D d_c).

    This decay bound is coarser than one read off the digit weights of
    the solutions: B is larger than needed, never smaller, so callers
    pay for extra indices but lose no precision.

    Parameters
    ----------
    ctx : ProblemContext
        The problem.
    window : int, optional
        Target varpi-adic precision; defaults to the threshold at k_max.
    """
    window = ctx.threshold(ctx.k_max) if window is None else window
    window_pi = Fraction(window, ctx.v)
    decay = Fraction((ctx.q - 1) * (ctx.p - 1) ** 2, ctx.p ** (ctx.m + 1))
    bounds = []
    for c in range(ctx.n):
        largest = max(d[c] for d in ctx.exponents.vectors)
        bounds.append(max(1, ceil(window_pi * largest / decay)))
    return tuple(bounds)


def _resolve_bound(ctx: ProblemContext, index_bound, window) -> Tuple[int, ...]:
    certified = certified_index_bound(ctx, window)
    if index_bound is None:
        return certified
    if isinstance(index_bound, int):
        index_bound = (index_bound,) * ctx.n
    index_bound = tuple(index_bound)
    if len(index_bound) != ctx.n or any(b < c for b, c in zip(index_bound, certified)):
        raise PrecisionError(
            f"index bound {index_bound} is below the admissible bound {certified}"
        )
    return index_bound


def operator_indices(
    J: Sequence[int], bounds: Sequence[int], n: int, exact_support: bool = True
) -> List[Vector]:
    """
    Indices i with 1 <= i_c <= B_c on J; outside J either 0
    (`exact_support`) or 0 <= i_c <= B_c.
    """
    J = set(J)
    ranges = []
    for c in range(n):
        if c in J:
            ranges.append(range(1, bounds[c] + 1))
        elif exact_support:
            ranges.append(range(0, 1))
        else:
            ranges.append(range(0, bounds[c] + 1))
    return [tuple(i) for i in product(*ranges)]


def operator_rows(
    ctx: ProblemContext, indices: Sequence[Vector], table: Dict[Vector, PadicScalar]
) -> List[List[PadicScalar]]:
    """(f^(m)_{q i - j}) for i, j in `indices`."""
    zero = ctx.ram.zero()
    q = ctx.q
    rows = []
    for i in indices:
        row = []
        for j in indices:
            k = tuple(q * a - b for a, b in zip(i, j))
            row.append(table.get(k, zero) if min(k) >= 0 else zero)
        rows.append(row)
    return rows


def fredholm_determinant(rows: List[List], precision: int, one, zero) -> TruncatedSeries:
    """
    det(I - T A) truncated at T^precision by elimination over series.

    Every pivot keeps constant term 1, so each step divides by a unit.
    """
    size = len(rows)
    matrix: List[List[Optional[TruncatedSeries]]] = []
    for i, row in enumerate(rows):
        current = []
        for j, a in enumerate(row):
            if i == j:
                current.append(TruncatedSeries([one, -a], precision, zero))
            elif a.is_zero():
                current.append(None)
            else:
                current.append(TruncatedSeries([zero, -a], precision, zero))
        matrix.append(current)

    det = TruncatedSeries([one], precision, zero)
    for k in range(size):
        pivot = matrix[k][k]
        det = det * pivot
        inverse = pivot.inverse()
        for i in range(k + 1, size):
            if matrix[i][k] is None:
                continue
            factor = matrix[i][k] * inverse
            for j in range(k + 1, size):
                if matrix[k][j] is None:
                    continue
                update = factor * matrix[k][j]
                matrix[i][j] = -update if matrix[i][j] is None else matrix[i][j] - update
    return det


def _degenerate(ctx: ProblemContext, J: Sequence[int]) -> bool:
    # A coordinate of J untouched by D_J makes every cycle vanish.
    return bool(J) and ctx.exponents.restrict(J).is_hyperplane_contained()


def fredholm_truncated(
    ctx: ProblemContext,
    J: Sequence[int],
    index_bound=None,
    k_max: Optional[int] = None,
    window: Optional[int] = None,
    matrix_budget: int = DEFAULT_MATRIX_BUDGET,
    table: Optional[Dict[Vector, PadicScalar]] = None,
) -> TruncatedSeries:
    """
    det(I - T A_J) on the truncated index box.

    Parameters
    ----------
    ctx : ProblemContext
        The problem.
    J : Sequence[int]
        0-based coordinates.
    index_bound : int or Sequence[int], optional
        Box size; must not be below `certified_index_bound`.
    k_max : int, optional
        Series precision, defaults to ``ctx.k_max``.
    window : int, optional
        varpi-adic target of the certificate.
    matrix_budget : int
        Largest admissible matrix size.
    table : Dict, optional
        Precomputed `fm_coefficients` covering q times the bound.

    Raises
    ------
    PrecisionError
        If `index_bound` is below the certified bound.
    BudgetError
        If the box holds more than `matrix_budget` indices.
    """
    k_max = ctx.k_max if k_max is None else k_max
    ram = ctx.ram
    J = tuple(sorted(J))
    bounds = _resolve_bound(ctx, index_bound, window)
    if _degenerate(ctx, J):
        return TruncatedSeries([ram.one()], k_max, ram.zero())
    indices = operator_indices(J, bounds, ctx.n)
    if len(indices) > matrix_budget:
        raise BudgetError(f"Fredholm matrix for J={J}", len(indices), matrix_budget)
    if table is None:
        table = fm_coefficients(ctx.gamma, ram, [ctx.q * b for b in bounds])
    rows = operator_rows(ctx, indices, table)
    logger.debug("Fredholm determinant for J=%s on %d indices", J, len(indices))
    return fredholm_determinant(rows, k_max, ram.one(), ram.zero())


def l_from_fredholm(
    ctx: ProblemContext,
    index_bound=None,
    window: Optional[int] = None,
    matrix_budget: int = DEFAULT_MATRIX_BUDGET,
) -> TruncatedSeries:
    """
    L(A^n, f; T) truncated at k_max from the determinants g_J.

    Exact modulo varpi^window in every coefficient (window defaults to the
    congruence threshold at k_max).
    """
    ram = ctx.ram
    k_max = ctx.k_max
    bounds = _resolve_bound(ctx, index_bound, window)
    table = fm_coefficients(ctx.gamma, ram, [ctx.q * b for b in bounds])
    total = TruncatedSeries([ram.one()], k_max, ram.zero())
    for size in range(ctx.n + 1):
        for J in combinations(range(ctx.n), size):
            if J:
                g = fredholm_truncated(
                    ctx, J, bounds, k_max, window, matrix_budget, table
                ).scale(ram.scalar(ctx.q ** (ctx.n - size)))
            else:
                g = TruncatedSeries([ram.one(), ram.scalar(-(ctx.q**ctx.n))], k_max)
            factor = TruncatedSeries([ram.one()], k_max, ram.zero())
            for i in range(size + 1):
                exponent = (-1) ** i * comb(size, i)
                factor = factor * g.scale(ram.scalar(ctx.q**i)).power(exponent)
            total = total * factor.power((-1) ** (size + 1))
    return total


def _set_partitions(items: List) -> Iterator[List[List]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for k in range(len(partition)):
            yield partition[:k] + [[first] + partition[k]] + partition[k + 1:]


def _permutation_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, current = 0, start
        while current not in seen:
            seen.add(current)
            current = perm[current]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_determinant(rows: List[List], one, zero):
    """sum over permutations of sgn(sigma) prod a_{i, sigma(i)}."""
    size = len(rows)
    total = zero
    for perm in permutations(range(size)):
        term = one
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term if _permutation_sign(perm) > 0 else total - term
    return total


def cyclic_expansion(rows: List[List], one, zero):
    """
    sum over set partitions of the indices into blocks, and cyclic orders
    of every block, of prod_blocks (-1)^(l-1) a_{i_1 i_2} ... a_{i_l i_1}.
    """
    total = zero
    for partition in _set_partitions(list(range(len(rows)))):
        term = one
        for block in partition:
            head, tail = block[0], block[1:]
            block_sum = zero
            for order in permutations(tail):
                cycle = (head,) + order
                value = one
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    value = value * rows[a][b]
                block_sum = block_sum + value
            term = term * (block_sum if len(block) % 2 == 1 else -block_sum)
        total = total + term
    return total


def cyclic_minor_check(ctx: ProblemContext, F: Sequence[Vector]) -> bool:
    """
    det((f^(m)_{q i - j})_{i, j in F}) equals its expansion over cyclic
    structures.
    """
    F = [tuple(i) for i in F]
    if len(set(F)) != len(F):
        raise ValueError("indices of a minor must be distinct")
    ram = ctx.ram
    bounds = [ctx.q * max((i[c] for i in F), default=0) for c in range(ctx.n)]
    table = fm_coefficients(ctx.gamma, ram, bounds)
    rows = operator_rows(ctx, F, table)
    left = leibniz_determinant(rows, ram.one(), ram.zero())
    right = cyclic_expansion(rows, ram.one(), ram.zero())
    if left != right:
        logger.warning("minor on %s: Leibniz %r, cyclic %r", F, left, right)
    return left == right


def inclusion_exclusion_check(
    ctx: ProblemContext,
    I: Sequence[int],
    index_bound=None,
    window: Optional[int] = None,
    matrix_budget: int = DEFAULT_MATRIX_BUDGET,
) -> bool:
    """
    det(I - T A^I) = prod_{J ⊇ I} det(I - T A_J), A^I on the indices whose
    support contains I.
    """
    ram = ctx.ram
    I = tuple(sorted(I))
    bounds = _resolve_bound(ctx, index_bound, window)
    indices = sorted(
        operator_indices(I, bounds, ctx.n, exact_support=False),
        key=lambda i: (sum(1 for a in i if a), i),
    )
    if len(indices) > matrix_budget:
        raise BudgetError(f"Fredholm matrix for support containing {I}", len(indices), matrix_budget)
    table = fm_coefficients(ctx.gamma, ram, [ctx.q * b for b in bounds])
    whole = fredholm_determinant(
        operator_rows(ctx, indices, table), ctx.k_max, ram.one(), ram.zero()
    )
    parts = TruncatedSeries([ram.one()], ctx.k_max, ram.zero())
    others = [c for c in range(ctx.n) if c not in I]
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            J = tuple(sorted(I + extra))
            parts = parts * fredholm_truncated(
                ctx, J, bounds, ctx.k_max, window, matrix_budget, table
            )
    return whole == parts
