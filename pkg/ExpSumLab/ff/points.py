"""
Streaming enumeration of the rational points of affine space.

Point number i of A^n(F) has coordinates given by the base-|F| digits
of i, first coordinate least significant, each digit read as an element
code. Ranges of point numbers are the unit of data-parallel work.
"""

from typing import Iterator, List, Optional, Tuple

from ExpSumLab.ff.field import FFElement, FieldCtx
from ExpSumLab.hpc.hpc import chunk_bounds
from ExpSumLab.utils.constants import DEFAULT_POINT_BUDGET
from ExpSumLab.utils.errors import BudgetError


def number_of_points(ctx: FieldCtx, n: int) -> int:
    return ctx.order**n


def check_point_budget(ctx: FieldCtx, n: int, budget: int = DEFAULT_POINT_BUDGET) -> int:
    """Return |A^n(F)|, raising `BudgetError` if it exceeds `budget`."""
    total = number_of_points(ctx, n)
    if total > budget:
        raise BudgetError(f"A^{n}({ctx})", total, budget)
    return total


def enumerate_points(
    ctx: FieldCtx,
    n: int,
    start: int = 0,
    stop: Optional[int] = None,
    budget: int = DEFAULT_POINT_BUDGET,
) -> Iterator[Tuple[FFElement, ...]]:
    """
    Yield the points of A^n(F) with numbers in [start, stop).

    Parameters
    ----------
    ctx : FieldCtx
        The field F.
    n : int
        The dimension.
    start : int, default=0
        First point number.
    stop : int, optional
        One past the last point number; defaults to |F|^n.
    budget : int
        Maximal number of points of the whole space.

    Yields
    ------
    Tuple[FFElement, ...]
        The coordinates of each point, in increasing point number.
    """
    total = check_point_budget(ctx, n, budget)
    stop = total if stop is None else min(stop, total)
    order = ctx.order
    elements = [ctx.from_code(code) for code in range(order)]
    for index in range(start, stop):
        coordinates = []
        for _ in range(n):
            index, digit = divmod(index, order)
            coordinates.append(elements[digit])
        yield tuple(coordinates)


def point_chunks(
    ctx: FieldCtx, n: int, num_chunks: int, budget: int = DEFAULT_POINT_BUDGET
) -> List[Tuple[int, int]]:
    """
    Split the point numbers of A^n(F) into consecutive ranges.

    Parameters
    ----------
    ctx : FieldCtx
        The field F.
    n : int
        The dimension.
    num_chunks : int
        Desired number of ranges.
    budget : int
        Maximal number of points.

    Returns
    -------
    List[Tuple[int, int]]
        Half-open ranges whose union is [0, |F|^n).
    """
    total = check_point_budget(ctx, n, budget)
    return chunk_bounds(total, num_chunks)
