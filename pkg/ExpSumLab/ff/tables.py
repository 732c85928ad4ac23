"""
Power/trace tables for fast evaluation of Tr(f(x)) over a whole field.

Every non-zero element of F (|F| = Q) is g^k for the primitive element
g. Tabulating Tr_{F/F_p}(g^k) once turns the absolute trace of a monomial
c*x^d into a table lookup at (log c + sum_i d_i log x_i) mod (Q - 1), and
Tr(f(x)) into a sum of lookups, because the trace is F_p-linear.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from numba import jit

from ExpSumLab.ff.field import FFElement, FieldCtx, primitive_element, trace_to_prime

logger = logging.getLogger(__name__)


@jit(nopython=True)
def _walk_powers(
    mult: np.ndarray,
    trace_vector: np.ndarray,
    p: int,
    length: int,
    target_codes: np.ndarray,
):
    r"""
    Walk g^0, g^1, ..., g^{length-1} and record traces and discrete logs.

    Parameters
    ----------
    mult : np.ndarray
        (degree, degree) matrix of multiplication by g on coefficient
        vectors (column i holds g * x^i).
    trace_vector : np.ndarray
        Tr(x^i) for the basis monomials.
    p : int
        The characteristic.
    length : int
        Number of powers, Q - 1.
    target_codes : np.ndarray
        Codes whose discrete logarithms are wanted.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray]
        Traces of the powers (uint8) and the logs of the targets
        (-1 where a target was not reached).
    """
    degree = mult.shape[0]
    traces = np.empty(length, dtype=np.uint8)
    logs = np.full(target_codes.shape[0], -1, dtype=np.int64)
    vector = np.zeros(degree, dtype=np.int64)
    vector[0] = 1
    scratch = np.zeros(degree, dtype=np.int64)

    for k in range(length):
        trace = 0
        code = 0
        scale = 1
        for i in range(degree):
            trace += trace_vector[i] * vector[i]
            code += vector[i] * scale
            scale *= p
        traces[k] = trace % p
        for j in range(target_codes.shape[0]):
            if logs[j] < 0 and target_codes[j] == code:
                logs[j] = k
        for i in range(degree):
            total = 0
            for j in range(degree):
                total += mult[i, j] * vector[j]
            scratch[i] = total % p
        for i in range(degree):
            vector[i] = scratch[i]

    return traces, logs


@dataclass(frozen=True, eq=False)
class PowerTraceTable:
    """
    Traces of the powers of a primitive element, plus requested logs.

    Attributes
    ----------
    ctx : FieldCtx
        The field F.
    generator : FFElement
        The primitive element g.
    traces : np.ndarray
        traces[k] = Tr_{F/F_p}(g^k), 0 <= k < Q - 1.
    logs : Tuple[int, ...]
        Discrete logarithms of the requested elements, in request order.
    """

    ctx: FieldCtx
    generator: FFElement
    traces: np.ndarray
    logs: Tuple[int, ...]

    @property
    def group_order(self) -> int:
        return self.ctx.order - 1

    def trace_values(
        self,
        coordinates: np.ndarray,
        terms: Sequence[Tuple[Tuple[int, ...], int]],
    ) -> np.ndarray:
        """
        Absolute traces Tr(f(x)) for a batch of points.

        Parameters
        ----------
        coordinates : np.ndarray
            (batch, n) integer array; entry 0 is the zero element and
            entry z >= 1 is g^(z-1).
        terms : Sequence[Tuple[Tuple[int, ...], int]]
            Pairs (exponent d, log of the coefficient c_d).

        Returns
        -------
        np.ndarray
            Residues in [0, p), one per point.
        """
        p = self.ctx.p
        total = np.zeros(coordinates.shape[0], dtype=np.int64)
        for exponent, log_coefficient in terms:
            mask = np.ones(coordinates.shape[0], dtype=bool)
            index = np.full(coordinates.shape[0], log_coefficient, dtype=np.int64)
            for i, d_i in enumerate(exponent):
                if d_i == 0:
                    continue
                z = coordinates[:, i]
                mask &= z != 0
                index += d_i * (z - 1)
            index %= self.group_order
            total += np.where(mask, self.traces[index], 0)
        return total % p


def multiplication_matrix(element: FFElement) -> np.ndarray:
    """Matrix of a -> element * a on coefficient vectors."""
    ctx = element.ctx
    columns = []
    for i in range(ctx.degree):
        basis = ctx.element([0] * i + [1])
        columns.append((element * basis).coeffs)
    return np.array(columns, dtype=np.int64).T.copy()


@lru_cache(maxsize=32)
def build_power_trace_table(ctx: FieldCtx, targets: Tuple[int, ...] = ()) -> PowerTraceTable:
    """
    Tabulate Tr(g^k) for the primitive element g of `ctx`.

    Parameters
    ----------
    ctx : FieldCtx
        The field.
    targets : Tuple[int, ...]
        Codes of non-zero elements whose discrete logs are needed.

    Returns
    -------
    PowerTraceTable
        The table; ``logs[i]`` is the logarithm of ``targets[i]``.
    """
    if any(code == 0 for code in targets):
        raise ValueError("zero has no discrete logarithm")
    generator = primitive_element(ctx)
    mult = multiplication_matrix(generator)
    trace_vector = np.array(
        [trace_to_prime(ctx, ctx.element([0] * i + [1])) for i in range(ctx.degree)],
        dtype=np.int64,
    )
    traces, logs = _walk_powers(
        mult, trace_vector, ctx.p, ctx.order - 1, np.array(targets, dtype=np.int64)
    )
    if np.any(logs < 0):
        raise ArithmeticError(f"{generator!r} is not primitive in {ctx}")
    logger.debug("power/trace table of %s built (%d entries)", ctx, ctx.order - 1)
    return PowerTraceTable(
        ctx=ctx, generator=generator, traces=traces, logs=tuple(int(v) for v in logs)
    )


def coordinate_codes(table: PowerTraceTable, element: FFElement) -> int:
    """Coordinate encoding used by `trace_values`: 0 or 1 + log."""
    if element.is_zero():
        return 0
    power = table.ctx.one()
    for k in range(table.group_order):
        if power == element:
            return k + 1
        power = power * table.generator
    raise ValueError(f"{element!r} is not in {table.ctx}")
