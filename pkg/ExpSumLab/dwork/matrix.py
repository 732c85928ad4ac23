"""
Labelled square matrices over exact rings and their division-free
characteristic polynomials.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ExpSumLab.dwork.series import TruncatedSeries


@dataclass(frozen=True, eq=False)
class MatrixO:
    """
    Square matrix with entries in an exact ring, rows and columns labelled
    by the same distinct points.

    Attributes
    ----------
    labels : Tuple
        Row/column labels (support points), in order.
    entries : np.ndarray
        (N, N) object array.
    """

    labels: Tuple
    entries: np.ndarray

    def __post_init__(self):
        size = len(self.labels)
        if len(set(self.labels)) != size:
            raise ValueError("matrix labels must be distinct")
        if self.entries.shape != (size, size):
            raise ValueError(f"entries of shape {self.entries.shape} for {size} labels")

    @classmethod
    def from_rows(cls, labels: Sequence, rows: Sequence[Sequence]) -> "MatrixO":
        entries = np.empty((len(labels), len(labels)), dtype=object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                entries[i, j] = value
        return cls(labels=tuple(labels), entries=entries)

    @classmethod
    def identity(cls, labels: Sequence, one, zero) -> "MatrixO":
        size = len(labels)
        return cls.from_rows(
            labels, [[one if i == j else zero for j in range(size)] for i in range(size)]
        )

    @property
    def size(self) -> int:
        return len(self.labels)

    def __getitem__(self, index):
        return self.entries[index]

    def map(self, fn: Callable) -> "MatrixO":
        """Apply a ring map entrywise."""
        mapped = np.empty_like(self.entries)
        for index, value in np.ndenumerate(self.entries):
            mapped[index] = fn(value)
        return MatrixO(self.labels, mapped)

    def __matmul__(self, other: "MatrixO") -> "MatrixO":
        if other.labels != self.labels:
            raise ValueError("matrices on different labels do not multiply")
        return MatrixO(self.labels, _matmul(self.entries, other.entries))

    def scale(self, c) -> "MatrixO":
        return self.map(lambda a: a * c)

    def rows(self) -> List[List]:
        return [list(row) for row in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixO):
            return NotImplemented
        return self.labels == other.labels and all(
            a == b for a, b in zip(self.entries.flat, other.entries.flat)
        )

    __hash__ = None


def _matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, inner = a.shape
    out = np.empty((n, b.shape[1]), dtype=object)
    for i in range(n):
        for j in range(b.shape[1]):
            total = a[i, 0] * b[0, j]
            for k in range(1, inner):
                total = total + a[i, k] * b[k, j]
            out[i, j] = total
    return out


def _berkowitz_vector(rows: List[List], one, zero) -> List:
    """
    Coefficients [1, c_1, ..., c_N] of det(tI - A) = sum_k c_k t^(N-k),
    with ring operations only.
    """
    size = len(rows)
    if size == 0:
        return [one]
    if size == 1:
        return [one, -rows[0][0]]

    # A = [[a, R], [C, S]]
    a = rows[0][0]
    R = rows[0][1:]
    C = [row[0] for row in rows[1:]]
    S = [row[1:] for row in rows[1:]]

    # Toeplitz column: 1, -a, -R C, -R S C, -R S^2 C, ...
    diagonals = [one, -a]
    vector = C
    for step in range(size - 1):
        if step:
            vector = [_dot(row, vector, zero) for row in S]
        diagonals.append(-_dot(R, vector, zero))

    sub = _berkowitz_vector(S, one, zero)
    out = []
    for i in range(size + 1):
        total = zero
        for j in range(min(i, size - 1) + 1):
            total = total + diagonals[i - j] * sub[j]
        out.append(total)
    return out


def _dot(left: Sequence, right: Sequence, zero):
    total = zero
    for x, y in zip(left, right):
        total = total + x * y
    return total


def charpoly_divfree(
    matrix, precision: int, one=None, zero=None
) -> TruncatedSeries:
    """
    det(I - T A) truncated at T^precision, by Berkowitz's division-free
    recursion.

    Parameters
    ----------
    matrix : MatrixO or sequence of rows
        The square matrix A.
    precision : int
        Largest degree kept.
    one, zero : optional
        Ring constants; taken from the entries when omitted.

    Returns
    -------
    TruncatedSeries
        1 + b_1 T + ... with b_k the k-th Berkowitz coefficient.
    """
    rows = matrix.rows() if isinstance(matrix, MatrixO) else [list(r) for r in matrix]
    if zero is None:
        if not rows:
            raise ValueError("ring constants are needed for an empty matrix")
        zero = rows[0][0] * 0
    if one is None:
        one = zero + 1
    coefficients = _berkowitz_vector(rows, one, zero)
    return TruncatedSeries(coefficients, precision, zero)


def determinant(rows: Sequence[Sequence], one=None, zero=None):
    """det(A) = (-1)^N c_N from the Berkowitz vector."""
    rows = [list(r) for r in rows]
    if zero is None:
        zero = rows[0][0] * 0
    if one is None:
        one = zero + 1
    coefficients = _berkowitz_vector(rows, one, zero)
    last = coefficients[-1]
    return last if len(rows) % 2 == 0 else -last


def twisted_product(matrix: MatrixO, m: int, twist: Optional[Callable] = None) -> MatrixO:
    """
    tau^(m-1)(M) ... tau(M) M, tau applied entrywise.

    Parameters
    ----------
    matrix : MatrixO
        M, entries with a ``frobenius(times)`` method unless `twist` is given.
    m : int
        Number of factors.
    twist : callable, optional
        (entry, j) -> tau^j(entry).
    """
    if twist is None:
        def twist(entry, j):
            return entry.frobenius(j)

    result = matrix
    for j in range(1, m):
        result = matrix.map(lambda entry, j=j: twist(entry, j)) @ result
    return result
