"""
Exponent sets D in N^n and the symbolic infinite density.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from ExpSumLab.utils.errors import UnsupportedInputError

Vector = Tuple[int, ...]


class Infinity:
    """The density of a hyperplane-contained set; greater than every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("Infinity")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"


INFINITY = Infinity()

DensityValue = Union[Fraction, Infinity]


@dataclass(frozen=True)
class ExponentSet:
    """
    A finite set D of distinct exponent vectors in N^n.

    Attributes
    ----------
    n : int
        The dimension.
    vectors : Tuple[Vector, ...]
        The elements of D, sorted; their order fixes the row order of
        solutions and digit vectors.
    """

    n: int
    vectors: Tuple[Vector, ...]

    def __post_init__(self):
        for d in self.vectors:
            if len(d) != self.n:
                raise ValueError(f"exponent {d} is not in N^{self.n}")
            if any(x < 0 for x in d):
                raise ValueError(f"negative exponent {d}")
            if not any(d):
                raise UnsupportedInputError(
                    "the zero exponent (a constant term) is not supported"
                )
        if len(set(self.vectors)) != len(self.vectors):
            raise ValueError("exponent vectors must be distinct")

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], n: int = None) -> "ExponentSet":
        """Build D from any iterable of vectors (or integers when n = 1)."""
        cleaned = []
        for d in vectors:
            d = (int(d),) if isinstance(d, int) else tuple(int(x) for x in d)
            cleaned.append(d)
        if n is None:
            if not cleaned:
                raise ValueError("cannot infer the dimension of an empty set")
            n = len(cleaned[0])
        return cls(n=n, vectors=tuple(sorted(cleaned)))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def is_empty(self) -> bool:
        return not self.vectors

    def hyperplane_contained(self, i: int) -> bool:
        """True when every d in D has d_i = 0 (0-based coordinate)."""
        return all(d[i] == 0 for d in self.vectors)

    def is_hyperplane_contained(self) -> bool:
        """True when D is empty or lies in some coordinate hyperplane."""
        return self.is_empty() or any(self.hyperplane_contained(i) for i in range(self.n))

    def column_sums(self) -> Vector:
        """sum_{d in D} d, the componentwise node bound of the support graph."""
        return tuple(sum(d[i] for d in self.vectors) for i in range(self.n))

    def restrict(self, indices: Sequence[int]) -> "ExponentSet":
        """
        D_I projected to N^{#I}.

        Parameters
        ----------
        indices : Sequence[int]
            The 0-based coordinates I, any order.

        Returns
        -------
        ExponentSet
            {(d_i)_{i in I} : d in D, d_j = 0 for j not in I}.
        """
        indices = tuple(sorted(set(indices)))
        outside = [j for j in range(self.n) if j not in indices]
        kept = [
            tuple(d[i] for i in indices)
            for d in self.vectors
            if all(d[j] == 0 for j in outside)
        ]
        return ExponentSet(n=len(indices), vectors=tuple(sorted(kept)))

    def __str__(self) -> str:
        inner = ", ".join(str(d[0]) if self.n == 1 else str(d) for d in self.vectors)
        return "{" + inner + "}"
