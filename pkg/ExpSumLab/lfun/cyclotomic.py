"""
Exact arithmetic in Z[zeta_p].
"""

from typing import Sequence, Tuple, Union

from ExpSumLab.padic import PadicScalar, RamCtx, embed_cyc
from ExpSumLab.utils.errors import IntegralityError


def _reduce(p: int, values: Sequence[int]) -> Tuple[int, ...]:
    # Read modulo zeta^p = 1, then drop zeta^(p-1) = -(1 + ... + zeta^(p-2)).
    folded = [0] * p
    for i, a in enumerate(values):
        folded[i % p] += a
    top = folded[p - 1]
    return tuple(a - top for a in folded[: p - 1])


class CycInt:
    """
    Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^(p-2).

    For p = 2 the basis is {1} and zeta = -1.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        coeffs = tuple(int(a) for a in coeffs)
        if len(coeffs) != p - 1:
            coeffs = _reduce(p, coeffs)
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, p: int, value: int) -> "CycInt":
        return cls(p, [value] + [0] * (p - 2))

    @classmethod
    def zeta_power(cls, p: int, k: int) -> "CycInt":
        values = [0] * p
        values[k % p] = 1
        return cls(p, _reduce(p, values))

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "CycInt":
        """sum_j N_j zeta^j for a trace histogram N_0, ..., N_{p-1}."""
        p = len(counts)
        return cls(p, _reduce(p, [int(c) for c in counts]))

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt.from_int(self.p, other)
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise ValueError(f"Z[zeta_{self.p}] and Z[zeta_{other.p}] do not mix")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        product = [0] * (2 * self.p)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return CycInt(self.p, _reduce(self.p, product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CycInt":
        if exponent < 0:
            raise ValueError("negative powers are not integral in general")
        result = CycInt.from_int(self.p, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, k: int) -> "CycInt":
        """self / k; the basis is a Z-basis, so every coordinate must divide."""
        if any(a % k for a in self.coeffs):
            raise IntegralityError(f"{self!r} is not divisible by {k} in Z[zeta_{self.p}]")
        return CycInt(self.p, tuple(a // k for a in self.coeffs))

    def conjugate(self, a: int) -> "CycInt":
        """Image under the Galois automorphism zeta -> zeta^a."""
        if a % self.p == 0:
            raise ValueError(f"zeta -> zeta^{a} is not an automorphism")
        values = [0] * self.p
        for i, c in enumerate(self.coeffs):
            values[(i * a) % self.p] += c
        return CycInt(self.p, _reduce(self.p, values))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def to_padic(self, ram: RamCtx) -> PadicScalar:
        """Image in O_m[varpi] through zeta -> `zeta_p(ram)`."""
        return embed_cyc(ram, self.coeffs)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if a:
                terms.append(str(a) if i == 0 else f"{a}*z^{i}")
        return " + ".join(terms) if terms else "0"


def conjugate(a: Union[CycInt, int], k: int) -> Union[CycInt, int]:
    """zeta -> zeta^k applied to `a` (integers are fixed)."""
    return a if isinstance(a, int) else a.conjugate(k)
