"""
Power series in T truncated after a fixed degree, over any commutative ring
whose elements support ``+``, ``-``, ``*`` and multiplication by ``int``.
"""

from typing import Callable, List, Sequence


class TruncatedSeries:
    """
    a_0 + a_1 T + ... + a_K T^K, everything above T^K discarded.

    Parameters
    ----------
    coeffs : Sequence
        Coefficients from degree 0; padded with zeros or cut to K + 1.
    precision : int
        K, the largest degree kept.
    zero : optional
        Zero of the coefficient ring, needed when `coeffs` is empty.
    """

    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs: Sequence, precision: int, zero=None):
        coeffs = list(coeffs)[: precision + 1]
        if zero is None:
            if not coeffs:
                raise ValueError("the zero of an empty series must be given")
            zero = coeffs[0] * 0
        coeffs += [zero] * (precision + 1 - len(coeffs))
        self.coeffs: List = coeffs
        self.precision = precision

    @classmethod
    def one(cls, sample, precision: int) -> "TruncatedSeries":
        """The series 1 in the ring of `sample`."""
        zero = sample * 0
        return cls([zero + 1], precision, zero)

    @property
    def zero(self):
        return self.coeffs[0] * 0

    def _check(self, other: "TruncatedSeries") -> None:
        if other.precision != self.precision:
            raise ValueError(
                f"series truncated at {self.precision} and {other.precision} do not mix"
            )

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.precision + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.precision)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.precision)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.precision)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([a * other for a in self.coeffs], self.precision)
        self._check(other)
        K = self.precision
        out = [self.zero for _ in range(K + 1)]
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j in range(K + 1 - i):
                b = other.coeffs[j]
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, K)

    def __rmul__(self, other) -> "TruncatedSeries":
        return TruncatedSeries([other * a for a in self.coeffs], self.precision)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.precision == other.precision and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def has_unit_constant(self) -> bool:
        return self.coeffs[0] == 1

    def inverse(self) -> "TruncatedSeries":
        """1 / s for a series with constant term 1."""
        if not self.has_unit_constant():
            raise ZeroDivisionError("only series with constant term 1 are inverted")
        K = self.precision
        out = [self.coeffs[0]]
        for k in range(1, K + 1):
            total = self.zero
            for j in range(1, k + 1):
                a = self.coeffs[j]
                if not _is_zero(a):
                    total = total + a * out[k - j]
            out.append(-total)
        return TruncatedSeries(out, K)

    def power(self, exponent: int) -> "TruncatedSeries":
        """s^k for any integer k (negative powers need constant term 1)."""
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = TruncatedSeries.one(self.coeffs[0], self.precision)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c) -> "TruncatedSeries":
        """s(cT): the coefficient of T^k is multiplied by c^k."""
        out = [self.coeffs[0]]
        factor = None
        for a in self.coeffs[1:]:
            factor = c if factor is None else factor * c
            out.append(a * factor)
        return TruncatedSeries(out, self.precision)

    def map(self, fn: Callable) -> "TruncatedSeries":
        """Apply a ring map coefficientwise."""
        return TruncatedSeries([fn(a) for a in self.coeffs], self.precision)

    def truncate(self, precision: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, precision)

    def valuations(self) -> list:
        """valuation() of every coefficient."""
        return [a.valuation() for a in self.coeffs]

    def __repr__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if not _is_zero(a):
                terms.append(f"({a})" + (f"*T^{k}" if k else ""))
        return "TruncatedSeries(" + (" + ".join(terms) if terms else "0") + f", K={self.precision})"


def _is_zero(a) -> bool:
    method = getattr(a, "is_zero", None)
    if method is not None:
        return method()
    return a == 0
