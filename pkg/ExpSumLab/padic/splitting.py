"""
Exact arithmetic in Q(pi), pi^(p-1) = -p, and the coefficients of the
splitting function theta_m(X) = exp(pi X - pi X^q) = sum_n lambda_n X^n.
"""

import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, inf
from typing import List, Optional, Sequence, Tuple, Union

from ExpSumLab.density.solutions import p_weight
from ExpSumLab.padic.ramified import PadicScalar, RamCtx
from ExpSumLab.utils.constants import DEFAULT_LAMBDA_BUDGET
from ExpSumLab.utils.errors import BudgetError, ConventionWarning, PrecisionError

logger = logging.getLogger(__name__)


def _rational_valuation(r: Fraction, p: int) -> int:
    count = 0
    numerator, denominator = r.numerator, r.denominator
    while numerator % p == 0:
        numerator //= p
        count += 1
    while denominator % p == 0:
        denominator //= p
        count -= 1
    return count


class ExactPiRational:
    """
    Element sum_i r_i pi^i of Q[X]/(X^(p-1) + p), i < p - 1, with
    rational coordinates; arithmetic is exact.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[Union[int, Fraction]]):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > p - 1:
            raise ValueError(f"{len(coeffs)} coordinates for Q(pi) of degree {p - 1}")
        self.p = p
        self.coeffs: Tuple[Fraction, ...] = tuple(coeffs + [Fraction(0)] * (p - 1 - len(coeffs)))

    @classmethod
    def pi_power(cls, p: int, k: int, scale: Union[int, Fraction] = 1) -> "ExactPiRational":
        """scale * pi^k, with pi^k = (-p)^(k // (p-1)) pi^(k % (p-1))."""
        a, b = divmod(k, p - 1)
        coeffs = [Fraction(0)] * (p - 1)
        coeffs[b] = Fraction(scale) * (-p) ** a
        return cls(p, coeffs)

    def _check(self, other: "ExactPiRational") -> None:
        if other.p != self.p:
            raise ValueError("elements of different fields Q(pi) do not mix")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPiRational(self.p, [other])
        if not isinstance(other, ExactPiRational):
            return NotImplemented
        self._check(other)
        return ExactPiRational(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return ExactPiRational(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactPiRational(self.p, [a * other for a in self.coeffs])
        if not isinstance(other, ExactPiRational):
            return NotImplemented
        self._check(other)
        d = self.p - 1
        product = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        product[i + j] += a * b
        for k in range(2 * d - 2, d - 1, -1):
            product[k - d] -= self.p * product[k]
        return ExactPiRational(self.p, product[:d])

    __rmul__ = __mul__

    def __truediv__(self, other: Union[int, Fraction]):
        if isinstance(other, (int, Fraction)):
            return ExactPiRational(self.p, [a / other for a in self.coeffs])
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactPiRational(self.p, [other])
        if not isinstance(other, ExactPiRational):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> Union[int, float]:
        """Exact v_pi, min_i ((p-1) v_p(r_i) + i); infinite for zero."""
        values = [
            (self.p - 1) * _rational_valuation(r, self.p) + i
            for i, r in enumerate(self.coeffs)
            if r
        ]
        return min(values) if values else inf

    def to_padic(self, ram: RamCtx) -> PadicScalar:
        """
        Image in O_m[varpi] / p^K with pi = varpi^v.

        Raises
        ------
        PrecisionError
            If the element is not integral (a coordinate has p in its
            denominator).
        """
        if ram.p != self.p:
            raise ValueError("ring of a different residue characteristic")
        modulo = ram.base.modulo
        value = ram.zero()
        for i, r in enumerate(self.coeffs):
            if not r:
                continue
            if r.denominator % self.p == 0:
                raise PrecisionError(f"{self!r} is not integral at {self.p}")
            residue = r.numerator * pow(r.denominator, -1, modulo) % modulo
            value = value + ram.uniformizer_power(ram.v * i) * residue
        return value

    def __repr__(self) -> str:
        terms = [f"({r})*pi^{i}" if i else f"({r})" for i, r in enumerate(self.coeffs) if r]
        return "ExactPiRational(" + (" + ".join(terms) if terms else "0") + ")"


def base_p_digits(n: int, p: int) -> List[int]:
    """Base-p digits of n, least significant first ([] for 0)."""
    digits = []
    while n:
        n, digit = divmod(n, p)
        digits.append(digit)
    return digits


def digit_factorial(n: int, p: int, exclude_top: bool = False) -> int:
    """
    n!! = prod_i n_i! over the base-p digits of n.

    Parameters
    ----------
    n : int
        Non-negative integer.
    p : int
        The prime.
    exclude_top : bool, default=False
        Drop the most significant digit from the product.
    """
    digits = base_p_digits(n, p)
    if exclude_top and digits:
        digits = digits[:-1]
    result = 1
    for digit in digits:
        result *= factorial(digit)
    return result


@lru_cache(maxsize=64)
def _lambda_table(p: int, m: int, n_max: int) -> Tuple[ExactPiRational, ...]:
    q = p**m
    table = []
    for n in range(n_max + 1):
        value = ExactPiRational(p, [])
        for s in range(n // q + 1):
            r = n - q * s
            coefficient = Fraction((-1) ** s, factorial(r) * factorial(s))
            value = value + ExactPiRational.pi_power(p, r + s, coefficient)
        table.append(value)
    return tuple(table)


def lambda_coeffs(
    p: int, m: int, n_max: int, budget: int = DEFAULT_LAMBDA_BUDGET
) -> List[ExactPiRational]:
    """
    Coefficients lambda_n of exp(pi X - pi X^q), 0 <= n <= n_max.

    Computed from the finite sums lambda_n = sum_{r + qs = n}
    (-1)^s pi^(r+s) / (r! s!) with exact rationals.

    Parameters
    ----------
    p : int
        The prime.
    m : int
        q = p^m.
    n_max : int
        Largest index.
    budget : int
        Largest admissible n_max.

    Returns
    -------
    List[ExactPiRational]
        lambda_0, ..., lambda_{n_max}.
    """
    if n_max > budget:
        raise BudgetError("lambda table", n_max + 1, budget + 1)
    if n_max < 0:
        return []
    return list(_lambda_table(p, m, n_max))


@dataclass(frozen=True)
class LambdaCongruenceReport:
    """
    Outcome of checking one lambda congruence.

    Attributes
    ----------
    p, m, n : int
        The index.
    weight : int
        s_p(n).
    required : int
        s_p(n) + p - 1, the modulus exponent.
    valuation : int or float
        v_pi of lambda_n minus its predicted leading term.
    holds : bool
        Verdict with n!! over all digits.
    holds_top_digit_excluded : bool
        Verdict with the top digit left out of n!!.
    """

    p: int
    m: int
    n: int
    weight: int
    required: int
    valuation: Union[int, float]
    holds: bool
    holds_top_digit_excluded: bool

    @property
    def conventions_agree(self) -> bool:
        return self.holds == self.holds_top_digit_excluded

    def __bool__(self) -> bool:
        return self.holds


def _congruence_gap(value: ExactPiRational, p: int, n: int, q: int, exclude_top: bool):
    s = p_weight(n, p)
    if n <= q - 1:
        target = ExactPiRational.pi_power(p, s, Fraction(1, digit_factorial(n, p, exclude_top)))
        return (value - target).valuation()
    return value.valuation()


def check_lambda_congruence(
    p: int,
    m: int,
    n: int,
    table: Optional[Sequence[ExactPiRational]] = None,
    budget: int = DEFAULT_LAMBDA_BUDGET,
) -> LambdaCongruenceReport:
    """
    Check lambda_n = pi^(s_p(n)) / n!! mod pi^(s_p(n) + p - 1) for n < q,
    and lambda_n = 0 to the same modulus for n >= q.

    Parameters
    ----------
    p, m, n : int
        Prime, q = p^m and the index.
    table : Sequence[ExactPiRational], optional
        Precomputed coefficients (index n is used); computed if omitted.
    budget : int
        Largest admissible n.

    Returns
    -------
    LambdaCongruenceReport
        Both digit-factorial conventions; the truth value is the
        all-digits verdict. A `ConventionWarning` is issued when the two
        conventions disagree.
    """
    if table is None:
        value = lambda_coeffs(p, m, n, budget)[n]
    else:
        if n >= len(table):
            raise PrecisionError(f"lambda table of length {len(table)} has no index {n}")
        value = table[n]
    q = p**m
    weight = p_weight(n, p)
    required = weight + p - 1
    gap = _congruence_gap(value, p, n, q, exclude_top=False)
    gap_excluded = _congruence_gap(value, p, n, q, exclude_top=True)
    report = LambdaCongruenceReport(
        p=p,
        m=m,
        n=n,
        weight=weight,
        required=required,
        valuation=gap,
        holds=gap >= required,
        holds_top_digit_excluded=gap_excluded >= required,
    )
    if not report.conventions_agree:
        warnings.warn(
            f"lambda_{n} (p={p}, m={m}): digit-factorial conventions disagree",
            ConventionWarning,
            stacklevel=2,
        )
    return report


def anton_congruence_holds(p: int, n: int) -> bool:
    """n! = (-p)^a n!! mod p^(a+1), a = (n - s_p(n))/(p - 1) = v_p(n!)."""
    a = (n - p_weight(n, p)) // (p - 1)
    modulo = p ** (a + 1)
    return (factorial(n) - (-p) ** a * digit_factorial(n, p)) % modulo == 0


def exp_series_coeffs(p: int, m: int, n_max: int) -> List[ExactPiRational]:
    """
    exp(pi X - pi X^q) by direct composition of truncated series; an
    independent check of `lambda_coeffs`.
    """
    q = p**m
    inner = [ExactPiRational(p, []) for _ in range(n_max + 1)]
    if n_max >= 1:
        inner[1] = ExactPiRational.pi_power(p, 1)
    if q <= n_max:
        inner[q] = inner[q] - ExactPiRational.pi_power(p, 1)
    result = [ExactPiRational(p, []) for _ in range(n_max + 1)]
    result[0] = ExactPiRational(p, [1])
    power = list(result)
    for k in range(1, n_max + 1):
        nxt = [ExactPiRational(p, []) for _ in range(n_max + 1)]
        for i, a in enumerate(power):
            if a.is_zero():
                continue
            for j in range(1, n_max + 1 - i):
                if not inner[j].is_zero():
                    nxt[i + j] = nxt[i + j] + a * inner[j]
        power = nxt
        scale = Fraction(1, factorial(k))
        result = [r + c * scale for r, c in zip(result, power)]
    return result
