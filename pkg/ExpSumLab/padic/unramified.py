"""
The unramified ring O_m / p^K with a Teichmüller modulus.

O_m is realised as (Z/p^K)[x]/(G) where G is the degree-m factor of
x^{q-1} - 1 lifting the modulus of F_q used by `ExpSumLab.ff`. The class
of x is then itself a Teichmüller element, so the Frobenius automorphism
is the substitution x -> x^p and reduction mod p is the identity on
coefficient vectors.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from ExpSumLab.ff.field import FFElement, FieldCtx, make_field

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def p_valuation(value: int, p: int, cap: int) -> int:
    """v_p of an integer, with 0 mapped to `cap`."""
    if value == 0:
        return cap
    count = 0
    while value % p == 0 and count < cap:
        value //= p
        count += 1
    return count


def _reduction_rows(modulus: Sequence[int], modulo: int) -> Tuple[Vector, ...]:
    """x^m, ..., x^(2m-2) reduced by a monic modulus of degree m."""
    m = len(modulus) - 1
    rows = []
    current = [(-c) % modulo for c in modulus[:-1]]
    for _ in range(max(m - 1, 1)):
        rows.append(tuple(current))
        carry = current[-1]
        current = [0] + current[:-1]
        current = [(current[i] - carry * modulus[i]) % modulo for i in range(m)]
    return tuple(rows)


def _mulmod(a: Vector, b: Vector, rows: Tuple[Vector, ...], modulo: int) -> Vector:
    m = len(a)
    product = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                product[i + j] += ai * bj
    result = product[:m]
    for k in range(m, 2 * m - 1):
        coeff = product[k] % modulo
        if coeff == 0:
            continue
        row = rows[k - m]
        for i in range(m):
            result[i] += coeff * row[i]
    return tuple(c % modulo for c in result)


def _powmod(a: Vector, exponent: int, rows: Tuple[Vector, ...], modulo: int) -> Vector:
    result = tuple([1 % modulo] + [0] * (len(a) - 1))
    base = a
    while exponent > 0:
        if exponent & 1:
            result = _mulmod(result, base, rows, modulo)
        base = _mulmod(base, base, rows, modulo)
        exponent >>= 1
    return result


def teichmuller_modulus(p: int, m: int, K: int) -> Vector:
    """
    The monic factor of x^{q-1} - 1 mod p^K reducing to the F_q modulus.

    Computed as prod_{i<m} (X - t^{p^i}) where t = y^{q^K} is the
    Teichmüller point of the integral lift of the F_q modulus.

    Parameters
    ----------
    p : int
        The prime.
    m : int
        Degree of the unramified extension.
    K : int
        Precision in p-adic digits.

    Returns
    -------
    Vector
        Coefficients of G mod p^K, lowest degree first, monic.
    """
    modulo = p**K
    residue_modulus = make_field(p, m).modulus
    rows = _reduction_rows(residue_modulus, modulo)
    q = p**m

    y = tuple([0, 1] + [0] * (m - 2)) if m > 1 else (-residue_modulus[0] % modulo,)
    t = y
    for _ in range(K):
        t = _powmod(t, q, rows, modulo)

    # Coefficients of prod (X - t^{p^i}) as vectors of the quotient ring.
    one = tuple([1 % modulo] + [0] * (m - 1))
    product: List[Vector] = [one]
    conjugate = t
    for _ in range(m):
        shifted = [tuple([0] * m)] + product
        scaled = [_mulmod(c, conjugate, rows, modulo) for c in product] + [tuple([0] * m)]
        product = [
            tuple((a - b) % modulo for a, b in zip(high, low))
            for high, low in zip(shifted, scaled)
        ]
        conjugate = _powmod(conjugate, p, rows, modulo)

    modulus = []
    for coeff in product:
        if any(coeff[1:]):
            raise ArithmeticError("Teichmüller modulus has non-constant coefficients")
        modulus.append(coeff[0])
    return tuple(modulus)


@dataclass(frozen=True)
class UnramCtx:
    """
    O_m / p^K with its Teichmüller modulus and Frobenius.

    Attributes
    ----------
    p : int
        The prime.
    m : int
        Degree over Z_p; the residue field is F_q with q = p^m.
    K : int
        Precision: elements are known modulo p^K.
    modulus : Vector
        The Teichmüller modulus G (monic, degree m).
    """

    p: int
    m: int
    K: int
    modulus: Vector = ()
    _rows: Tuple[Vector, ...] = field(default=(), compare=False, repr=False)
    _frobenius_images: Tuple[Vector, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.K < 1:
            raise ValueError(f"precision must be positive, got {self.K}")
        if not self.modulus:
            object.__setattr__(self, "modulus", teichmuller_modulus(self.p, self.m, self.K))
        rows = _reduction_rows(self.modulus, self.modulo)
        object.__setattr__(self, "_rows", rows)
        x = self.generator_vector()
        x_p = _powmod(x, self.p, rows, self.modulo)
        images = [self.one_vector()]
        for _ in range(1, self.m):
            images.append(_mulmod(images[-1], x_p, rows, self.modulo))
        object.__setattr__(self, "_frobenius_images", tuple(images))

    # --- Structure ---

    @property
    def modulo(self) -> int:
        return self.p**self.K

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def residue_field(self) -> FieldCtx:
        return make_field(self.p, self.m)

    def zero_vector(self) -> Vector:
        return tuple([0] * self.m)

    def one_vector(self) -> Vector:
        return tuple([1 % self.modulo] + [0] * (self.m - 1))

    def generator_vector(self) -> Vector:
        if self.m == 1:
            return ((-self.modulus[0]) % self.modulo,)
        return tuple([0, 1] + [0] * (self.m - 2))

    # --- Raw vector arithmetic ---

    def add(self, a: Vector, b: Vector) -> Vector:
        modulo = self.modulo
        return tuple((x + y) % modulo for x, y in zip(a, b))

    def sub(self, a: Vector, b: Vector) -> Vector:
        modulo = self.modulo
        return tuple((x - y) % modulo for x, y in zip(a, b))

    def neg(self, a: Vector) -> Vector:
        modulo = self.modulo
        return tuple((-x) % modulo for x in a)

    def mul(self, a: Vector, b: Vector) -> Vector:
        return _mulmod(a, b, self._rows, self.modulo)

    def scale(self, a: Vector, c: int) -> Vector:
        modulo = self.modulo
        return tuple((x * c) % modulo for x in a)

    def power(self, a: Vector, exponent: int) -> Vector:
        return _powmod(a, exponent, self._rows, self.modulo)

    def frobenius_vector(self, a: Vector) -> Vector:
        result = [0] * self.m
        for coeff, image in zip(a, self._frobenius_images):
            if coeff:
                for i in range(self.m):
                    result[i] += coeff * image[i]
        return tuple(c % self.modulo for c in result)

    def vector_valuation(self, a: Vector) -> int:
        """v_p of an element (K when it is zero at this precision)."""
        return min(p_valuation(c, self.p, self.K) for c in a)

    def inverse_vector(self, a: Vector) -> Vector:
        """Inverse of a unit by Newton iteration from the residue inverse."""
        residue = self.residue_field.element([c % self.p for c in a])
        if residue.is_zero():
            raise ZeroDivisionError("element is not a unit of O_m")
        x = tuple(residue.inverse().coeffs)
        precision = 1
        two = tuple([2 % self.modulo] + [0] * (self.m - 1))
        while precision < self.K:
            x = self.mul(x, self.sub(two, self.mul(a, x)))
            precision *= 2
        return x

    # --- Elements ---

    def element(self, coeffs: Union[int, Sequence[int]]) -> "UnramElement":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        if len(coeffs) != self.m:
            raise ValueError(f"{len(coeffs)} coefficients for a degree-{self.m} ring")
        return UnramElement(self, tuple(c % self.modulo for c in coeffs))

    def zero(self) -> "UnramElement":
        return UnramElement(self, self.zero_vector())

    def one(self) -> "UnramElement":
        return UnramElement(self, self.one_vector())

    def generator(self) -> "UnramElement":
        return UnramElement(self, self.generator_vector())


class UnramElement:
    """Element of O_m / p^K; a value type."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: UnramCtx, coeffs: Vector):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other) -> Vector:
        if isinstance(other, int):
            return self.ctx.element(other).coeffs
        if isinstance(other, UnramElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ValueError("elements of different unramified rings do not mix")
            return other.coeffs
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return UnramElement(self.ctx, self.ctx.add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return UnramElement(self.ctx, self.ctx.sub(self.coeffs, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return UnramElement(self.ctx, self.ctx.sub(b, self.coeffs))

    def __neg__(self):
        return UnramElement(self.ctx, self.ctx.neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return UnramElement(self.ctx, self.ctx.scale(self.coeffs, other))
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return UnramElement(self.ctx, self.ctx.mul(self.coeffs, b))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return UnramElement(self.ctx, self.ctx.power(self.coeffs, exponent))

    def inverse(self) -> "UnramElement":
        return UnramElement(self.ctx, self.ctx.inverse_vector(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int:
        return self.ctx.vector_valuation(self.coeffs)

    def reduce(self) -> FFElement:
        """Image in the residue field F_q."""
        return self.ctx.residue_field.element([c % self.ctx.p for c in self.coeffs])

    def __eq__(self, other) -> bool:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self.coeffs == b

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.m, self.ctx.K, self.coeffs))

    def __repr__(self) -> str:
        return f"UnramElement({list(self.coeffs)} mod {self.ctx.p}^{self.ctx.K})"


@lru_cache(maxsize=None)
def make_unramified(p: int, m: int, K: int) -> UnramCtx:
    """Cached constructor of `UnramCtx`."""
    ctx = UnramCtx(p=p, m=m, K=K)
    logger.debug("O_%d mod %d^%d with Teichmüller modulus %s", m, p, K, ctx.modulus)
    return ctx


def teichmuller(ctx: UnramCtx, c: Union[FFElement, int]) -> UnramElement:
    """
    Teichmüller lift of a residue-field element.

    Parameters
    ----------
    ctx : UnramCtx
        The ring O_m / p^K.
    c : FFElement or int
        An element of F_q (or an integer read in F_p).

    Returns
    -------
    UnramElement
        omega(c), with omega(c)^q = omega(c) and omega(c) = c mod p.
    """
    if isinstance(c, int):
        coeffs = [c % ctx.p]
    else:
        if c.ctx.degree != ctx.m or c.ctx.p != ctx.p:
            raise ValueError(f"{c.ctx} is not the residue field of O_{ctx.m}")
        coeffs = list(c.coeffs)
    t = ctx.element(coeffs).coeffs
    for _ in range(ctx.K):
        t = ctx.power(t, ctx.q)
    return UnramElement(ctx, t)


def frobenius(ctx: UnramCtx, a: UnramElement, times: int = 1) -> UnramElement:
    """
    The Frobenius automorphism tau (x -> x^p), applied `times` times.

    Parameters
    ----------
    ctx : UnramCtx
        The ring.
    a : UnramElement
        The element.
    times : int, default=1
        Power of tau; taken modulo m.

    Returns
    -------
    UnramElement
        tau^times(a).
    """
    if a.ctx is not ctx and a.ctx != ctx:
        raise ValueError("element does not belong to this ring")
    coeffs = a.coeffs
    for _ in range(times % ctx.m):
        coeffs = ctx.frobenius_vector(coeffs)
    return UnramElement(ctx, coeffs)
