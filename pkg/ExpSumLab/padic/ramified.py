"""
The totally ramified ring O_m[varpi] with varpi^e = -p, e = v(p - 1).

varpi^v is Dwork's pi (pi^(p-1) = -p), so varpi is the uniformizer of
the smallest ring that holds both pi and the v-th roots needed for the
Frobenius factors. Scalars are polynomials of degree < e in varpi with
coefficients in O_m / p^K.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence, Tuple, Union

from ExpSumLab.padic.unramified import UnramCtx, UnramElement, Vector, make_unramified
from ExpSumLab.utils.errors import PrecisionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AtLeast:
    """
    A valuation known only from below: the value was zero at the working
    precision, so its true valuation is at least `bound`.
    """

    bound: int

    def __ge__(self, other) -> bool:
        return self.bound >= other

    def __gt__(self, other) -> bool:
        return self.bound > other

    def __str__(self) -> str:
        return f">={self.bound}"


Valuation = Union[int, AtLeast]


def valuation_meets(value: Valuation, threshold: int) -> bool:
    """True when a (possibly lower-bounded) valuation reaches `threshold`."""
    if isinstance(value, AtLeast):
        return value.bound >= threshold
    return value >= threshold


def valuation_to_json(value: Valuation) -> Union[int, str]:
    return str(value) if isinstance(value, AtLeast) else int(value)


def auto_precision(e: int, m: int, u: int, k_max: int) -> int:
    """
    Smallest K with e*K > m*u*k_max + e.

    Every degree-k coefficient check then has a threshold k*m*u + 1
    strictly below the resolution e*K of the ring.
    """
    return (m * u * k_max + e) // e + 1


@dataclass(frozen=True)
class RamCtx:
    """
    O_m[varpi] / p^K.

    Attributes
    ----------
    base : UnramCtx
        The unramified coefficient ring.
    v : int
        varpi^v = pi.
    """

    base: UnramCtx
    v: int

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def K(self) -> int:
        return self.base.K

    @property
    def e(self) -> int:
        """Ramification index, e = v(p - 1)."""
        return self.v * (self.p - 1)

    @property
    def resolution(self) -> int:
        """The varpi-adic precision e*K: zero means valuation at least this."""
        return self.e * self.K

    # --- Raw arithmetic on tuples of e base vectors ---

    def _zero_raw(self) -> Tuple[Vector, ...]:
        return tuple(self.base.zero_vector() for _ in range(self.e))

    def add_raw(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub_raw(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def mul_raw(self, a, b):
        base, e = self.base, self.e
        zero = base.zero_vector()
        product = [zero] * (2 * e - 1)
        for i, ai in enumerate(a):
            if not any(ai):
                continue
            for j, bj in enumerate(b):
                if any(bj):
                    product[i + j] = base.add(product[i + j], base.mul(ai, bj))
        # varpi^(e + k) = -p * varpi^k
        for k in range(2 * e - 2, e - 1, -1):
            if any(product[k]):
                product[k - e] = base.sub(product[k - e], base.scale(product[k], self.p))
        return tuple(product[:e])

    # --- Elements ---

    def scalar(self, value: Union[int, UnramElement, Sequence]) -> "PadicScalar":
        """
        Build a scalar from an integer, an element of O_m, or a list of
        varpi-components (integers, coefficient lists or `UnramElement`).
        """
        if isinstance(value, (int, UnramElement)):
            value = [value]
        components = []
        for component in value:
            if isinstance(component, UnramElement):
                components.append(component.coeffs)
            else:
                components.append(self.base.element(component).coeffs)
        if len(components) > self.e:
            raise ValueError(f"{len(components)} components for ramification index {self.e}")
        components += [self.base.zero_vector()] * (self.e - len(components))
        return PadicScalar(self, tuple(components))

    def zero(self) -> "PadicScalar":
        return PadicScalar(self, self._zero_raw())

    def one(self) -> "PadicScalar":
        return self.scalar(1)

    def uniformizer_power(self, k: int) -> "PadicScalar":
        """varpi^k = (-p)^(k // e) * varpi^(k % e)."""
        if k < 0:
            raise ValueError("negative power of the uniformizer")
        a, b = divmod(k, self.e)
        components = list(self._zero_raw())
        components[b] = self.base.element((-self.p) ** a).coeffs
        return PadicScalar(self, tuple(components))

    def uniformizer(self) -> "PadicScalar":
        return self.uniformizer_power(1)

    def pi(self) -> "PadicScalar":
        """Dwork's pi = varpi^v."""
        return self.uniformizer_power(self.v)

    def __str__(self) -> str:
        return f"O_{self.m}[varpi]/{self.p}^{self.K} (varpi^{self.e} = -{self.p})"


class PadicScalar:
    """Element of O_m[varpi] / p^K; a value type."""

    __slots__ = ("ctx", "components")

    def __init__(self, ctx: RamCtx, components: Tuple[Vector, ...]):
        self.ctx = ctx
        self.components = components

    def _coerce(self, other):
        if isinstance(other, PadicScalar):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ValueError("scalars of different rings do not mix")
            return other.components
        if isinstance(other, (int, UnramElement)):
            return self.ctx.scalar(other).components
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return PadicScalar(self.ctx, self.ctx.add_raw(self.components, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return PadicScalar(self.ctx, self.ctx.sub_raw(self.components, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return PadicScalar(self.ctx, self.ctx.sub_raw(b, self.components))

    def __neg__(self):
        return PadicScalar(self.ctx, tuple(self.ctx.base.neg(c) for c in self.components))

    def __mul__(self, other):
        if isinstance(other, int):
            return PadicScalar(
                self.ctx, tuple(self.ctx.base.scale(c, other) for c in self.components)
            )
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return PadicScalar(self.ctx, self.ctx.mul_raw(self.components, b))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ctx.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(any(c) for c in self.components)

    def is_unit(self) -> bool:
        return any(c % self.ctx.p for c in self.components[0])

    def valuation(self) -> Valuation:
        """
        varpi-adic valuation, min_j (e * v_p(a_j) + j), or `AtLeast` the
        resolution when the scalar vanishes at this precision.
        """
        if self.is_zero():
            return AtLeast(self.ctx.resolution)
        e = self.ctx.e
        return min(
            e * self.ctx.base.vector_valuation(c) + j for j, c in enumerate(self.components)
        )

    def inverse(self) -> "PadicScalar":
        """Inverse of a unit by Newton iteration."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self!r} is not a unit")
        start = self.ctx.base.inverse_vector(self.components[0])
        x = self.ctx.scalar(UnramElement(self.ctx.base, start))
        precision = 1
        while precision < self.ctx.resolution:
            x = x * (2 - self * x)
            precision *= 2
        return x

    def frobenius(self, times: int = 1) -> "PadicScalar":
        """tau acting on the O_m coefficients; varpi is fixed."""
        base = self.ctx.base
        components = self.components
        for _ in range(times % base.m):
            components = tuple(base.frobenius_vector(c) for c in components)
        return PadicScalar(self.ctx, components)

    def unramified_part(self) -> UnramElement:
        """The varpi^0 component, as an element of O_m."""
        return UnramElement(self.ctx.base, self.components[0])

    def pi_components(self) -> Tuple[UnramElement, ...]:
        """Coefficients of varpi^0, ..., varpi^(e-1) in O_m."""
        return tuple(UnramElement(self.ctx.base, c) for c in self.components)

    def __eq__(self, other) -> bool:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self.components == b

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        parts = []
        for j, c in enumerate(self.components):
            if any(c):
                parts.append(f"{list(c)}*w^{j}" if j else f"{list(c)}")
        return "PadicScalar(" + (" + ".join(parts) if parts else "0") + ")"


@lru_cache(maxsize=None)
def make_ramified(p: int, m: int, K: int, v: int) -> RamCtx:
    """Cached constructor of `RamCtx` over `make_unramified(p, m, K)`."""
    if v < 1:
        raise ValueError(f"v must be positive, got {v}")
    return RamCtx(base=make_unramified(p, m, K), v=v)


def _eisenstein_parts(ctx: RamCtx):
    """h(Z) and h'(Z) coefficients for zeta = 1 + pi*Z."""
    p = ctx.p
    pi = ctx.pi()
    # h(Z) = Z^(p-1) - sum_{k=1}^{p-1} (C(p,k)/p) pi^(k-1) Z^(k-1)
    coefficients = [ctx.zero() for _ in range(p)]
    coefficients[p - 1] = ctx.one()
    pi_power = ctx.one()
    for k in range(1, p):
        coefficients[k - 1] = coefficients[k - 1] - pi_power * (comb(p, k) // p)
        pi_power = pi_power * pi
    derivative = [coefficients[i] * i for i in range(1, p)]
    return coefficients, derivative


def _horner(coefficients, z: PadicScalar) -> PadicScalar:
    value = z.ctx.zero()
    for coeff in reversed(coefficients):
        value = value * z + coeff
    return value


@lru_cache(maxsize=None)
def zeta_p(ctx: RamCtx) -> PadicScalar:
    """
    The primitive p-th root of unity zeta = 1 + pi + O(pi^2).

    Z = (zeta - 1)/pi is the root of the unit-derivative equation
    h(Z) = 0 with Z = 1 mod pi, found by Newton iteration.

    Parameters
    ----------
    ctx : RamCtx
        A ring containing pi.

    Returns
    -------
    PadicScalar
        zeta with zeta^p = 1 exactly at the working precision.

    Raises
    ------
    PrecisionError
        If the computed root does not satisfy zeta^p = 1.
    """
    coefficients, derivative = _eisenstein_parts(ctx)
    z = ctx.one()
    for _ in range(ctx.resolution.bit_length() + 2):
        value = _horner(coefficients, z)
        if value.is_zero():
            break
        z = z - value * _horner(derivative, z).inverse()
    zeta = ctx.one() + ctx.pi() * z
    if zeta ** ctx.p != ctx.one() or zeta == ctx.one():
        raise PrecisionError(f"no primitive {ctx.p}-th root of unity found in {ctx}")
    logger.debug("zeta_%d in %s: %r", ctx.p, ctx, zeta)
    return zeta


def embed_cyc(ctx: RamCtx, coefficients: Sequence[int]) -> PadicScalar:
    """
    Image of sum_i a_i zeta^i under zeta -> `zeta_p(ctx)`.

    Parameters
    ----------
    ctx : RamCtx
        The target ring.
    coefficients : Sequence[int]
        a_0, ..., a_{p-1} (anything longer is read modulo zeta^p = 1).

    Returns
    -------
    PadicScalar
        The embedded value.
    """
    zeta = zeta_p(ctx)
    value = ctx.zero()
    power = ctx.one()
    for i, a in enumerate(coefficients):
        if i and i % ctx.p == 0:
            power = ctx.one()
        if a:
            value = value + power * a
        power = power * zeta
    return value
