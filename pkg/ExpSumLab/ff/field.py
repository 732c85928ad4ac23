"""
Finite-field contexts and elements.

A field F_{p^k} is represented as F_p[x]/(modulus) with the
lexicographically least monic irreducible modulus of degree k. An
extension built by `extend_field` remembers the field it extends and the
image of that field's generator, so coefficients of a polynomial over
F_q embed the same way for every degree r.
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple, Union

from ExpSumLab.ff.prime_poly import (
    is_irreducible,
    is_prime,
    least_irreducible,
    prime_factors,
)

logger = logging.getLogger(__name__)

IntOrElement = Union[int, "FFElement"]


@dataclass(frozen=True)
class FieldCtx:
    """
    Context of a finite field F_{p^degree}.

    Attributes
    ----------
    p : int
        The characteristic.
    degree : int
        Absolute degree over F_p.
    modulus : Tuple[int, ...]
        Monic irreducible modulus, lowest degree first (length degree + 1).
    base : FieldCtx, optional
        The subfield this field was built from by `extend_field`.
    embedding : Tuple[int, ...], optional
        Coefficients of the image of the base generator, a root of
        ``base.modulus`` in this field.
    """

    p: int
    degree: int
    modulus: Tuple[int, ...]
    base: Optional["FieldCtx"] = None
    embedding: Optional[Tuple[int, ...]] = None
    _powers_of_x: Tuple[Tuple[int, ...], ...] = field(
        default=(), compare=False, repr=False
    )

    def __post_init__(self):
        if len(self.modulus) != self.degree + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of the stated degree")
        if not is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")
        if self.base is not None:
            if self.degree % self.base.degree != 0:
                raise ValueError("base degree must divide the field degree")
            if self.embedding is None or len(self.embedding) != self.degree:
                raise ValueError("an extension needs the embedding image")
        # x^degree, ..., x^(2*degree-2) reduced, used by `mul_coeffs`.
        reductions = []
        current = [(-c) % self.p for c in self.modulus[:-1]]
        for _ in range(max(self.degree - 1, 1)):
            reductions.append(tuple(current))
            carry = current[-1]
            current = [0] + current[:-1]
            current = [
                (current[i] + carry * (-self.modulus[i])) % self.p
                for i in range(self.degree)
            ]
        object.__setattr__(self, "_powers_of_x", tuple(reductions))

    # --- Structure ---

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def relative_degree(self) -> int:
        """Degree over the base field (the field itself if there is none)."""
        return self.degree // self.base.degree if self.base is not None else 1

    def mul_coeffs(self, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
        """Multiply two coefficient vectors and reduce by the modulus."""
        degree, p = self.degree, self.p
        product = [0] * (2 * degree - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    product[i + j] += ai * bj
        result = product[:degree]
        for k in range(degree, 2 * degree - 1):
            coeff = product[k] % p
            if coeff == 0:
                continue
            row = self._powers_of_x[k - degree]
            for i in range(degree):
                result[i] += coeff * row[i]
        return tuple(c % p for c in result)

    # --- Element construction ---

    def element(self, coeffs: Sequence[int]) -> "FFElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise ValueError(
                f"{len(coeffs)} coefficients given for a degree-{self.degree} field"
            )
        coeffs += [0] * (self.degree - len(coeffs))
        return FFElement(self, tuple(c % self.p for c in coeffs))

    def scalar(self, value: int) -> "FFElement":
        return self.element([value % self.p])

    def zero(self) -> "FFElement":
        return self.scalar(0)

    def one(self) -> "FFElement":
        return self.scalar(1)

    def generator(self) -> "FFElement":
        """The class of x (zero when the modulus is x itself)."""
        if self.degree == 1:
            return self.scalar(-self.modulus[0])
        return self.element([0, 1])

    def from_code(self, code: int) -> "FFElement":
        """Element whose coefficients are the base-p digits of `code`."""
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} outside [0, {self.order})")
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(code % self.p)
            code //= self.p
        return FFElement(self, tuple(coeffs))

    def elements(self) -> Iterator["FFElement"]:
        """All elements, by increasing code."""
        for code in range(self.order):
            yield self.from_code(code)

    def __str__(self) -> str:
        return f"F_{self.p}^{self.degree}"


class FFElement:
    """
    Element of a finite field, a dense coefficient vector over F_p.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Tuple[int, ...]):
        if len(coeffs) != ctx.degree:
            raise ValueError("coefficient vector does not match the field degree")
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other: IntOrElement) -> "FFElement":
        if isinstance(other, int):
            return self.ctx.scalar(other)
        if not isinstance(other, FFElement):
            raise TypeError(f"cannot combine a field element with {type(other).__name__}")
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ValueError(f"elements of {self.ctx} and {other.ctx} do not mix")
        return other

    def __add__(self, other: IntOrElement) -> "FFElement":
        other = self._coerce(other)
        p = self.ctx.p
        return FFElement(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FFElement":
        p = self.ctx.p
        return FFElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: IntOrElement) -> "FFElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: IntOrElement) -> "FFElement":
        return self._coerce(other) - self

    def __mul__(self, other: IntOrElement) -> "FFElement":
        other = self._coerce(other)
        return FFElement(self.ctx, self.ctx.mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FFElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ctx.one()
        base = self
        while exponent > 0:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "FFElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.ctx.order - 2)

    def __truediv__(self, other: IntOrElement) -> "FFElement":
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def code(self) -> int:
        value = 0
        for coeff in reversed(self.coeffs):
            value = value * self.ctx.p + coeff
        return value

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        if not isinstance(other, FFElement):
            return NotImplemented
        return self.coeffs == other.coeffs and (other.ctx is self.ctx or other.ctx == self.ctx)

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.modulus, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            if i == 0:
                terms.append(str(coeff))
            else:
                power = "a" if i == 1 else f"a^{i}"
                terms.append(power if coeff == 1 else f"{coeff}*{power}")
        return " + ".join(reversed(terms)) if terms else "0"


# --- Construction ---

@lru_cache(maxsize=None)
def make_field(p: int, degree: int) -> FieldCtx:
    """
    Build F_{p^degree} with the least monic irreducible modulus.

    Parameters
    ----------
    p : int
        A prime.
    degree : int
        Absolute degree, at least 1.

    Returns
    -------
    FieldCtx
        The field context; (3, 2) has modulus x^2 + 1 and (2, 3) has
        modulus x^3 + x + 1.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p = {p} is not a prime")
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    modulus = least_irreducible(p, degree)
    logger.debug("F_%d^%d modulus %s", p, degree, modulus)
    return FieldCtx(p=p, degree=degree, modulus=modulus)


@lru_cache(maxsize=None)
def primitive_element(ctx: FieldCtx) -> FFElement:
    """
    Least-code generator of the multiplicative group.

    Parameters
    ----------
    ctx : FieldCtx
        The field.

    Returns
    -------
    FFElement
        An element of order |F| - 1.
    """
    group_order = ctx.order - 1
    cofactors = [group_order // ell for ell in prime_factors(group_order)] if group_order > 1 else []
    one = ctx.one()
    for code in range(1, ctx.order):
        candidate = ctx.from_code(code)
        if all(candidate ** cofactor != one for cofactor in cofactors):
            return candidate
    raise ArithmeticError(f"{ctx} has no primitive element")


def _evaluate_modulus(modulus: Sequence[int], x: FFElement) -> FFElement:
    value = x.ctx.zero()
    for coeff in reversed(modulus):
        value = value * x + coeff
    return value


@lru_cache(maxsize=None)
def extend_field(base: FieldCtx, r: int) -> FieldCtx:
    """
    Degree-r extension of `base` with a stored embedding.

    The extension has the least irreducible modulus of absolute degree
    ``base.degree * r``; the embedding sends the base generator to the
    least-code root of ``base.modulus``. Roots are searched among the
    elements of the unique subfield with ``base.order`` elements.

    Parameters
    ----------
    base : FieldCtx
        The field F_q.
    r : int
        Relative degree, at least 1. For r = 1 `base` itself is returned.

    Returns
    -------
    FieldCtx
        The field F_{q^r}.
    """
    if r < 1:
        raise ValueError(f"extension degree must be positive, got {r}")
    if r == 1:
        return base
    degree = base.degree * r
    plain = make_field(base.p, degree)

    q = base.order
    candidates = [plain.zero()]
    h = primitive_element(plain) ** ((plain.order - 1) // (q - 1))
    power = plain.one()
    for _ in range(q - 1):
        candidates.append(power)
        power = power * h
    roots = [c for c in candidates if _evaluate_modulus(base.modulus, c).is_zero()]
    if not roots:
        raise ArithmeticError(f"{base.modulus} has no root in {plain}")
    root = min(roots, key=lambda element: element.code)
    logger.debug("embedding of %s into %s: generator -> %r", base, plain, root)
    return FieldCtx(
        p=base.p, degree=degree, modulus=plain.modulus, base=base, embedding=root.coeffs
    )


# --- Maps ---

def embed(ctx: FieldCtx, c: IntOrElement) -> FFElement:
    """
    Image of an element of a subfield of `ctx`.

    Parameters
    ----------
    ctx : FieldCtx
        Target field.
    c : int or FFElement
        An integer (prime-field constant), an element of `ctx`, or an
        element of ``ctx.base`` (embedded through the stored root).

    Returns
    -------
    FFElement
        The element of `ctx`.
    """
    if isinstance(c, int):
        return ctx.scalar(c)
    if c.ctx is ctx or c.ctx == ctx:
        return c
    if c.ctx.degree == 1:
        return ctx.scalar(c.coeffs[0])
    if ctx.base is None or not (c.ctx is ctx.base or c.ctx == ctx.base):
        raise ValueError(f"{c.ctx} is not the recorded base field of {ctx}")
    root = FFElement(ctx, ctx.embedding)
    image = ctx.zero()
    power = ctx.one()
    for coeff in c.coeffs:
        if coeff:
            image = image + power * coeff
        power = power * root
    return image


def trace_to_prime(ctx: FieldCtx, a: FFElement) -> int:
    """
    Absolute trace Tr_{F_{p^deg}/F_p}(a) = sum_{i<deg} a^{p^i}.

    Parameters
    ----------
    ctx : FieldCtx
        The field of `a`.
    a : FFElement
        The element.

    Returns
    -------
    int
        The trace, a residue in [0, p).
    """
    if a.ctx is not ctx and a.ctx != ctx:
        raise ValueError(f"element of {a.ctx} passed with context {ctx}")
    total = a
    conjugate = a
    for _ in range(ctx.degree - 1):
        conjugate = conjugate ** ctx.p
        total = total + conjugate
    if any(total.coeffs[1:]):
        raise ArithmeticError("trace left the prime field")
    return total.coeffs[0]


def relative_trace(ctx: FieldCtx, a: FFElement) -> FFElement:
    """Tr_{F_{q^r}/F_q}(a) = sum_{i<r} a^{q^i}, as an element of `ctx`."""
    if ctx.base is None:
        return a
    q = ctx.base.order
    total = a
    conjugate = a
    for _ in range(ctx.relative_degree - 1):
        conjugate = conjugate ** q
        total = total + conjugate
    return total


def restrict_to_base(ctx: FieldCtx, a: FFElement) -> FFElement:
    """Preimage of an embedded element in ``ctx.base`` (exhaustive search)."""
    if ctx.base is None:
        return a
    for candidate in ctx.base.elements():
        if embed(ctx, candidate) == a:
            return candidate
    raise ValueError(f"{a!r} does not lie in the embedded base field")


_TERM = re.compile(r"^(?:(\d+)\s*\*?\s*)?(a(?:\s*\^\s*(\d+))?)?$")


def parse_element(ctx: FieldCtx, text: Union[str, int, Sequence[int]]) -> FFElement:
    """
    Parse a coefficient written in the generator ``a`` of the field.

    Accepted forms are integers, coefficient lists (lowest degree
    first) and strings such as ``"1"``, ``"a"``, ``"2*a^2 + a + 1"``.

    Parameters
    ----------
    ctx : FieldCtx
        The field F_q.
    text : str, int or sequence of int
        The coefficient.

    Returns
    -------
    FFElement
        The parsed element.
    """
    if isinstance(text, int):
        return ctx.scalar(text)
    if not isinstance(text, str):
        return ctx.element(list(text))
    coeffs = [0] * ctx.degree
    cleaned = text.replace(" ", "").replace("-", "+-")
    for raw in filter(None, cleaned.split("+")):
        sign = -1 if raw.startswith("-") else 1
        token = raw.lstrip("-")
        match = _TERM.match(token)
        if match is None or token == "":
            raise ValueError(f"cannot parse coefficient term {raw!r} in {text!r}")
        number, monomial, exponent = match.groups()
        coeff = int(number) if number is not None else 1
        power = 0 if monomial is None else (int(exponent) if exponent else 1)
        if monomial is None and number is None:
            raise ValueError(f"empty coefficient term in {text!r}")
        if power >= ctx.degree:
            # Reduce generator powers beyond the basis.
            value = ctx.generator() ** power * (sign * coeff)
            coeffs = [c + v for c, v in zip(coeffs, value.coeffs)]
        else:
            coeffs[power] += sign * coeff
    return ctx.element(coeffs)
