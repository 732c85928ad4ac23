"""
Sparse multivariate polynomials over F_q.
"""

from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

from ExpSumLab.ff.field import FFElement, FieldCtx, embed, parse_element

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class SparsePoly:
    """
    Polynomial f = sum_d c_d x^d with coefficients in F_q.

    Attributes
    ----------
    field : FieldCtx
        The coefficient field F_q.
    terms : Tuple[Tuple[Exponent, FFElement], ...]
        Non-zero terms sorted by exponent.
    n : int
        Number of variables.
    """

    field: FieldCtx
    terms: Tuple[Tuple[Exponent, FFElement], ...]
    n: int

    @classmethod
    def from_terms(
        cls, field: FieldCtx, terms: Mapping[Sequence[int], object], n: int = None
    ) -> "SparsePoly":
        """
        Build a polynomial from a mapping exponent -> coefficient.

        Coefficients may be field elements, integers, coefficient lists or
        strings in the generator ``a``; zero coefficients are dropped.
        """
        cleaned: Dict[Exponent, FFElement] = {}
        for exponent, coeff in terms.items():
            exponent = tuple(int(e) for e in exponent)
            if any(e < 0 for e in exponent):
                raise ValueError(f"negative exponent {exponent}")
            if n is None:
                n = len(exponent)
            if len(exponent) != n:
                raise ValueError(f"exponent {exponent} is not in {n} variables")
            if exponent in cleaned:
                raise ValueError(f"duplicate exponent {exponent}")
            if isinstance(coeff, FFElement):
                value = embed(field, coeff)
            else:
                value = parse_element(field, coeff)
            if not value.is_zero():
                cleaned[exponent] = value
        if n is None:
            raise ValueError("cannot infer the number of variables of an empty polynomial")
        return cls(field=field, terms=tuple(sorted(cleaned.items())), n=n)

    @property
    def exponents(self) -> Tuple[Exponent, ...]:
        return tuple(exponent for exponent, _ in self.terms)

    def coefficient(self, exponent: Sequence[int]) -> FFElement:
        for d, c in self.terms:
            if d == tuple(exponent):
                return c
        return self.field.zero()

    def degree(self) -> int:
        """Total degree (the degree of x for univariate polynomials)."""
        return max((sum(d) for d in self.exponents), default=0)

    def negate(self) -> "SparsePoly":
        return SparsePoly(self.field, tuple((d, -c) for d, c in self.terms), self.n)

    def __str__(self) -> str:
        pieces = []
        for d, c in self.terms:
            monomial = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(d) if e
            )
            pieces.append(f"({c!r})*{monomial}" if monomial else f"({c!r})")
        return " + ".join(pieces) if pieces else "0"


def eval_poly(f: SparsePoly, x: Sequence[FFElement]) -> FFElement:
    """
    Evaluate f at a point whose coordinates lie in an extension of F_q.

    Parameters
    ----------
    f : SparsePoly
        The polynomial.
    x : Sequence[FFElement]
        The point, n coordinates in a common field containing F_q.

    Returns
    -------
    FFElement
        sum_d c_d x^d, coefficients embedded by the stored embedding.
    """
    if len(x) != f.n:
        raise ValueError(f"point of dimension {len(x)} for a polynomial in {f.n} variables")
    ctx = x[0].ctx if x else f.field
    value = ctx.zero()
    for exponent, coeff in f.terms:
        term = embed(ctx, coeff)
        for xi, di in zip(x, exponent):
            if di:
                term = term * xi ** di
        value = value + term
    return value


def univariate(field: FieldCtx, coefficients: Mapping[int, object]) -> SparsePoly:
    """Shorthand for a polynomial in one variable, {degree: coefficient}."""
    return SparsePoly.from_terms(field, {(d,): c for d, c in coefficients.items()}, n=1)
