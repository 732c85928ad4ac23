"""
The matrices M(Gamma_I), their Frobenius-twisted products and the
right-hand side of the congruence

    L(A^n, f; T) = prod_I det(I - q^(n-#I) pi^(m(p-1)delta_I) T
                     M(Gamma_I)^(tau^(m-1)) ... M(Gamma_I))^((-1)^(#I+1))

modulo the ideal of series whose T^k coefficient has q-adic valuation
above delta_p(D) k. The product runs over the subsets I with
delta_p(D_I) + n - #I = delta_p(D).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

from ExpSumLab.density import (
    DigitSet,
    ExponentSet,
    INFINITY,
    density,
    digit_sets,
    minimal_support,
    qualifying_subsets,
)
from ExpSumLab.dwork.matrix import MatrixO, charpoly_divfree, twisted_product
from ExpSumLab.dwork.series import TruncatedSeries
from ExpSumLab.ff.field import make_field
from ExpSumLab.ff.polynomial import SparsePoly
from ExpSumLab.padic import (
    PadicScalar,
    RamCtx,
    UnramCtx,
    UnramElement,
    auto_precision,
    make_ramified,
    teichmuller,
)
from ExpSumLab.utils.constants import (
    DEFAULT_KMAX,
    EMPTY_CORRECTION_AUTO,
    EMPTY_CORRECTION_MODES,
    EMPTY_CORRECTION_ON,
    SIGN_LITERAL,
    SIGN_PROOF,
)
from ExpSumLab.utils.errors import InfiniteDensityError

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class GammaCtx:
    """
    Teichmüller lifts gamma_d of the coefficients c_d of f.

    Attributes
    ----------
    exponents : ExponentSet
        D (or a projected D_I).
    p, m : int
        The prime and the degree of F_q.
    gamma : Dict[Vector, UnramElement]
        d -> gamma_d, keyed by the (projected) exponent.
    """

    exponents: ExponentSet
    p: int
    m: int
    gamma: Dict[Vector, UnramElement] = field(repr=False)

    def restrict(self, indices: Tuple[int, ...]) -> "GammaCtx":
        """Gamma_I, keyed by exponents projected to the coordinates in I."""
        indices = tuple(sorted(indices))
        outside = [j for j in range(self.exponents.n) if j not in indices]
        gamma = {
            tuple(d[i] for i in indices): g
            for d, g in self.gamma.items()
            if all(d[j] == 0 for j in outside)
        }
        return GammaCtx(self.exponents.restrict(indices), self.p, self.m, gamma)


def build_gamma(f: SparsePoly, unram: UnramCtx) -> GammaCtx:
    """Teichmüller-lift the coefficients of f into O_m."""
    residue = make_field(unram.p, unram.m)
    if f.field.p != unram.p or f.field.modulus != residue.modulus:
        raise ValueError(f"coefficients of f must lie in {residue}, got {f.field}")
    gamma = {d: teichmuller(unram, c) for d, c in f.terms}
    exponents = ExponentSet.from_vectors(f.exponents, n=f.n)
    return GammaCtx(exponents, unram.p, unram.m, gamma)


def build_M(
    gamma: GammaCtx,
    sets: Dict[Tuple[Vector, Vector], DigitSet],
    support: Tuple[Vector, ...],
    ram: RamCtx,
) -> MatrixO:
    """
    M(Gamma): entry (e, e') = sum_{V in V(e, e')} prod_d gamma_d^v_d / v_d!.

    Parameters
    ----------
    gamma : GammaCtx
        The lifts, keyed like the exponents of the digit vectors.
    sets : Dict
        Digit sets V(e, e') from `ExpSumLab.density.digit_sets`.
    support : Tuple[Vector, ...]
        The minimal support, the row/column labels.
    ram : RamCtx
        The ring of the entries.

    Returns
    -------
    MatrixO
        N x N matrix, zero where V(e, e') is empty.
    """
    modulo = ram.base.modulo
    order = gamma.exponents.vectors
    inverse_factorials = [pow(factorial(v), -1, modulo) for v in range(ram.p)]
    rows = []
    for e in support:
        row = []
        for e_prime in support:
            entry = ram.zero()
            digit_set = sets.get((e, e_prime))
            if digit_set is not None:
                for vector in digit_set.vectors:
                    term = ram.base.one()
                    scale = 1
                    for d, v_d in zip(order, vector):
                        if v_d:
                            term = term * gamma.gamma[d] ** v_d
                            scale = scale * inverse_factorials[v_d] % modulo
                    entry = entry + ram.scalar(term) * scale
            row.append(entry)
        rows.append(row)
    return MatrixO.from_rows(support, rows)


@dataclass(frozen=True, eq=False)
class SubsetData:
    """
    One factor of the congruence.

    Attributes
    ----------
    indices : Tuple[int, ...]
        I, 0-based.
    exponents : ExponentSet
        D_I projected to N^{#I}.
    density : Fraction
        delta_p(D_I).
    support : Tuple[Vector, ...]
        Sigma_p(D_I).
    matrix : MatrixO
        M(Gamma_I).
    twisted : MatrixO
        tau^(m-1)(M) ... M.
    """

    indices: Tuple[int, ...]
    exponents: ExponentSet
    density: Fraction
    support: Tuple[Vector, ...]
    matrix: MatrixO = field(repr=False)
    twisted: MatrixO = field(repr=False)

    @property
    def sign(self) -> int:
        """(-1)^(#I+1), the exponent of the factor."""
        return 1 if len(self.indices) % 2 == 1 else -1


@dataclass(frozen=True, eq=False)
class ProblemContext:
    """
    Everything the congruence for one polynomial needs.

    Attributes
    ----------
    f : SparsePoly
        The polynomial over F_q.
    exponents : ExponentSet
        Its exponent set D.
    p, m, n : int
        Prime, q = p^m, number of variables.
    k_max : int
        Largest T-degree compared.
    density : Fraction
        delta_p(D).
    u, v : int
        (p - 1) delta_p(D) = u / v in lowest terms.
    ram : RamCtx
        O_m[varpi] / p^K with varpi^v = pi.
    gamma : GammaCtx
        Teichmüller lifts of the coefficients.
    subsets : Tuple[SubsetData, ...]
        The qualifying subsets I, by size then lexicographically.
    """

    f: SparsePoly
    exponents: ExponentSet
    p: int
    m: int
    n: int
    k_max: int
    density: Fraction
    u: int
    v: int
    ram: RamCtx = field(repr=False)
    gamma: GammaCtx = field(repr=False)
    subsets: Tuple[SubsetData, ...] = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def precision(self) -> int:
        return self.ram.K

    @property
    def empty_correction_needed(self) -> bool:
        """True when delta_p(D) = n, the case of a non-trivial J = {} factor."""
        return self.density == self.n

    def threshold(self, k: int) -> int:
        """v_varpi needed at degree k: v_q > delta k iff v_varpi >= m u k + 1."""
        return self.m * self.u * k + 1


def build_problem(f: SparsePoly, k_max: int = DEFAULT_KMAX, precision: int = None) -> ProblemContext:
    """
    Compute densities, supports, digit sets and matrices for every
    qualifying subset of the variables of f.

    Parameters
    ----------
    f : SparsePoly
        A polynomial over F_q = `make_field(p, m)`, without constant term.
    k_max : int
        Largest degree to compare.
    precision : int, optional
        K; `auto_precision` when omitted.

    Returns
    -------
    ProblemContext
        The assembled context.

    Raises
    ------
    InfiniteDensityError
        If f does not involve every variable.
    """
    field_ctx = f.field
    p, m, n = field_ctx.p, field_ctx.degree, f.n
    exponents = ExponentSet.from_vectors(f.exponents, n=n)
    delta = density(exponents, p)
    if delta is INFINITY:
        raise InfiniteDensityError(f"{exponents} lies in a coordinate hyperplane")
    ratio = delta * (p - 1)
    u, v = ratio.numerator, ratio.denominator
    e = v * (p - 1)
    K = precision if precision is not None else auto_precision(e, m, u, k_max)
    ram = make_ramified(p, m, K, v)
    gamma = build_gamma(f, ram.base)
    logger.info(
        "problem %s over F_%d^%d: delta=%s, u=%d, v=%d, K=%d", f, p, m, delta, u, v, K
    )

    subsets = []
    for indices in qualifying_subsets(exponents, p):
        restricted = exponents.restrict(indices)
        gamma_I = gamma.restrict(indices)
        support = minimal_support(restricted, p)
        sets = digit_sets(restricted, p)
        matrix = build_M(gamma_I, sets, support, ram)
        subsets.append(
            SubsetData(
                indices=indices,
                exponents=restricted,
                density=density(restricted, p),
                support=support,
                matrix=matrix,
                twisted=twisted_product(matrix, m),
            )
        )
        logger.debug("subset %s: support %s", indices, support)
    return ProblemContext(
        f=f,
        exponents=exponents,
        p=p,
        m=m,
        n=n,
        k_max=k_max,
        density=delta,
        u=u,
        v=v,
        ram=ram,
        gamma=gamma,
        subsets=tuple(subsets),
    )


def factor_scale(ctx: ProblemContext, subset: SubsetData, convention: str = SIGN_PROOF) -> PadicScalar:
    """
    The constant c of det(I - c T P).

    "proof": q^(n-#I) pi^(m(p-1)delta_I) = q^(n-#I) varpi^(m(u - v(p-1)(n-#I)));
    "literal": pi^(m(p-1)delta) = varpi^(m u).
    """
    ram = ctx.ram
    if convention == SIGN_LITERAL:
        return ram.uniformizer_power(ctx.m * ctx.u)
    if convention != SIGN_PROOF:
        raise ValueError(f"unknown sign convention {convention!r}")
    codim = ctx.n - len(subset.indices)
    exponent = ctx.m * (ctx.u - ctx.v * (ctx.p - 1) * codim)
    return ram.uniformizer_power(exponent) * ctx.q**codim


def rhs_factor(ctx: ProblemContext, subset: SubsetData, convention: str = SIGN_PROOF) -> TruncatedSeries:
    """
    det(I - c T tau^(m-1)(M) ... M) truncated at k_max, c from `factor_scale`.

    The exponent (-1)^(#I+1) is `subset.sign`; it is not applied here.
    """
    ram = ctx.ram
    series = charpoly_divfree(subset.twisted, ctx.k_max, one=ram.one(), zero=ram.zero())
    return series.scale(factor_scale(ctx, subset, convention))


def resolve_correction(ctx: ProblemContext, include_empty_correction: str) -> bool:
    if include_empty_correction not in EMPTY_CORRECTION_MODES:
        raise ValueError(f"unknown correction mode {include_empty_correction!r}")
    if include_empty_correction == EMPTY_CORRECTION_AUTO:
        return ctx.empty_correction_needed
    return include_empty_correction == EMPTY_CORRECTION_ON


def rhs_assemble(
    ctx: ProblemContext,
    include_empty_correction: str = EMPTY_CORRECTION_AUTO,
    convention: str = SIGN_PROOF,
) -> TruncatedSeries:
    """
    prod_I rhs_factor(I)^((-1)^(#I+1)), times (1 - q^n T)^(-1) when the
    J = {} correction applies.

    Parameters
    ----------
    ctx : ProblemContext
        The problem.
    include_empty_correction : {"auto", "on", "off"}
        "auto" applies the correction exactly when delta_p(D) = n.
    convention : {"proof", "literal"}
        Form of the scaling constant, see `factor_scale`.
    """
    ram = ctx.ram
    total = TruncatedSeries.one(ram.one(), ctx.k_max)
    for subset in ctx.subsets:
        total = total * rhs_factor(ctx, subset, convention).power(subset.sign)
    if resolve_correction(ctx, include_empty_correction):
        correction = TruncatedSeries([ram.one(), ram.scalar(-(ctx.q**ctx.n))], ctx.k_max)
        total = total * correction.inverse()
    return total
