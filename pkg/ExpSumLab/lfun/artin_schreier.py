"""
The Artin-Schreier curve y^p - y = f(x), its zeta numerator, and the
Galois norm from Q_p(zeta_p) that turns a single-character congruence
into one for the numerator.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

from ExpSumLab.dwork.series import TruncatedSeries
from ExpSumLab.ff.polynomial import SparsePoly
from ExpSumLab.lfun.cyclotomic import CycInt
from ExpSumLab.lfun.exponential_sum import l_series, point_counts
from ExpSumLab.padic import PadicScalar, teichmuller
from ExpSumLab.utils.constants import DEFAULT_POINT_BUDGET, DEFAULT_THREADS
from ExpSumLab.utils.errors import IntegralityError, UnsupportedInputError

logger = logging.getLogger(__name__)


def curve_genus(p: int, degree: int) -> int:
    """(p - 1)(deg f - 1) / 2 for gcd(deg f, p) = 1."""
    return (p - 1) * (degree - 1) // 2


def _check_curve_input(f: SparsePoly) -> int:
    if f.n != 1:
        raise ValueError(f"Artin-Schreier curves need a univariate f, got {f.n} variables")
    degree = f.degree()
    if degree < 1:
        raise UnsupportedInputError("f must be non-constant")
    if gcd(degree, f.field.p) != 1:
        raise UnsupportedInputError(
            f"p = {f.field.p} divides deg f = {degree}; only one point at infinity is handled"
        )
    return degree


def curve_point_count(
    f: SparsePoly, r: int, threads: int = DEFAULT_THREADS, budget: int = DEFAULT_POINT_BUDGET
) -> int:
    """#C(F_{q^r}) = p #{x : Tr f(x) = 0} + 1, the 1 at infinity."""
    counts = point_counts(f, r, threads, budget)
    return f.field.p * int(counts[0]) + 1


@dataclass(frozen=True)
class CurveNumerator:
    """
    P(T) with Z(C, T) = P(T) / ((1 - T)(1 - qT)).

    Attributes
    ----------
    coeffs : Tuple[int, ...]
        c_0 = 1, ..., c_{2g}.
    genus : int
        g.
    q : int
        Size of the base field.
    point_counts : Tuple[int, ...]
        #C(F_{q^r}) for the r that were counted.
    completed_by_functional_equation : bool
        True when only r <= g was counted and c_{g+1}, ..., c_{2g} come
        from c_{2g-k} = q^(g-k) c_k.
    """

    coeffs: Tuple[int, ...]
    genus: int
    q: int
    point_counts: Tuple[int, ...]
    completed_by_functional_equation: bool

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def satisfies_functional_equation(self) -> bool:
        g, c = self.genus, self.coeffs
        return all(c[2 * g - k] == self.q ** (g - k) * c[k] for k in range(g + 1))

    def truncated(self, k_max: int) -> List[int]:
        """c_0, ..., c_{k_max}, zero-padded."""
        return list(self.coeffs[: k_max + 1]) + [0] * max(0, k_max - self.degree)


def _weil_bound_holds(count: int, q: int, r: int, g: int) -> bool:
    # |#C - q^r - 1| <= 2 g q^(r/2), squared to stay in integers.
    deviation = count - q**r - 1
    return deviation * deviation <= 4 * g * g * q**r


def artin_schreier_numerator(
    f: SparsePoly, threads: int = DEFAULT_THREADS, budget: int = DEFAULT_POINT_BUDGET
) -> CurveNumerator:
    """
    Numerator of the zeta function of y^p - y = f(x) over F_q.

    Counts #C(F_{q^r}) for r <= 2g when q^(2g) fits the budget, otherwise
    for r <= g and completes with the functional equation. The power sums
    s_r = q^r + 1 - #C(F_{q^r}) give the coefficients by Newton's
    identities k c_k = -sum_{r=1}^k s_r c_{k-r}.

    Raises
    ------
    UnsupportedInputError
        If p divides deg f.
    IntegralityError
        If a count violates the Weil bound or the result fails the
        functional equation.
    BudgetError
        If even q^g exceeds the budget.
    """
    degree = _check_curve_input(f)
    p, q = f.field.p, f.field.order
    g = curve_genus(p, degree)
    if g == 0:
        return CurveNumerator((1,), 0, q, (), False)

    complete = q ** (2 * g) <= budget
    r_count = 2 * g if complete else g
    counts, coeffs = [], [1]
    for r in range(1, r_count + 1):
        count = curve_point_count(f, r, threads, budget)
        if not _weil_bound_holds(count, q, r, g):
            raise IntegralityError(f"#C(F_{q}^{r}) = {count} violates the Weil bound for g = {g}")
        counts.append(count)
    sums = [q**r + 1 - count for r, count in enumerate(counts, 1)]
    for k in range(1, r_count + 1):
        total = -sum(sums[r - 1] * coeffs[k - r] for r in range(1, k + 1))
        if total % k:
            raise IntegralityError(f"Newton identity gives a non-integral coefficient at T^{k}")
        coeffs.append(total // k)
    if not complete:
        coeffs += [q ** (g - k) * coeffs[k] for k in range(g - 1, -1, -1)]
        logger.info("numerator completed by the functional equation from r <= %d", g)

    numerator = CurveNumerator(tuple(coeffs), g, q, tuple(counts), not complete)
    if not numerator.satisfies_functional_equation():
        raise IntegralityError(f"numerator {coeffs} fails the functional equation")
    return numerator


def conjugate_pi(x: PadicScalar, a: int) -> PadicScalar:
    """
    Image of x under pi -> omega(a) pi, omega the Teichmüller lift.

    Raises
    ------
    ValueError
        If x has a component at a power of varpi that is not a power of pi.
    """
    ram = x.ctx
    omega = teichmuller(ram.base, a)
    components = []
    for j, component in enumerate(x.pi_components()):
        if j % ram.v:
            if not component.is_zero():
                raise ValueError("the norm needs integral powers of pi only")
            components.append(component)
        else:
            components.append(component * omega ** (j // ram.v))
    return ram.scalar(components)


def norm_poly(s: TruncatedSeries, p: int) -> TruncatedSeries:
    """
    N_{Q_p(zeta_p)/Q_p}(s): the product of the conjugates pi -> omega(a) pi,
    a = 1, ..., p - 1, truncated like `s`.
    """
    result = s
    for a in range(2, p):
        result = result * s.map(lambda x, a=a: conjugate_pi(x, a))
    return result


@dataclass(frozen=True)
class CharacterProductReport:
    """prod_a L(A^1, a f; T) against the curve numerator, up to T^k_max."""

    product: Tuple[CycInt, ...]
    numerator: Tuple[int, ...]

    @property
    def mismatches(self) -> Tuple[int, ...]:
        return tuple(k for k, (a, b) in enumerate(zip(self.product, self.numerator)) if a != b)

    @property
    def matches(self) -> bool:
        return not self.mismatches


def character_product_check(
    f: SparsePoly,
    k_max: int,
    threads: int = DEFAULT_THREADS,
    budget: int = DEFAULT_POINT_BUDGET,
) -> CharacterProductReport:
    """
    Compare prod_{a=1}^{p-1} L(f, psi^a; T) with the zeta numerator.

    Conjugation zeta -> zeta^a is exact on Z[zeta_p]. Mismatches are
    logged and reported, not raised.
    """
    _check_curve_input(f)
    p = f.field.p
    series = l_series(f, k_max, threads=threads, budget=budget)
    base = TruncatedSeries(series.coeffs, k_max)
    product = base
    for a in range(2, p):
        product = product * series.conjugate(a)
    numerator = artin_schreier_numerator(f, threads, budget).truncated(k_max)
    report = CharacterProductReport(tuple(product.coeffs), tuple(numerator))
    if not report.matches:
        logger.warning(
            "character product of %s differs from the curve numerator at T^%s",
            f,
            report.mismatches,
        )
    return report
