"""
Built-in corpus and the self-test suites run by ``ExpSumLab selftest``.

Every suite returns rows (suite, case, detail, passed); a check that
raises a library error is recorded as a failed row with the message.
"""

import json
import logging
import time
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from ExpSumLab.controller.config import ProblemConfig
from ExpSumLab.controller.verifier import verify_congruence, verify_curve
from ExpSumLab.density import (
    ExponentSet,
    build_support_graph,
    density,
    density_bruteforce,
    digit_bijection_holds,
    digit_sets,
    digit_sets_from_solutions,
    min_mean_cycle,
    minimal_solutions,
    minimal_support,
    subset_density_bound_holds,
    support_cycles,
)
from ExpSumLab.hpc import report_progress
from ExpSumLab.dwork import (
    build_problem,
    certified_index_bound,
    cyclic_minor_check,
    l_from_fredholm,
)
from ExpSumLab.lfun import l_series
from ExpSumLab.padic import (
    ExactPiRational,
    check_lambda_congruence,
    lambda_coeffs,
    valuation_meets,
)
from ExpSumLab.utils.constants import (
    CHECK_CASE,
    CHECK_DETAIL,
    CHECK_FLAGGED,
    CHECK_SUITE,
    EMPTY_CORRECTION_OFF,
    EMPTY_CORRECTION_ON,
    PASSED,
    REPORT_SCHEMA_VERSION,
)
from ExpSumLab.utils.errors import ConventionWarning, ExpSumLabError

logger = logging.getLogger(__name__)

SUITES = ("lambda", "density", "digits", "minors", "fredholm", "congruence", "boundary")

DEFAULT_CORPUS: Tuple[ProblemConfig, ...] = (
    ProblemConfig.from_terms(2, 1, {3: "1"}, kmax=4, name="x^3/F2"),
    ProblemConfig.from_terms(2, 1, {1: "1"}, kmax=4, name="x/F2"),
    ProblemConfig.from_terms(2, 1, {5: "1", 3: "1"}, kmax=4, name="x^5+x^3/F2"),
    ProblemConfig.from_terms(2, 2, {3: "1"}, kmax=3, name="x^3/F4"),
    ProblemConfig.from_terms(2, 2, {3: "a"}, kmax=3, name="a*x^3/F4"),
    ProblemConfig.from_terms(3, 1, {2: "1"}, kmax=3, name="x^2/F3"),
    ProblemConfig.from_terms(3, 1, {1: "1"}, kmax=3, name="x/F3"),
    ProblemConfig.from_terms(3, 1, {4: "1", 1: "1"}, kmax=3, name="x^4+x/F3"),
    ProblemConfig.from_terms(5, 1, {2: "1"}, kmax=3, name="x^2/F5"),
    ProblemConfig.from_terms(5, 1, {3: "2"}, kmax=3, name="2*x^3/F5"),
    ProblemConfig.from_terms(2, 1, {(1, 1): "1"}, kmax=3, name="xy/F2"),
    ProblemConfig.from_terms(2, 1, {(1, 0): "1", (0, 1): "1"}, kmax=3, name="x+y/F2"),
    ProblemConfig.from_terms(2, 2, {(1, 1): "a"}, kmax=3, name="a*xy/F4"),
    ProblemConfig.from_terms(3, 1, {(1, 1): "1"}, kmax=3, name="xy/F3"),
    ProblemConfig.from_terms(5, 1, {(1, 1): "1"}, kmax=3, name="xy/F5"),
)

# Cases of the Fredholm suite, with the degree compared.
FREDHOLM_CASES: Tuple[Tuple[str, int], ...] = (
    ("x/F2", 3),
    ("x^3/F2", 3),
    ("x^2/F3", 3),
    ("x/F3", 2),
    ("x^3/F4", 2),
)

CURVE_CASES: Tuple[str, ...] = ("x^3/F2", "x/F2", "x^3/F4")

LAMBDA_PARAMETERS: Tuple[Tuple[int, int], ...] = ((2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (5, 2))


@dataclass(frozen=True)
class CheckRow:
    """
    One self-test check. `flagged` marks a check whose verdict depends on
    a documented convention.
    """

    suite: str
    case: str
    detail: str
    passed: bool
    flagged: bool = False


@dataclass
class SelftestReport:
    """All rows of a self-test run."""

    rows: List[CheckRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def failures(self) -> List[CheckRow]:
        return [row for row in self.rows if not row.passed]

    def suite_passed(self, suite: str) -> bool:
        return all(row.passed for row in self.rows if row.suite == suite)

    def flagged(self) -> List[CheckRow]:
        return [row for row in self.rows if row.flagged]

    def to_table(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    CHECK_SUITE: r.suite,
                    CHECK_CASE: r.case,
                    CHECK_DETAIL: r.detail,
                    PASSED: r.passed,
                    CHECK_FLAGGED: r.flagged,
                }
                for r in self.rows
            ],
            columns=[CHECK_SUITE, CHECK_CASE, CHECK_DETAIL, PASSED, CHECK_FLAGGED],
        )

    def summary(self) -> pd.DataFrame:
        """Checks and failures per suite."""
        table = self.to_table()
        grouped = table.groupby(CHECK_SUITE, sort=False)[PASSED]
        return pd.DataFrame({"checks": grouped.size(), "failed": grouped.apply(lambda s: int((~s).sum()))})

    def to_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "checks": [
                {"suite": r.suite, "case": r.case, "detail": r.detail, "pass": r.passed, "flagged": r.flagged}
                for r in self.rows
            ],
            "verdict": "pass" if self.passed else "fail",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [self.summary().to_string()]
        failures = self.failures()
        if failures:
            lines.append("failures:")
            lines.extend(f"  [{r.suite}] {r.case}: {r.detail}" for r in failures)
        flagged = self.flagged()
        if flagged:
            lines.append("flagged:")
            lines.extend(f"  [{r.suite}] {r.case}: {r.detail}" for r in flagged)
        lines.append(f"verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _guarded(suite: str, case: str, check: Callable[[], Tuple[bool, str]]) -> CheckRow:
    try:
        passed, detail = check()
    except ExpSumLabError as error:
        logger.warning("[%s] %s raised %s", suite, case, error)
        return CheckRow(suite, case, f"{type(error).__name__}: {error}", False)
    return CheckRow(suite, case, detail, bool(passed))


def _exponents(cfg: ProblemConfig) -> ExponentSet:
    return ExponentSet.from_vectors(cfg.D, n=cfg.n)


def _by_name(corpus: Sequence[ProblemConfig], names: Iterable[str]) -> List[ProblemConfig]:
    index = {cfg.name: cfg for cfg in corpus}
    return [index[name] for name in names if name in index]


# --- Suites ---

def lambda_suite(corrupt_lambda: bool = False) -> List[CheckRow]:
    """
    lambda_n against pi^(s_p(n)) / n!! for every n <= 2q; rows where the
    two n!! conventions disagree are flagged.
    """
    rows = []
    for p, m in LAMBDA_PARAMETERS:
        q = p**m
        table = lambda_coeffs(p, m, 2 * q)
        if corrupt_lambda:
            table[1] = table[1] + ExactPiRational(p, [1])
        for n in range(2 * q + 1):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", ConventionWarning)
                report = check_lambda_congruence(p, m, n, table)
            detail = f"valuation {report.valuation}, needed {report.required}"
            if not report.conventions_agree:
                detail += (
                    "; n!! without the top digit "
                    f"{'holds' if report.holds_top_digit_excluded else 'fails'}"
                )
            rows.append(
                CheckRow(
                    "lambda",
                    f"p={p} m={m} n={n}",
                    detail,
                    report.holds,
                    flagged=not report.conventions_agree,
                )
            )
    return rows


def density_suite(corpus: Sequence[ProblemConfig]) -> List[CheckRow]:
    """Minimum cycle mean against brute-force s_{D,p}(r), and the subset bound."""
    rows = []
    for cfg in corpus:
        exponents = _exponents(cfg)

        def check(cfg=cfg, exponents=exponents):
            value = density(exponents, cfg.p)
            R = len(minimal_support(exponents, cfg.p)) + 2
            brute = density_bruteforce(exponents, cfg.p, R)
            bound = subset_density_bound_holds(exponents, cfg.p)
            return value == brute and bound, f"graph {value}, enumeration {brute} (r <= {R})"

        rows.append(_guarded("density", cfg.name, check))
    return rows


def digits_suite(corpus: Sequence[ProblemConfig], max_cycle: int = 4) -> List[CheckRow]:
    """Constant weight of V(e, e'), shift invariance and the digit bijection."""
    rows = []
    for cfg in corpus:
        exponents, p = _exponents(cfg), cfg.p

        def weights(exponents=exponents, p=p):
            sets = digit_sets(exponents, p)
            constant = all(
                sum(vector) == digit_set.weight
                for digit_set in sets.values()
                for vector in digit_set.vectors
            )
            return constant, f"{len(sets)} digit sets"

        rows.append(_guarded("digits", f"{cfg.name} weight", weights))

        def solutions(exponents=exponents, p=p):
            R = len(minimal_support(exponents, p)) + 1
            expected = digit_sets(exponents, p)
            found = digit_sets_from_solutions(exponents, p, R)
            differing = sorted(set(expected) ^ set(found)) + sorted(
                key for key in set(expected) & set(found) if expected[key] != found[key]
            )
            return not differing, f"r <= {R}, differing edges {differing}"

        rows.append(_guarded("digits", f"{cfg.name} solutions", solutions))
        try:
            cycle_data = min_mean_cycle(build_support_graph(exponents, p))
        except ExpSumLabError as error:
            rows.append(CheckRow("digits", cfg.name, f"{type(error).__name__}: {error}", False))
            continue
        cycles = support_cycles(cycle_data, len(cycle_data.critical_nodes))

        def shifts(exponents=exponents, p=p, r=min(map(len, cycles))):
            solutions = minimal_solutions(exponents, p, r)
            stable = set(U.shift() for U in solutions) == set(solutions)
            return stable and bool(solutions), f"{len(solutions)} minimal solutions of length {r}"

        rows.append(_guarded("digits", f"{cfg.name} shift", shifts))
        for phi in cycles:
            if len(phi) > max_cycle:
                continue

            def bijection(exponents=exponents, p=p, phi=phi):
                return digit_bijection_holds(exponents, p, phi), f"cycle {list(phi)}"

            rows.append(_guarded("digits", f"{cfg.name} bijection", bijection))
    return rows


def _minor_index_sets(n: int) -> List[List[Tuple[int, ...]]]:
    if n == 1:
        return [[(1,)], [(1,), (2,)], [(1,), (2,), (3,)]]
    base = [tuple([1] * n)]
    second = tuple([1] * (n - 1) + [2])
    third = tuple([2] + [1] * (n - 1))
    return [base, base + [second], base + [second, third]]


@lru_cache(maxsize=16)
def _minor_context(cfg: ProblemConfig):
    return build_problem(cfg.polynomial(), 1, cfg.precision)


def minors_suite(corpus: Sequence[ProblemConfig]) -> List[CheckRow]:
    """Leibniz determinants of small minors against their cyclic expansions."""
    rows = []
    for cfg in corpus:
        for F in _minor_index_sets(cfg.n):

            def check(cfg=cfg, F=F):
                ctx = _minor_context(cfg)
                return cyclic_minor_check(ctx, F), f"|F| = {len(F)}"

            rows.append(_guarded("minors", f"{cfg.name} F={F}", check))
    return rows


def _fredholm_matches(ctx, exact, index_bound=None) -> Tuple[bool, int]:
    window = ctx.threshold(ctx.k_max)
    series = l_from_fredholm(ctx, index_bound=index_bound, window=window)
    lhs = exact.to_series(ctx.ram)
    return all(valuation_meets((lhs[k] - series[k]).valuation(), window) for k in range(ctx.k_max + 1)), window


def fredholm_suite(corpus: Sequence[ProblemConfig]) -> List[CheckRow]:
    """
    Dwork's determinant product against the exact L-series; a mismatch is
    retried once with the index bound doubled.
    """
    rows = []
    degrees = dict(FREDHOLM_CASES)
    for cfg in _by_name(corpus, degrees):

        def check(cfg=cfg):
            k_max = degrees[cfg.name]
            f = cfg.polynomial()
            ctx = build_problem(f, k_max, cfg.precision)
            exact = l_series(f, k_max, threads=cfg.threads, budget=cfg.rmax_budget)
            bound = certified_index_bound(ctx)
            ok, window = _fredholm_matches(ctx, exact)
            if not ok:
                bound = tuple(2 * b for b in bound)
                logger.warning("%s: Fredholm mismatch, retrying with bound %s", cfg.name, bound)
                ok, window = _fredholm_matches(ctx, exact, bound)
            return ok, f"k <= {k_max}, window varpi^{window}, index bound {bound}"

        rows.append(_guarded("fredholm", cfg.name, check))
    return rows


def congruence_suite(corpus: Sequence[ProblemConfig]) -> List[CheckRow]:
    """verify_congruence on every case, verify_curve on the univariate ones."""
    rows = []
    for cfg in corpus:

        def check(cfg=cfg):
            report = verify_congruence(cfg)
            failing = [row.k for row in report.rows if not row.passed]
            return report.passed, f"k <= {report.k_max}, failing degrees {failing}"

        rows.append(_guarded("congruence", cfg.name, check))
    for cfg in _by_name(corpus, CURVE_CASES):

        def curve(cfg=cfg):
            report = verify_curve(cfg)
            return report.passed, f"numerator {[row.lhs for row in report.rows]}"

        rows.append(_guarded("congruence", f"curve {cfg.name}", curve))
    return rows


def boundary_suite(primes: Sequence[int] = (2, 3), kmax: int = 3) -> List[CheckRow]:
    """f = x over F_p passes with the J = {} correction and fails without it."""
    rows = []
    for p in primes:
        cfg = ProblemConfig.from_terms(p, 1, {1: "1"}, kmax=kmax, name=f"x/F{p}")

        def check(cfg=cfg):
            with_correction = verify_congruence(cfg.with_overrides(empty_correction=EMPTY_CORRECTION_ON))
            without = verify_congruence(cfg.with_overrides(empty_correction=EMPTY_CORRECTION_OFF))
            return (
                with_correction.passed and not without.passed,
                f"with correction {'pass' if with_correction.passed else 'fail'}, "
                f"without {'pass' if without.passed else 'fail'}",
            )

        rows.append(_guarded("boundary", cfg.name, check))
    return rows


def selftest(
    corpus: Optional[Sequence[ProblemConfig]] = None,
    corrupt_lambda: bool = False,
    suites: Sequence[str] = SUITES,
    show_progress: bool = False,
) -> SelftestReport:
    """
    Run the self-test suites.

    Parameters
    ----------
    corpus : Sequence[ProblemConfig], optional
        Problems to check; `DEFAULT_CORPUS` when omitted.
    corrupt_lambda : bool, default=False
        Perturb lambda_1 before the lambda suite (fault injection).
    suites : Sequence[str]
        Subset of `SUITES` to run.
    show_progress : bool, default=False
        Log progress after every suite.

    Returns
    -------
    SelftestReport
        Every check, in suite order.
    """
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites {sorted(unknown)}; choose from {SUITES}")
    corpus = DEFAULT_CORPUS if corpus is None else tuple(corpus)
    runners = {
        "lambda": lambda: lambda_suite(corrupt_lambda),
        "density": lambda: density_suite(corpus),
        "digits": lambda: digits_suite(corpus),
        "minors": lambda: minors_suite(corpus),
        "fredholm": lambda: fredholm_suite(corpus),
        "congruence": lambda: congruence_suite(corpus),
        "boundary": lambda: boundary_suite(),
    }
    selected = [name for name in SUITES if name in suites]
    rows: List[CheckRow] = []
    start = time.time()
    for i, name in enumerate(selected, 1):
        suite_rows = runners[name]()
        rows.extend(suite_rows)
        logger.info(
            "suite %s: %d checks, %d failed", name, len(suite_rows), sum(not r.passed for r in suite_rows)
        )
        if show_progress:
            report_progress(i, len(selected), start, "selftest suites")
    return SelftestReport(rows)
