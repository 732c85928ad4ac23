"""
Coefficient-by-coefficient verification of the congruence for L(A^n, f; T)
and of its analogue for the Artin-Schreier curve numerator.

Coefficient k passes when v_varpi(LHS_k - RHS_k) >= m u k + 1, the integer
form of v_q(LHS_k - RHS_k) > delta k with (p - 1) delta = u / v.
"""

import json
import logging
import time
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import pandas as pd

from ExpSumLab.controller.config import ProblemConfig
from ExpSumLab.density import minimal_support
from ExpSumLab.dwork import (
    ProblemContext,
    TruncatedSeries,
    build_problem,
    resolve_correction,
    rhs_assemble,
)
from ExpSumLab.lfun import (
    artin_schreier_numerator,
    l_series,
    max_degree_within_budget,
    norm_poly,
)
from ExpSumLab.padic import Valuation, valuation_meets, valuation_to_json
from ExpSumLab.utils.constants import (
    DEGREE,
    DIFFERENCE_VALUATION,
    EMPTY_CORRECTION_OFF,
    EMPTY_CORRECTION_ON,
    LHS_COEFFICIENT,
    PASSED,
    REPORT_SCHEMA_VERSION,
    RHS_COEFFICIENT,
    SIGN_BOTH,
    SIGN_LITERAL,
    SIGN_PROOF,
    THRESHOLD,
    THRESHOLD_NOTE,
)
from ExpSumLab.utils.errors import BudgetError, ConventionWarning

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientRow:
    """One degree of the comparison."""

    k: int
    lhs: str
    rhs: str
    valuation: Valuation
    threshold: int

    @property
    def passed(self) -> bool:
        return valuation_meets(self.valuation, self.threshold)


@dataclass
class VerifyReport:
    """
    Outcome of one verification.

    Attributes
    ----------
    kind : str
        "congruence" or "curve".
    config : ProblemConfig
        The verified problem.
    k_max : int
        Largest degree compared (may be below ``config.kmax`` when the
        point budget does not allow more).
    delta : Fraction
        delta_p(D).
    u, v : int
        (p - 1) delta = u / v.
    precision : int
        p-adic precision K.
    subsets : List[Tuple[Tuple[int, ...], Fraction]]
        Qualifying subsets I with delta_p(D_I).
    support : Tuple
        Sigma_p(D).
    convention : str
        Scaling convention of `rows`.
    correction_applied : bool
        Whether (1 - q^n T)^(-1) was included.
    rows : List[CoefficientRow]
        Per-degree comparison.
    literal_passed : bool, optional
        Verdict under the literal convention (sign_convention "both").
    alternate_correction_passed : bool, optional
        Verdict with the J = {} correction toggled, recorded when
        delta_p(D) = n.
    seconds : float
        Wall time, only serialized on request.
    """

    kind: str
    config: ProblemConfig
    k_max: int
    delta: Fraction
    u: int
    v: int
    precision: int
    subsets: List[Tuple[Tuple[int, ...], Fraction]]
    support: Tuple
    convention: str
    correction_applied: bool
    rows: List[CoefficientRow]
    literal_passed: Optional[bool] = None
    alternate_correction_passed: Optional[bool] = None
    seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "kind": self.kind,
            "threshold_rule": THRESHOLD_NOTE,
            "problem": self.config.to_dict(),
            "kmax": self.k_max,
            "delta": str(self.delta),
            "u": self.u,
            "v": self.v,
            "precision": self.precision,
            "subsets": [
                {"I": [i + 1 for i in indices], "delta": str(value)}
                for indices, value in self.subsets
            ],
            "support": [list(e) for e in self.support],
            "support_size": len(self.support),
            "convention": self.convention,
            "empty_correction_applied": self.correction_applied,
            "coefficients": [
                {
                    "k": row.k,
                    "lhs": row.lhs,
                    "rhs": row.rhs,
                    "valuation": valuation_to_json(row.valuation),
                    "threshold": row.threshold,
                    "pass": row.passed,
                }
                for row in self.rows
            ],
            "literal_pass": self.literal_passed,
            "alternate_correction_pass": self.alternate_correction_passed,
            "verdict": "pass" if self.passed else "fail",
        }
        if include_timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    def to_table(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    DEGREE: row.k,
                    LHS_COEFFICIENT: row.lhs,
                    RHS_COEFFICIENT: row.rhs,
                    DIFFERENCE_VALUATION: str(row.valuation),
                    THRESHOLD: row.threshold,
                    PASSED: row.passed,
                }
                for row in self.rows
            ],
            columns=[DEGREE, LHS_COEFFICIENT, RHS_COEFFICIENT, DIFFERENCE_VALUATION, THRESHOLD, PASSED],
        )

    def to_text(self) -> str:
        """Header and per-coefficient table for the terminal."""
        cfg = self.config
        lines = [
            f"{self.kind} check{' ' + cfg.name if cfg.name else ''}: p={cfg.p} m={cfg.m} n={cfg.n}",
            f"delta = {self.delta}  ((p-1)delta = {self.u}/{self.v})  K = {self.precision}",
            f"qualifying I: "
            + ", ".join(f"{[i + 1 for i in I]} (delta_I = {d})" for I, d in self.subsets),
            f"minimal support ({len(self.support)}): {list(self.support)}",
            f"convention: {self.convention}, empty-set correction: "
            f"{'applied' if self.correction_applied else 'not applied'}",
            THRESHOLD_NOTE,
            self.to_table().to_string(index=False),
            f"verdict: {'PASS' if self.passed else 'FAIL'}",
        ]
        if self.literal_passed is not None:
            lines.append(f"literal convention: {'PASS' if self.literal_passed else 'FAIL'}")
        if self.alternate_correction_passed is not None:
            state = "without" if self.correction_applied else "with"
            lines.append(
                f"{state} the empty-set correction: "
                f"{'PASS' if self.alternate_correction_passed else 'FAIL'}"
            )
        return "\n".join(lines)


def compare_series(
    ctx: ProblemContext, lhs: TruncatedSeries, rhs: TruncatedSeries, lhs_labels: List[str]
) -> List[CoefficientRow]:
    """Rows (k, v_varpi(lhs_k - rhs_k), m u k + 1) for k = 0..k_max."""
    rows = []
    for k in range(ctx.k_max + 1):
        difference = lhs[k] - rhs[k]
        rows.append(
            CoefficientRow(
                k=k,
                lhs=lhs_labels[k],
                rhs=repr(rhs[k]),
                valuation=difference.valuation(),
                threshold=ctx.threshold(k),
            )
        )
    return rows


def _all_pass(rows: List[CoefficientRow]) -> bool:
    return all(row.passed for row in rows)


def _effective_kmax(cfg: ProblemConfig, f) -> int:
    k_max = min(cfg.kmax, max_degree_within_budget(f, cfg.rmax_budget))
    if k_max < 1:
        raise BudgetError(f"A^{cfg.n}(F_{cfg.q})", cfg.q**cfg.n, cfg.rmax_budget)
    if k_max < cfg.kmax:
        logger.warning("kmax reduced from %d to %d by the point budget", cfg.kmax, k_max)
    return k_max


def _conventions(cfg: ProblemConfig) -> Tuple[str, bool]:
    """Main convention and whether the literal one is reported alongside."""
    if cfg.sign_convention == SIGN_BOTH:
        return SIGN_PROOF, True
    return cfg.sign_convention, False


def _warn_literal(cfg: ProblemConfig, main_passed: bool, literal_passed: Optional[bool]):
    if main_passed and literal_passed is False:
        warnings.warn(
            f"{cfg.name or 'problem'}: literal scaling convention fails where the proof form passes",
            ConventionWarning,
            stacklevel=3,
        )


def _report(kind, cfg, ctx, convention, correction, rows, literal, alternate, start) -> VerifyReport:
    return VerifyReport(
        kind=kind,
        config=cfg,
        k_max=ctx.k_max,
        delta=ctx.density,
        u=ctx.u,
        v=ctx.v,
        precision=ctx.precision,
        subsets=[(s.indices, s.density) for s in ctx.subsets],
        support=minimal_support(ctx.exponents, ctx.p),
        convention=convention,
        correction_applied=correction,
        rows=rows,
        literal_passed=literal,
        alternate_correction_passed=alternate,
        seconds=time.perf_counter() - start,
    )


def verify_congruence(cfg: ProblemConfig) -> VerifyReport:
    """
    Compare the exact L-series of f with the product of determinants.

    Parameters
    ----------
    cfg : ProblemConfig
        The problem and run options.

    Returns
    -------
    VerifyReport
        Per-coefficient valuations, thresholds and the verdict.

    Raises
    ------
    BudgetError, PrecisionError, UnsupportedInputError, InfiniteDensityError
        Propagated from the computation.
    """
    start = time.perf_counter()
    f = cfg.polynomial()
    k_max = _effective_kmax(cfg, f)
    ctx = build_problem(f, k_max, cfg.precision)
    exact = l_series(f, k_max, threads=cfg.threads, budget=cfg.rmax_budget)
    lhs = exact.to_series(ctx.ram)
    labels = [repr(a) for a in exact.coeffs]

    convention, report_literal = _conventions(cfg)
    correction = resolve_correction(ctx, cfg.empty_correction)
    rhs = rhs_assemble(ctx, cfg.empty_correction, convention)
    rows = compare_series(ctx, lhs, rhs, labels)

    literal = None
    if report_literal:
        literal = _all_pass(
            compare_series(ctx, lhs, rhs_assemble(ctx, cfg.empty_correction, SIGN_LITERAL), labels)
        )
        _warn_literal(cfg, _all_pass(rows), literal)

    alternate = None
    if ctx.empty_correction_needed:
        toggled = EMPTY_CORRECTION_OFF if correction else EMPTY_CORRECTION_ON
        alternate = _all_pass(compare_series(ctx, lhs, rhs_assemble(ctx, toggled, convention), labels))

    report = _report("congruence", cfg, ctx, convention, correction, rows, literal, alternate, start)
    logger.info("congruence %s: %s", cfg.name or f, "pass" if report.passed else "fail")
    return report


def verify_curve(cfg: ProblemConfig) -> VerifyReport:
    """
    Compare the zeta numerator of y^p - y = f(x) with the Galois norm of
    the single-variable right-hand side.

    Raises
    ------
    ValueError
        If the problem has more than one variable.
    UnsupportedInputError
        If p divides deg f.
    """
    start = time.perf_counter()
    if cfg.n != 1:
        raise ValueError("curve verification needs a univariate f")
    f = cfg.polynomial()
    numerator = artin_schreier_numerator(f, cfg.threads, cfg.rmax_budget)
    ctx = build_problem(f, cfg.kmax, cfg.precision)
    ram = ctx.ram
    coefficients = numerator.truncated(cfg.kmax)
    lhs = TruncatedSeries([ram.scalar(c) for c in coefficients], cfg.kmax, ram.zero())
    labels = [str(c) for c in coefficients]

    convention, report_literal = _conventions(cfg)
    correction = resolve_correction(ctx, cfg.empty_correction)

    def side(mode: str, form: str) -> TruncatedSeries:
        return norm_poly(rhs_assemble(ctx, mode, form), ctx.p)

    rows = compare_series(ctx, lhs, side(cfg.empty_correction, convention), labels)
    literal = None
    if report_literal:
        literal = _all_pass(compare_series(ctx, lhs, side(cfg.empty_correction, SIGN_LITERAL), labels))
        _warn_literal(cfg, _all_pass(rows), literal)
    alternate = None
    if ctx.empty_correction_needed:
        toggled = EMPTY_CORRECTION_OFF if correction else EMPTY_CORRECTION_ON
        alternate = _all_pass(compare_series(ctx, lhs, side(toggled, convention), labels))

    report = _report("curve", cfg, ctx, convention, correction, rows, literal, alternate, start)
    logger.info("curve %s: %s", cfg.name or f, "pass" if report.passed else "fail")
    return report
