"""
Command controller: maps subcommand names to the library calls behind
them and turns each result into a printable text and a JSON payload.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Union

import pandas as pd

from ExpSumLab.controller.config import ProblemConfig
from ExpSumLab.controller.selftest import SUITES, selftest
from ExpSumLab.controller.verifier import verify_congruence, verify_curve
from ExpSumLab.density import (
    INFINITY,
    ExponentSet,
    build_support_graph,
    density_report,
    min_mean_cycle,
    qualifying_subsets,
)
from ExpSumLab.dwork import build_problem
from ExpSumLab.lfun import CycInt, artin_schreier_numerator, character_product_check, l_series
from ExpSumLab.utils.constants import REPORT_SCHEMA_VERSION

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """
    Outcome of one subcommand.

    Attributes
    ----------
    command : str
        Subcommand name.
    text : str
        Human-readable output for standard output.
    payload : dict
        JSON report body (without the schema version).
    passed : bool
        Verdict; informational commands always pass.
    """

    command: str
    text: str
    payload: Dict[str, Any] = field(repr=False)
    passed: bool = True

    def to_json(self) -> str:
        body = {"schema_version": REPORT_SCHEMA_VERSION, "command": self.command}
        body.update(self.payload)
        return json.dumps(body, sort_keys=True, indent=2)


def _cyc_json(a: Union[CycInt, int]) -> list:
    return [a] if isinstance(a, int) else list(a.coeffs)


def _exponents(cfg: ProblemConfig) -> ExponentSet:
    return ExponentSet.from_vectors(cfg.D, n=cfg.n)


class Controller:
    """
    Runs subcommands on a `ProblemConfig`.
    """

    def __init__(self) -> None:
        self.command_name_to_method: Dict[str, Callable[..., CommandResult]] = {
            "density": self.density,
            "support": self.support,
            "matrix": self.matrix,
            "lseries": self.lseries,
            "curve": self.curve,
            "verify": self.verify,
            "selftest": self.selftest,
        }

    @property
    def commands(self):
        return tuple(self.command_name_to_method)

    def handle_input_command(
        self,
        command: str,
        config: Optional[ProblemConfig] = None,
        **options,
    ) -> CommandResult:
        """
        Run `command`; every command except ``selftest`` needs a config.

        Raises
        ------
        ValueError
            For an unknown command or a missing config.
        """
        try:
            method = self.command_name_to_method[command]
        except KeyError:
            raise ValueError(f"unknown command {command!r}; valid commands are {self.commands}") from None
        if command == "selftest":
            return method(**options)
        if config is None:
            raise ValueError(f"command {command!r} needs a problem configuration")
        logger.info("running %s on %s", command, config.name or "inline problem")
        return method(config, **options)

    @staticmethod
    def density(cfg: ProblemConfig) -> CommandResult:
        """Density, minimal support, digit sets and qualifying subsets."""
        exponents = _exponents(cfg)
        report = density_report(exponents, cfg.p)
        subsets = [] if report.density is INFINITY else qualifying_subsets(exponents, cfg.p)
        payload = report.to_dict()
        payload["qualifying_subsets"] = [[i + 1 for i in I] for I in subsets]

        table = pd.DataFrame(
            [
                {
                    "from": e,
                    "to": e_prime,
                    "weight": digit_set.weight,
                    "vectors": list(digit_set.vectors),
                }
                for (e, e_prime), digit_set in sorted(report.digit_sets.items())
            ],
            columns=["from", "to", "weight", "vectors"],
        )
        lines = [
            f"D = {list(exponents.vectors)}, p = {cfg.p}",
            f"density = {report.density}  (minimum cycle mean {report.mean})",
            f"minimal support ({report.support_size}): {list(report.support)}",
            f"qualifying I: {payload['qualifying_subsets']}",
        ]
        if not table.empty:
            lines.append(table.to_string(index=False))
        return CommandResult("density", "\n".join(lines), payload)

    @staticmethod
    def support(cfg: ProblemConfig) -> CommandResult:
        """Edges of the digit graph, critical ones flagged."""
        exponents = _exponents(cfg)
        graph = build_support_graph(exponents, cfg.p)
        cycle_data = min_mean_cycle(graph)
        critical = set(cycle_data.critical_edges)
        table = pd.DataFrame(
            [
                {
                    "from": e,
                    "to": e_prime,
                    "weight": data["weight"],
                    "digit_vectors": len(data["digits"]),
                    "critical": (e, e_prime) in critical,
                }
                for e, e_prime, data in sorted(graph.graph.edges(data=True))
            ],
            columns=["from", "to", "weight", "digit_vectors", "critical"],
        )
        payload = {
            "nodes": [list(e) for e in graph.nodes],
            "edges": [
                {
                    "from": list(row["from"]),
                    "to": list(row["to"]),
                    "weight": int(row["weight"]),
                    "critical": bool(row["critical"]),
                }
                for row in table.to_dict("records")
            ],
            "mean": str(cycle_data.mean),
            "critical_nodes": [list(e) for e in cycle_data.critical_nodes],
        }
        text = "\n".join(
            [
                f"{len(graph.nodes)} nodes, {len(table)} edges, minimum cycle mean {cycle_data.mean}",
                table.to_string(index=False),
            ]
        )
        return CommandResult("support", text, payload)

    @staticmethod
    def matrix(cfg: ProblemConfig) -> CommandResult:
        """M(Gamma_I) for every qualifying subset, entries as varpi-adic vectors."""
        ctx = build_problem(cfg.polynomial(), 1, cfg.precision)
        blocks, lines = [], [f"K = {ctx.precision}, varpi^{ctx.ram.e} = -{ctx.p}"]
        for subset in ctx.subsets:
            labels = [str(e) for e in subset.support]
            frame = pd.DataFrame(
                [[repr(a) for a in row] for row in subset.matrix.rows()],
                index=labels,
                columns=labels,
            )
            I = [i + 1 for i in subset.indices]
            lines.append(f"I = {I}, delta_I = {subset.density}, size {subset.matrix.size}")
            lines.append(frame.to_string())
            blocks.append(
                {
                    "I": I,
                    "delta": str(subset.density),
                    "support": [list(e) for e in subset.support],
                    "entries": [
                        [[list(c) for c in a.components] for a in row] for row in subset.matrix.rows()
                    ],
                }
            )
        payload = {"precision": ctx.precision, "e": ctx.ram.e, "subsets": blocks}
        return CommandResult("matrix", "\n".join(lines), payload)

    @staticmethod
    def lseries(cfg: ProblemConfig) -> CommandResult:
        """Exponential sums and the exact L-series in Z[zeta_p]."""
        exact = l_series(cfg.polynomial(), cfg.kmax, threads=cfg.threads, budget=cfg.rmax_budget)
        table = pd.DataFrame(
            {
                "k": range(exact.k_max + 1),
                "S_k": ["-"] + [repr(s) for s in exact.sums],
                "a_k": [repr(a) for a in exact.coeffs],
            }
        )
        payload = {
            "problem": cfg.to_dict(),
            "zeta_basis": f"1, z, ..., z^{cfg.p - 2} with z = zeta_{cfg.p}",
            "sums": [_cyc_json(s) for s in exact.sums],
            "coefficients": [_cyc_json(a) for a in exact.coeffs],
        }
        return CommandResult("lseries", table.to_string(index=False), payload)

    @staticmethod
    def curve(cfg: ProblemConfig) -> CommandResult:
        """Zeta numerator of y^p - y = f(x), the character product and the norm congruence."""
        f = cfg.polynomial()
        numerator = artin_schreier_numerator(f, cfg.threads, cfg.rmax_budget)
        product = character_product_check(f, cfg.kmax, cfg.threads, cfg.rmax_budget)
        report = verify_curve(cfg)
        if not product.matches:
            logger.warning("character product differs from the curve numerator at T^%s", product.mismatches)
        payload = {
            "genus": numerator.genus,
            "numerator": list(numerator.coeffs),
            "point_counts": list(numerator.point_counts),
            "completed_by_functional_equation": numerator.completed_by_functional_equation,
            "character_product_matches": product.matches,
            "congruence": report.to_dict(),
        }
        lines = [
            f"genus {numerator.genus}, P(T) = {list(numerator.coeffs)}",
            f"#C(F_q^r) = {list(numerator.point_counts)}"
            + (" (completed by the functional equation)" if numerator.completed_by_functional_equation else ""),
            f"character product: {'matches' if product.matches else f'differs at T^{product.mismatches}'}",
            report.to_text(),
        ]
        return CommandResult("curve", "\n".join(lines), payload, report.passed)

    @staticmethod
    def verify(cfg: ProblemConfig, include_timing: bool = False) -> CommandResult:
        """The congruence between L(f) and the product of determinants."""
        report = verify_congruence(cfg)
        payload = report.to_dict(include_timing)
        payload.pop("schema_version")
        return CommandResult("verify", report.to_text(), payload, report.passed)

    @staticmethod
    def selftest(
        corrupt_lambda: bool = False, suites=SUITES, show_progress: bool = False
    ) -> CommandResult:
        """Built-in corpus; fails when any check fails."""
        report = selftest(corrupt_lambda=corrupt_lambda, suites=suites, show_progress=show_progress)
        payload = report.to_dict()
        payload.pop("schema_version")
        return CommandResult("selftest", report.to_text(), payload, report.passed)
