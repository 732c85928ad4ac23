"""
Command line entry point: ``ExpSumLab <command> --config problem.toml``.

Human-readable output goes to standard output, the JSON report to
``--out`` and logs to standard error. Exit codes: 0 pass, 1 fail,
2 input error, 3 budget error, 4 precision or integrality error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from ExpSumLab.controller.commands import Controller
from ExpSumLab.controller.config import load_config
from ExpSumLab.controller.selftest import SUITES
from ExpSumLab.utils.constants import (
    EMPTY_CORRECTION_MODES,
    EXIT_BUDGET_ERROR,
    EXIT_FAIL,
    EXIT_INPUT_ERROR,
    EXIT_PASS,
    EXIT_PRECISION_ERROR,
    SIGN_CONVENTIONS,
)
from ExpSumLab.utils.errors import BudgetError, IntegralityError, PrecisionError
from ExpSumLab.utils.logging_setup import configure_logging

logger = logging.getLogger(__name__)

COMMANDS = ("density", "support", "matrix", "lseries", "curve", "verify", "selftest")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ExpSumLab",
        description="p-adic congruences for L-functions of exponential sums over finite fields.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", type=Path, help="TOML problem file (all commands but selftest)")
    parser.add_argument("--out", type=Path, help="write the JSON report here")
    parser.add_argument("--kmax", type=int, help="largest T-degree compared")
    parser.add_argument("--budget", type=int, help="largest number of points counted")
    parser.add_argument("--threads", type=int, help="workers for point counting")
    parser.add_argument("--precision", type=int, help="p-adic precision K (default: automatic)")
    parser.add_argument("--correction", choices=EMPTY_CORRECTION_MODES, help="J = {} correction")
    parser.add_argument("--sign", choices=SIGN_CONVENTIONS, help="sign convention of the factors")
    parser.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
    parser.add_argument("--suite", action="append", choices=SUITES, help="selftest suite (repeatable)")
    parser.add_argument("--corrupt-lambda", action="store_true", help="selftest fault injection")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse `argv`, run the command and return the exit code.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    controller = Controller()

    try:
        if args.command == "selftest":
            result = controller.handle_input_command(
                "selftest",
                corrupt_lambda=args.corrupt_lambda,
                suites=tuple(args.suite or SUITES),
                show_progress=args.verbose > 0,
            )
        else:
            if args.config is None:
                raise ValueError(f"{args.command} needs --config")
            config = load_config(args.config).with_overrides(
                kmax=args.kmax,
                rmax_budget=args.budget,
                threads=args.threads,
                precision=args.precision,
                empty_correction=args.correction,
                sign_convention=args.sign,
            )
            options = {"include_timing": args.timing} if args.command == "verify" else {}
            result = controller.handle_input_command(args.command, config, **options)
    except BudgetError as error:
        logger.error("%s", error)
        return EXIT_BUDGET_ERROR
    except (PrecisionError, IntegralityError) as error:
        logger.error("%s", error)
        return EXIT_PRECISION_ERROR
    except ValueError as error:
        logger.error("%s", error)
        return EXIT_INPUT_ERROR

    print(result.text)
    if args.out is not None:
        args.out.write_text(result.to_json() + "\n", encoding="utf-8")
        logger.info("report written to %s", args.out)
    return EXIT_PASS if result.passed else EXIT_FAIL


def entry_point() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entry_point()
