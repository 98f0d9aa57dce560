"""
Command-line entry: argument parsing, logging setup, exit codes, output
"""

from __future__ import annotations

import argparse
import logging
import sys

from pydantic import ValidationError

from cfrac.errors import CFError
from cfrac.fast import EVALUATORS, METHODS
from utils.config import Config
from utils.parsing import parse_index, parse_m_list
from utils.report import RunReport

from .bench import DEFAULT_INPUTS, cmd_bench
from .convergent import cmd_convergent
from .expand import cmd_expand
from .identities import cmd_identities
from .verify_paper import cmd_verify_paper

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_ORDER = 6


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfrac",
        description="Exact continued fractions and fast convergents of quadratic irrationals",
    )
    parser.add_argument("--json", action="store_true", help="print the report as JSON")
    parser.add_argument("--seed", type=int, default=None, help="random seed (default CF_SEED or 0)")
    parser.add_argument("--max-steps", type=int, default=None, help="Hurwitz iteration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand a quadratic irrational")
    p.add_argument("input", help='e.g. "sqrt(7)", "4/3 + sqrt(3)/6", "sqrt(9+10i)"')
    p.add_argument("--hurwitz", action="store_true", help="nearest Gaussian integer expansion")

    p = sub.add_parser("convergent", help="compute p_m, q_m")
    p.add_argument("input")
    p.add_argument("m", type=parse_index)
    p.add_argument("--method", choices=METHODS, default="nested")
    p.add_argument("--order", type=int, default=None, help="Householder order d")
    p.add_argument("--evaluator", choices=EVALUATORS, default="matrix")
    p.add_argument("--verify", action="store_true", help="cross-check against direct iteration")
    p.add_argument("--hurwitz", action="store_true")

    p = sub.add_parser("identities", help="run the randomized identity suite")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)

    sub.add_parser("verify-paper", help="recompute the published reference values")

    p = sub.add_parser("bench", help="time and count every method")
    p.add_argument("--m-list", type=parse_m_list, default="1000,10000")
    p.add_argument("--inputs", nargs="+", default=list(DEFAULT_INPUTS))
    p.add_argument("--hurwitz", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--repeats", type=int, default=None)
    p.add_argument("--out", "--json-out", dest="out", default=None, help="write the report to a file")
    return parser


def dispatch(args) -> RunReport:
    seed = Config.get_seed() if args.seed is None else args.seed
    if args.command == "expand":
        return cmd_expand(args.input, args.hurwitz, args.max_steps)
    if args.command == "convergent":
        return cmd_convergent(
            args.input, args.m, args.method, args.order, args.verify,
            args.hurwitz, args.evaluator, args.max_steps,
        )
    if args.command == "identities":
        trials = args.trials if args.trials is not None else Config.get_identity_trials()
        max_k = args.max_k if args.max_k is not None else Config.get_identity_max_k()
        return cmd_identities(trials, seed, max_k)
    if args.command == "verify-paper":
        return cmd_verify_paper()
    return cmd_bench(
        args.m_list, args.inputs, args.out, args.hurwitz,
        args.workers, args.repeats, args.max_steps,
    )


def _emit(report: RunReport, as_json: bool):
    print(report.to_json() if as_json else report.to_text())


def main(argv=None) -> int:
    logging.basicConfig(
        level=Config.get_log_level(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logger.debug("Config: %s", Config.get_config_summary())

    command = args.command
    try:
        report = dispatch(args)
    except CFError as e:
        report = getattr(e, "report", None) or RunReport(command=command)
        report = report.failed(f"{type(e).__name__}: {e}", e.exit_code)
    except ValidationError as e:
        report = RunReport(command=command).failed(f"Invalid configuration: {e.errors()[0]['msg']}", EXIT_ORDER)
    except ValueError as e:
        report = RunReport(command=command).failed(f"{type(e).__name__}: {e}", EXIT_USAGE)

    if report.success and report.agreement is False:
        report = report.failed("Cross-check disagreed", EXIT_FAILURE)

    _emit(report, args.json)
    if report.success:
        print(f"✓ {command}", file=sys.stderr)
    else:
        print(f"✗ {command}: {report.error}", file=sys.stderr)
    return report.exit_code
