"""
cblink - Main Application

Command-line entry point: parses scheme files, dispatches to the commands
package and prints text tables or JSON.
"""

import argparse
import logging
import sys

from config import runtime_setting, settings
from config.settings import (
    APP_DESCRIPTION,
    APP_TITLE,
    APP_VERSION,
    CBP_METHODS,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    EXIT_CHECKS_FAILED,
    EXIT_OK,
    EXIT_VALIDATION,
    LOG_FORMAT,
    LOG_LEVEL,
    OUTPUT_FORMATS,
)
from algebra.errors import SchemeError
from commands import (
    run_analyze,
    run_cbp,
    run_ci_envelope,
    run_dedekind,
    run_link_report,
    run_point_degrees,
    run_residual,
    run_selftest,
    run_separators,
)
from utils.report_tables import emit

logger = logging.getLogger(__name__)


def setup_app(verbosity=0):
    """
    Configure logging once for the process.

    Args:
        verbosity (int): Number of -v flags; 1 selects INFO, 2 or more DEBUG.
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, str(runtime_setting("LOG_LEVEL", LOG_LEVEL)).upper(), logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None,
                        help="base field, Q or Fp:<p> (overrides the scheme file)")
    common.add_argument("--seed", type=int, default=runtime_setting("SEED", DEFAULT_SEED),
                        help="seed of every randomized construction")
    common.add_argument("--cap", type=int, default=None,
                        help="degree bound of the degree-by-degree constructions")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT,
                        help="output format")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress (-vv for per-degree detail)")
    return common


def build_parser():
    """
    The argparse parser with one subcommand per verb.

    Returns:
        argparse.ArgumentParser: The parser; each subcommand sets ``handler``.
    """
    common = _common_options()
    parser = argparse.ArgumentParser(prog=APP_TITLE, description=APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"{APP_TITLE} {APP_VERSION}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    analyze = verbs.add_parser("analyze", parents=[common], help="degree, HF and structure flags")
    analyze.add_argument("file")
    analyze.add_argument("--form", action="append",
                         help="form to test as a non-zerodivisor on R_X (repeatable)")
    analyze.set_defaults(handler=run_analyze)

    residual = verbs.add_parser("residual", parents=[common], help="residual scheme of X in W")
    residual.add_argument("-w", required=True, help="arithmetically Gorenstein scheme W")
    residual.add_argument("file")
    residual.set_defaults(handler=run_residual)

    report = verbs.add_parser("link-report", parents=[common], help="linkage identities")
    report.add_argument("-w", required=True, help="arithmetically Gorenstein scheme W")
    report.add_argument("file")
    report.add_argument("--point", type=int, default=None,
                        help="also check the maximal subscheme at p_j (1-based)")
    report.set_defaults(handler=run_link_report)

    cbp = verbs.add_parser("cbp", parents=[common], help="Cayley-Bacharach verdicts")
    cbp.add_argument("-w", default=None, help="linking scheme W for colon, piece, annihilator")
    cbp.add_argument("file")
    cbp.add_argument("--d", type=int, default=None, help="single degree; profile when absent")
    cbp.add_argument("--method", choices=CBP_METHODS, default=None)
    cbp.set_defaults(handler=run_cbp)

    separators = verbs.add_parser("separators", parents=[common], help="minimal separators")
    separators.add_argument("file")
    separators.add_argument("--point", type=int, default=None, help="only p_j (1-based)")
    separators.set_defaults(handler=run_separators)

    degrees = verbs.add_parser("point-degrees", parents=[common], help="degrees of the points")
    degrees.add_argument("file")
    degrees.set_defaults(handler=run_point_degrees)

    dedekind = verbs.add_parser("dedekind", parents=[common], help="HF of the Dedekind different")
    dedekind.add_argument("file")
    dedekind.set_defaults(handler=run_dedekind)

    envelope = verbs.add_parser("ci-envelope", parents=[common],
                                help="random complete intersection containing X")
    envelope.add_argument("file")
    envelope.add_argument("--degrees", default=None, help="comma separated, e.g. 3,3")
    envelope.add_argument("--output", default=None, help="write W as a scheme file")
    envelope.set_defaults(handler=run_ci_envelope)

    selftest = verbs.add_parser("selftest", parents=[common], help="golden scheme checks")
    selftest.set_defaults(handler=run_selftest)
    return parser


def run(args):
    """
    Dispatch a parsed command to its implementation.

    Args:
        args (argparse.Namespace): Namespace produced by build_parser().

    Returns:
        dict: The command's report.
    """
    logger.info("running %s", args.verb)
    return args.handler(args)


def main(argv=None):
    """
    Run one subcommand.

    Args:
        argv (list[str], optional): Arguments without the program name.

    Returns:
        int: Process exit code.
    """
    args = build_parser().parse_args(argv)
    setup_app(args.verbose)
    saved_cap = settings.DEGREE_SAFETY_BOUND
    if args.cap is not None:
        if args.cap < 1:
            print(f"error: --cap must be positive, got {args.cap}", file=sys.stderr)
            return EXIT_VALIDATION
        settings.DEGREE_SAFETY_BOUND = args.cap
    try:
        report = run(args)
        print(emit(report, args.format))
    except SchemeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    finally:
        settings.DEGREE_SAFETY_BOUND = saved_cap
    if report.get("all_pass") is False:
        return EXIT_CHECKS_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
