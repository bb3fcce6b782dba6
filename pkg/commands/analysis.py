"""
The ``analyze`` command: degree, Hilbert function and structure flags.
"""

import logging

from algebra.errors import ParseError
from algebra.polycore import format_poly, parse_poly
from algebra.scheme import analyze, is_nonzerodivisor
from utils.data_manager import parse_scheme_file

logger = logging.getLogger(__name__)


def run_analyze(args):
    """
    Analyze one scheme file.

    Args:
        args (argparse.Namespace): ``file``, ``field`` and optional ``form``s
            to test as non-zerodivisors on R_X.

    Returns:
        dict: {"title", "scheme", "nonzerodivisors"?}.
    """
    X = parse_scheme_file(args.file, args.field)
    report = {"title": f"analyze {X.name}", "scheme": analyze(X).to_dict()}
    forms = getattr(args, "form", None) or []
    if forms:
        results = []
        for k, text in enumerate(forms):
            try:
                H = parse_poly(X.ring, text)
            except ParseError as exc:
                raise ParseError(str(exc), position=f"--form[{k}]") from exc
            results.append({"form": format_poly(H), "nonzerodivisor": is_nonzerodivisor(X, H)})
        report["nonzerodivisors"] = results
    return report
