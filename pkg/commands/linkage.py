"""
Liaison commands: ``residual``, ``link-report`` and ``ci-envelope``.
"""

import logging

from algebra.errors import ParseError
from algebra.liaison import ci_envelope, link, linkage_report, maximal_link_check
from algebra.scheme import analyze
from utils.data_manager import parse_scheme_file, save_report, scheme_to_data
from commands.points import point_index

logger = logging.getLogger(__name__)


def _triple(args):
    W = parse_scheme_file(args.w, args.field)
    X = parse_scheme_file(args.file, args.field)
    return link(W, X)


def run_residual(args):
    """
    Residual scheme Y of X in W and the linkage report of the triple.

    Returns:
        dict: {"title", "Y", "linkage"}.
    """
    triple = _triple(args)
    return {
        "title": f"residual of {triple.X.name} in {triple.W.name}",
        "Y": analyze(triple.Y).to_dict(),
        "linkage": linkage_report(triple).to_dict(),
    }


def run_link_report(args):
    """
    Linkage identities of (W, X, residual), optionally with the maximal
    subscheme check at one point of X.

    Returns:
        dict: {"title", "linkage", "all_pass", "maximal_subscheme"?}.
    """
    triple = _triple(args)
    report = linkage_report(triple)
    out = {"title": f"linkage of {triple.X.name} in {triple.W.name}",
           "linkage": report.to_dict()}
    all_pass = report.all_pass
    if getattr(args, "point", None) is not None:
        j = point_index(triple.X, args.point)
        check = maximal_link_check(triple.W, triple.X, j, Y=triple.Y)
        out["maximal_subscheme"] = dict(check.to_dict(), point=triple.X.labels()[j])
        all_pass = all_pass and check.ok is not False
    out["all_pass"] = all_pass
    return out


def parse_degrees(text):
    """'3,3' -> [3, 3]."""
    try:
        degrees = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError(f"degrees must be integers, got {text!r}", position="--degrees") from exc
    if not degrees or any(d < 1 for d in degrees):
        raise ParseError(f"degrees must be positive, got {text!r}", position="--degrees")
    return degrees


def run_ci_envelope(args):
    """
    Draw a complete intersection W containing X.

    Geometric linkage is required whenever X is given by locally Gorenstein
    components. With ``--output`` the envelope is written as a raw scheme file.

    Returns:
        dict: {"title", "seed", "degrees", "W", "geometric", "written"?}.
    """
    X = parse_scheme_file(args.file, args.field)
    degrees = parse_degrees(args.degrees) if args.degrees else None
    geometric = bool(X.has_components and X.locally_gorenstein)
    W = ci_envelope(X, args.seed, degrees, require_geometric=geometric)
    triple = link(W, X)
    out = {
        "title": f"complete intersection containing {X.name}",
        "seed": args.seed,
        "degrees": W.minimal_generator_degrees,
        "W": analyze(W).to_dict(),
        "geometric": triple.geometric,
    }
    if args.output:
        out["written"] = save_report(scheme_to_data(W), args.output)
    return out
