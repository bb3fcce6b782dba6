"""
The ``cbp`` command: Cayley-Bacharach verdicts and the method agreement table.
"""

import logging

from algebra.cbp import FALSE, INCONCLUSIVE, TRUE, cbp_degree, cbp_profile
from algebra.liaison import link
from utils.data_manager import parse_scheme_file

logger = logging.getLogger(__name__)


def run_cbp(args):
    """
    Decide CBP(d) for one d, or the whole profile d = 0..r_X-1.

    W-based methods (colon, piece, annihilator) run only when ``-w`` is given.

    Returns:
        dict: {"title", "d", "verdict", "verdicts"} for one degree, otherwise
        {"title", "profile", "cayley_bacharach"}.
    """
    X = parse_scheme_file(args.file, args.field)
    context = None
    if args.w:
        context = link(parse_scheme_file(args.w, args.field), X)
    methods = [args.method] if args.method else None

    if args.d is not None:
        row, holds = cbp_degree(X, args.d, context, methods)
        return {
            "title": f"CBP({args.d}) of {X.name}",
            "d": args.d,
            "verdict": INCONCLUSIVE if holds is None else (TRUE if holds else FALSE),
            "verdicts": [v.to_dict() for v in row],
        }

    profile = cbp_profile(X, context, methods)
    r = profile.regularity_index
    return {
        "title": f"Cayley-Bacharach profile of {X.name}",
        "profile": profile.to_dict(),
        "cayley_bacharach": True if not r else profile.holds.get(r - 1),
    }
