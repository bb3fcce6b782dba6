"""
The ``dedekind`` command: Hilbert functions of the complementary module and
the Dedekind different.
"""

import logging

from algebra.cbp import CbpMethod, cbp_profile
from algebra.dedekind import dedekind_checks, dedekind_different
from utils.data_manager import parse_scheme_file

logger = logging.getLogger(__name__)


def run_dedekind(args):
    """
    HF of C and of the different for a seeded trace map, plus the degree
    bounds that tie it to the Cayley-Bacharach degree.

    Returns:
        dict: {"title", "dedekind"}.
    """
    X = parse_scheme_file(args.file, args.field)
    report = dedekind_different(X, seed=args.seed)
    profile = cbp_profile(X, methods=[CbpMethod.CANONICAL])
    dedekind_checks(X, report, profile.max_d)
    return {"title": f"Dedekind different of {X.name}", "dedekind": report.to_dict()}
