"""
The ``selftest`` command: recompute the golden schemes shipped in data/.

W is the complete intersection of two cubics through seven points (two of
them double), X a degree-5 subscheme linked to a degree-4 residual, X' the
four reduced points on a pencil of conics, and a reduced quartic in P^1.
"""

import logging

from config.settings import (
    CUBICS_W_FILE,
    CUBICS_X_FILE,
    DEFAULT_FIELD,
    P1_QUARTIC_FILE,
    QUADRICS_X_FILE,
    QUADRICS_Y_FILE,
)
from algebra.cbp import CbpMethod, cbp_check, cbp_profile
from algebra.dedekind import dedekind_different
from algebra.liaison import link, linkage_report
from algebra.linalg import rank
from algebra.polycore import parse_poly
from algebra.scheme import is_nonzerodivisor, point_degrees, separators_of
from utils.data_manager import golden_path, parse_scheme_file

logger = logging.getLogger(__name__)

NONZERODIVISOR = "X0^2 + X0*X1 + 1/4*X1^2 - 1/2*X0*X2 - 1/4*X1*X2"
SEPARATOR_P5 = "X1^2 - 2*X1*X2"


class _Checks:
    def __init__(self):
        self.rows = []

    def add(self, group, name, expected, actual):
        self.rows.append({"group": group, "check": name, "expected": expected,
                          "actual": actual, "ok": expected == actual})


def _cubics(checks, field):
    W = parse_scheme_file(golden_path(CUBICS_W_FILE), field)
    X = parse_scheme_file(golden_path(CUBICS_X_FILE), field)
    checks.add("W", "degree", 9, W.degree)
    checks.add("W", "hilbert function", [1, 3, 6, 8, 9], W.hf_table(4))
    checks.add("W", "regularity index", 4, W.regularity_index)
    checks.add("W", "complete intersection", True, W.is_complete_intersection)
    checks.add("X", "degree", 5, X.degree)
    checks.add("X", "hilbert function", [1, 3, 5], X.hf_table(2))
    checks.add("X", "arithmetically Gorenstein", False, X.is_arithmetically_gorenstein)
    checks.add("X", "locally Gorenstein", True, X.locally_gorenstein)
    checks.add("X", "point degrees", [2, 2, 2, 2], point_degrees(X))

    triple = link(W, X)
    Y = triple.Y
    checks.add("Y", "degree", 4, Y.degree)
    checks.add("Y", "hilbert function", [1, 3, 4], Y.hf_table(2))
    checks.add("Y", "alpha_Y/W", 2, triple.alpha_Y)
    checks.add("Y", "geometric linkage", True, triple.geometric)
    checks.add("Y", "linkage report", True, linkage_report(triple).all_pass)
    H = parse_poly(W.ring, NONZERODIVISOR)
    checks.add("Y", "H in I_Y", True, Y.ideal.contains(H))
    checks.add("X", "H is a non-zerodivisor", True, is_nonzerodivisor(X, H))

    profile = cbp_profile(X, triple)
    checks.add("X", "Cayley-Bacharach (all methods)", True, profile.holds.get(1))
    return W


def _quadrics(checks, field, W):
    Xp = parse_scheme_file(golden_path(QUADRICS_X_FILE), field)
    Yp = parse_scheme_file(golden_path(QUADRICS_Y_FILE), field)
    checks.add("X'", "complete intersection", True, Xp.is_complete_intersection)
    checks.add("X'", "Cayley-Bacharach", True,
               cbp_check(Xp, 1, CbpMethod.CANONICAL).holds)

    triple = link(W, Xp)
    checks.add("Y'", "residual matches file", True, triple.Y.ideal.equals(Yp.ideal))
    checks.add("Y'", "degree", 5, triple.Y.degree)
    checks.add("Y'", "shared points", ["p5"], list(triple.shared_points))
    verdict = cbp_check(Xp, 1, CbpMethod.ANNIHILATOR, triple)
    checks.add("Y'", "annihilator verdict", "inconclusive", verdict.verdict)

    j = Xp.labels().index("p5")
    separators = separators_of(Xp, j)
    expected = parse_poly(Xp.ring, SEPARATOR_P5)
    span = rank([Xp.ideal.coordinates(separators.minimal_separator, 2),
                 Xp.ideal.coordinates(expected, 2)], Xp.field)
    checks.add("X'", "separator degree at p5", 2, separators.mu)
    checks.add("X'", "separator at p5 up to scalar", 1, span)

    report = dedekind_different(Xp, seed=0)
    checks.add("X'", "HF of the different", [0, 0, 1, 3, 4], report.hf_delta)
    checks.add("X'", "ri of the different", 4, report.ri_delta)


def _quartic(checks, field):
    X = parse_scheme_file(golden_path(P1_QUARTIC_FILE), field)
    checks.add("P1", "degree", 4, X.degree)
    checks.add("P1", "hilbert function", [1, 2, 3, 4, 4], X.hf_table(4))
    checks.add("P1", "regularity index", 3, X.regularity_index)
    checks.add("P1", "arithmetically Gorenstein", True, X.is_arithmetically_gorenstein)
    profile = cbp_profile(X, methods=[CbpMethod.CANONICAL])
    checks.add("P1", "canonical profile max d", 2, profile.max_d)
    report = dedekind_different(X, seed=0)
    checks.add("P1", "HF of the different", [0, 0, 0, 1, 2, 3, 4], report.hf_delta)


def run_selftest(args):
    """
    Run the golden checks, over the rationals unless --field names a prime field.

    Returns:
        dict: {"title", "checks", "all_pass"}.
    """
    field = args.field or DEFAULT_FIELD
    checks = _Checks()
    W = _cubics(checks, field)
    _quadrics(checks, field, W)
    _quartic(checks, field)
    failures = [row for row in checks.rows if not row["ok"]]
    for row in failures:
        logger.warning("selftest %s / %s: expected %s, got %s",
                       row["group"], row["check"], row["expected"], row["actual"])
    return {"title": f"selftest over {field}", "checks": checks.rows, "all_pass": not failures}
