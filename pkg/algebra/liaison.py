"""
Linkage of 0-dimensional schemes by an arithmetically Gorenstein scheme W.

The residual of X in W has ideal I_W : I_X. Linkage reports verify the
degree, regularity and Hilbert function identities of a linked triple, and
ci_envelope draws random complete intersections containing X.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from config.settings import ENVELOPE_COEFF_BOUND, ENVELOPE_RETRY_BUDGET
from algebra.errors import (
    ComponentsRequiredError,
    DegreeOutOfRangeError,
    NotGorensteinError,
    NotSubschemeError,
    RetryBudgetExhaustedError,
    SchemeError,
)
from algebra.idealops import colon, combine, graded_piece, piece_colon
from algebra.polycore import evaluate, linear_combination
from algebra.scheme import (
    Scheme,
    _at,
    ci_hilbert_function,
    maximal_subscheme,
    scheme_from_ideal,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinkageTriple:
    W: Scheme
    X: Scheme
    Y: Scheme
    alpha_Y: Optional[int]
    alpha_X: Optional[int]
    geometric: Optional[bool]
    shared_points: tuple = ()


def relative_alpha(W: Scheme, Z: Scheme) -> Optional[int]:
    """alpha_{Z/W}: least degree where I_Z is larger than I_W (None if I_Z = I_W)."""
    top = max(W.regularity_index or 0, Z.regularity_index or 0) + 1
    for i in range(top + 1):
        if W.hf(i) != Z.hf(i):
            return i
    return None


def residual(W: Scheme, X: Scheme) -> Scheme:
    """
    The residual scheme Y of X in W, with I_Y = I_W : I_X.

    Raises:
        NotGorensteinError: W is not arithmetically Gorenstein.
        NotSubschemeError: I_W is not contained in I_X.
    """
    W.ring.check(X.ring)
    if not W.is_arithmetically_gorenstein:
        raise NotGorensteinError(f"{W.name or 'W'} is not arithmetically Gorenstein")
    if not W.contains_scheme(X):
        raise NotSubschemeError(f"{X.name or 'X'} is not a subscheme of {W.name or 'W'}")
    linked = colon(W.ideal, X.ideal)
    name = f"residual of {X.name}" if X.name else "Y"
    return scheme_from_ideal(linked.basis, ring=W.ring, name=name)


def _shared_points(X: Scheme, Y: Scheme) -> tuple:
    basis = Y.ideal.basis
    return tuple(label for label, p in zip(X.labels(), X.points)
                 if all(not evaluate(g, p) for g in basis))


def geometric_linkage(X: Scheme, Y: Scheme) -> tuple:
    """(flag, shared point labels); flag is None when neither scheme has components."""
    if X.has_components:
        shared = _shared_points(X, Y)
        return not shared, shared
    if Y.has_components:
        shared = _shared_points(Y, X)
        return not shared, shared
    return None, ()


def link(W: Scheme, X: Scheme, Y: Optional[Scheme] = None) -> LinkageTriple:
    """Build the linked triple (W, X, residual); Y may be given when already known."""
    if Y is None:
        Y = residual(W, X)
    geometric, shared = geometric_linkage(X, Y)
    return LinkageTriple(W, X, Y, relative_alpha(W, Y), relative_alpha(W, X), geometric, shared)


def is_geometrically_linked(t: LinkageTriple) -> Optional[bool]:
    return t.geometric


# ---------------------------------------------------------------------------
# Linkage report
# ---------------------------------------------------------------------------

@dataclass
class LinkageCheck:
    name: str
    expected: object
    actual: object
    ok: Optional[bool]
    degree: Optional[int] = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class LinkageReport:
    degrees: dict
    regularity: dict
    alpha_Y: Optional[int]
    alpha_X: Optional[int]
    geometric: Optional[bool]
    shared_points: list
    linked_hf: list
    checks: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.ok is not False for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.ok is False]

    def to_dict(self) -> dict:
        out = {k: v for k, v in self.__dict__.items() if k != "checks"}
        out["checks"] = [c.to_dict() for c in self.checks]
        out["all_pass"] = self.all_pass
        return out


def _check(report: LinkageReport, name: str, expected, actual, degree=None):
    report.checks.append(LinkageCheck(name, expected, actual, expected == actual, degree))


def linkage_report(t: LinkageTriple) -> LinkageReport:
    """Verify the identities of a linked triple, one row per identity and degree."""
    W, X, Y = t.W, t.X, t.Y
    rW, rX, rY = W.regularity_index, X.regularity_index, Y.regularity_index
    report = LinkageReport(
        degrees={"W": W.degree, "X": X.degree, "Y": Y.degree},
        regularity={"W": rW, "X": rX, "Y": rY},
        alpha_Y=t.alpha_Y,
        alpha_X=t.alpha_X,
        geometric=t.geometric,
        shared_points=list(t.shared_points),
        linked_hf=[W.hf(i) - Y.hf(i) for i in range(rW + 1)],
    )
    _check(report, "degree additivity", W.degree, X.degree + Y.degree)
    if Y.is_empty:
        report.checks.append(LinkageCheck("regularity r_W = r_X + alpha_Y/W", rW,
                                          None if rX is None else rX + (t.alpha_Y or 0), None))
    else:
        _check(report, "regularity r_W = r_X + alpha_Y/W", rW, rX + t.alpha_Y)
        _check(report, "regularity r_W = r_Y + alpha_X/W", rW, rY + t.alpha_X)

    for i in range(rW + 1):
        _check(report, "HF of I_Y/W", X.degree - X.hf(rW - i - 1), report.linked_hf[i], i)

    if not Y.is_empty and not X.is_empty and rW == rX + t.alpha_Y:
        top = graded_piece(W.ideal, rW, modulo_x0=True)
        for d in range(1, rX + 1):
            divisor = graded_piece(Y.ideal, t.alpha_Y + rX - d, modulo_x0=True)
            quotient = piece_colon(top, divisor, d, modulo_x0=True)
            expected = graded_piece(X.ideal, d, modulo_x0=True)
            report.checks.append(LinkageCheck(
                "reduction mod X0 piece colon", expected.dim, quotient.dim,
                quotient.equals(expected), d))

    double = colon(W.ideal, Y.ideal)
    report.checks.append(LinkageCheck("double residual", X.ideal.max_basis_degree,
                                      double.max_basis_degree, double.equals(X.ideal)))
    if t.geometric:
        meet = combine(X.ideal, Y.ideal, "intersect")
        report.checks.append(LinkageCheck("I_W = I_X ∩ I_Y", W.degree, meet.hilbert.degree,
                                          meet.equals(W.ideal)))
    logger.info("linkage report: %d checks, %d failures",
                len(report.checks), len(report.failures()))
    return report


# ---------------------------------------------------------------------------
# Complete intersection envelopes
# ---------------------------------------------------------------------------

def ci_envelope(X: Scheme, seed: int, degrees: Optional[Sequence[int]] = None,
                require_geometric: bool = True, budget: int = ENVELOPE_RETRY_BUDGET,
                bound: int = ENVELOPE_COEFF_BOUND) -> Scheme:
    """
    A random complete intersection W containing X.

    Args:
        X (Scheme): The scheme to enclose.
        seed (int): Seed of the coefficient generator; echoed on failure.
        degrees (list[int], optional): One degree per form; defaults to the
            largest minimal generator degree of I_X for every form.
        require_geometric (bool): Retry until X and its residual share no point.
        budget (int): Number of attempts.
        bound (int): Coefficients are drawn from -bound..bound over Q.

    Returns:
        Scheme: raw-mode W, arithmetically Gorenstein and a complete intersection.
    """
    ring = X.ring
    n = ring.n
    if require_geometric:
        X.require_components("geometric linkage")
        if not X.locally_gorenstein:
            raise NotGorensteinError(
                "geometric linkage needs a locally Gorenstein scheme")
    if degrees is None:
        top = max(X.minimal_generator_degrees)
        degrees = [top] * n
    degrees = [int(d) for d in degrees]
    if len(degrees) != n:
        raise DegreeOutOfRangeError(f"need {n} degrees, got {len(degrees)}")
    pieces = {}
    for d in set(degrees):
        pieces[d] = X.ideal.piece(d)
        if not pieces[d]:
            raise DegreeOutOfRangeError(f"I_X has no forms of degree {d}")
    expected = ci_hilbert_function(degrees)

    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        forms = []
        for d in degrees:
            coeffs = [ring.field.random_element(rng, bound) for _ in pieces[d]]
            forms.append(linear_combination(ring, coeffs, pieces[d]))
        try:
            W = scheme_from_ideal(forms, ring=ring, name="W")
        except SchemeError as exc:
            logger.debug("envelope attempt %d rejected: %s", attempt, exc)
            continue
        if any(W.hf(i) != _at(expected, i) for i in range(len(expected) + 1)):
            logger.debug("envelope attempt %d: not a complete intersection", attempt)
            continue
        if require_geometric:
            triple = link(W, X)
            if not triple.geometric:
                logger.debug("envelope attempt %d: shares %s", attempt, triple.shared_points)
                continue
        logger.info("envelope of degrees %s accepted at attempt %d (seed %s)",
                    degrees, attempt, seed)
        return W
    raise RetryBudgetExhaustedError("no complete intersection envelope found",
                                    seed=seed, attempts=budget)


# ---------------------------------------------------------------------------
# Maximal subschemes on both sides of a link
# ---------------------------------------------------------------------------

@dataclass
class MaximalLinkCheck:
    ok: Optional[bool]
    degree_Y: int
    degree_Yprime: Optional[int]
    contained: Optional[bool]
    local_change_only: Optional[bool]
    Xprime: Optional[Scheme] = None
    Yprime: Optional[Scheme] = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {k: v for k, v in self.__dict__.items() if k not in ("Xprime", "Yprime")}
        if self.Yprime is not None:
            out["Yprime_basis"] = [str(g) for g in self.Yprime.ideal.basis]
        return out


def maximal_link_check(W: Scheme, X: Scheme, j: int, socle_dir: Optional[dict] = None,
                       Y: Optional[Scheme] = None) -> MaximalLinkCheck:
    """
    Check that removing a socle line of X at p_j adds one at p_j to the residual.

    Y' = residual(W, X') must contain Y with colength one, and I_Y times the
    ideal of p_j must lie in I_Y'.
    """
    if not X.has_components:
        raise ComponentsRequiredError("maximal subschemes need a scheme given by components")
    if Y is None:
        Y = residual(W, X)
    Xp = maximal_subscheme(X, j, socle_dir)
    if Xp.is_empty:
        return MaximalLinkCheck(None, Y.degree, None, None, None, Xp, None,
                                "X has a single reduced point; X' is empty")
    Yp = residual(W, Xp)
    contained = Y.ideal.contains_ideal(Yp.ideal)
    point = X.points[j]
    ring = X.ring
    x0 = ring.var(0)
    linear = [ring.var(k) - x0 * a for k, a in enumerate(point.coords) if k > 0]
    local_only = all(Yp.ideal.contains(L * g) for L in linear for g in Y.ideal.basis)
    ok = Yp.degree == Y.degree + 1 and contained and local_only
    return MaximalLinkCheck(ok, Y.degree, Yp.degree, contained, local_only, Xp, Yp)
