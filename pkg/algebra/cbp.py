"""
The Cayley-Bacharach property CBP(d), decided by independent methods.

colon        HF of I_W : (I_Y)_{r_W-d-1} in degree d equals HF_X(d)
piece        (I_W)_{r_W-1} : (I_Y)_{r_W-d-1} = (I_X)_d as vector spaces
separators   every point degree is at least d+1
canonical    the degree -d piece of the canonical module has zero annihilator
annihilator  (I_Y + I_X)/I_X in degree r_W-d-1 has zero annihilator on R_X;
             decisive in both directions only for geometric linkage
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from config.settings import CBP_METHOD_ORDER
from algebra.canonical import annihilator_is_zero
from algebra.errors import (
    DegreeOutOfRangeError,
    MethodDisagreementError,
    MissingContextError,
    SocleDirectionError,
)
from algebra.idealops import colon_by_piece, graded_piece, piece_colon
from algebra.linalg import concat, kernel
from algebra.liaison import LinkageTriple
from algebra.polycore import Poly, format_poly
from algebra.scheme import Scheme, point_degrees, separators_of

logger = logging.getLogger(__name__)

TRUE, FALSE, INCONCLUSIVE = "true", "false", "inconclusive"


class CbpMethod(str, Enum):
    COLON = "colon"
    PIECE = "piece"
    SEPARATORS = "separators"
    CANONICAL = "canonical"
    ANNIHILATOR = "annihilator"

    @property
    def needs_context(self) -> bool:
        return self in (CbpMethod.COLON, CbpMethod.PIECE, CbpMethod.ANNIHILATOR)


@dataclass(frozen=True)
class CbpVerdict:
    d: int
    method: CbpMethod
    verdict: str
    evidence: dict = field(default_factory=dict)

    @property
    def holds(self) -> Optional[bool]:
        if self.verdict == INCONCLUSIVE:
            return None
        return self.verdict == TRUE

    def to_dict(self) -> dict:
        return {"d": self.d, "method": self.method.value,
                "verdict": self.verdict, "evidence": self.evidence}


def _verdict(flag: bool) -> str:
    return TRUE if flag else FALSE


def _check_degree(X: Scheme, d: int):
    r = X.regularity_index or 0
    if not 0 <= d <= r - 1:
        raise DegreeOutOfRangeError(f"CBP({d}) is only meaningful for d in 0..{r - 1}")


def _check_context(X: Scheme, context: Optional[LinkageTriple], method: CbpMethod):
    if context is None:
        raise MissingContextError(f"method {method.value} needs a linking scheme W")
    if context.X is not X and not context.X.ideal.equals(X.ideal):
        raise MissingContextError("the linkage triple does not contain this scheme")


# ---------------------------------------------------------------------------
# Individual methods
# ---------------------------------------------------------------------------

def _by_colon(X: Scheme, d: int, t: LinkageTriple) -> CbpVerdict:
    k = t.W.regularity_index - d - 1
    quotient = colon_by_piece(t.W.ideal, t.Y.ideal, k)
    value = quotient.hilbert_function(d)
    evidence = {"piece_degree": k, "hf_colon": value, "hf_X": X.hf(d)}
    return CbpVerdict(d, CbpMethod.COLON, _verdict(value == X.hf(d)), evidence)


def _witness_forms(X: Scheme, t: LinkageTriple, divisors: Sequence[Poly]) -> dict:
    """For each point, a form H in (I_Y)_{r_W-d-1} with H * F_j outside I_W."""
    witnesses = {}
    for j, label in enumerate(X.labels()):
        try:
            separator = separators_of(X, j).standard_separator
        except SocleDirectionError:
            continue
        found = None
        for H in divisors:
            if not t.W.ideal.contains(H * separator):
                found = format_poly(H, monic=True)
                break
        witnesses[label] = found
    return witnesses


def _by_piece(X: Scheme, d: int, t: LinkageTriple) -> CbpVerdict:
    rW = t.W.regularity_index
    top = graded_piece(t.W.ideal, rW - 1)
    divisor = graded_piece(t.Y.ideal, rW - d - 1)
    quotient = piece_colon(top, divisor, d)
    expected = graded_piece(X.ideal, d)
    evidence = {"dim_quotient": quotient.dim, "dim_I_X": expected.dim}
    if X.has_components:
        evidence["witnesses"] = _witness_forms(X, t, divisor.basis)
    return CbpVerdict(d, CbpMethod.PIECE, _verdict(quotient.equals(expected)), evidence)


def _by_separators(X: Scheme, d: int) -> CbpVerdict:
    if not X.has_components:
        return CbpVerdict(d, CbpMethod.SEPARATORS, INCONCLUSIVE,
                          {"reason": "point degrees need a scheme given by components"})
    degrees = dict(zip(X.labels(), point_degrees(X)))
    failing = [label for label, value in degrees.items() if value <= d]
    evidence = {"point_degrees": degrees, "failing": failing}
    return CbpVerdict(d, CbpMethod.SEPARATORS, _verdict(not failing), evidence)


def _by_canonical(X: Scheme, d: int) -> CbpVerdict:
    result = annihilator_is_zero(X, d)
    evidence = {"kernel_dimension": result.dimension, "degree": result.degree}
    if result.witness is not None:
        evidence["witness"] = format_poly(result.witness, monic=True)
    return CbpVerdict(d, CbpMethod.CANONICAL, _verdict(result.is_zero), evidence)


def _by_annihilator(X: Scheme, d: int, t: LinkageTriple) -> CbpVerdict:
    r = X.regularity_index
    k = t.W.regularity_index - d - 1
    forms = t.Y.ideal.piece(k)
    target = r + k
    width = len(X.ideal.standard_monomials(target))
    monos = X.ideal.standard_monomials(r)
    images = []
    for m in monos:
        blocks = [X.ideal.coordinates(H.shift(m), target) for H in forms]
        images.append(concat(blocks, [width] * len(blocks)))
    relations = kernel(images, X.field)
    evidence = {"kernel_dimension": len(relations), "geometric": t.geometric}
    if not relations:
        return CbpVerdict(d, CbpMethod.ANNIHILATOR, TRUE, evidence)
    witness = Poly(X.ring, {monos[k]: X.field(c) for k, c in relations[0].items() if c})
    evidence["witness"] = format_poly(witness, monic=True)
    verdict = FALSE if t.geometric else INCONCLUSIVE
    return CbpVerdict(d, CbpMethod.ANNIHILATOR, verdict, evidence)


def cbp_check(X: Scheme, d: int, method, context: Optional[LinkageTriple] = None) -> CbpVerdict:
    """
    Decide CBP(d) for X by one method.

    Args:
        X (Scheme): The scheme.
        d (int): Degree in 0..r_X-1.
        method (str | CbpMethod): One of colon, piece, separators, canonical, annihilator.
        context (LinkageTriple, optional): Required by colon, piece and annihilator.

    Returns:
        CbpVerdict: true, false or inconclusive, with method-specific evidence.
    """
    method = CbpMethod(method)
    _check_degree(X, d)
    if method.needs_context:
        _check_context(X, context, method)
    if method is CbpMethod.COLON:
        verdict = _by_colon(X, d, context)
    elif method is CbpMethod.PIECE:
        verdict = _by_piece(X, d, context)
    elif method is CbpMethod.SEPARATORS:
        verdict = _by_separators(X, d)
    elif method is CbpMethod.CANONICAL:
        verdict = _by_canonical(X, d)
    else:
        verdict = _by_annihilator(X, d, context)
    logger.debug("CBP(%d) by %s: %s", d, method.value, verdict.verdict)
    return verdict


# ---------------------------------------------------------------------------
# Profiles
# ---------------------------------------------------------------------------

def applicable_methods(X: Scheme, context: Optional[LinkageTriple] = None) -> list:
    methods = [CbpMethod.CANONICAL]
    if context is not None:
        methods += [CbpMethod.PIECE, CbpMethod.COLON]
    if X.has_components:
        methods.append(CbpMethod.SEPARATORS)
    if context is not None:
        methods.append(CbpMethod.ANNIHILATOR)
    return methods


@dataclass
class CbpProfile:
    regularity_index: Optional[int]
    max_d: Optional[int]
    holds: dict
    verdicts: list
    note: str = ""

    def table(self) -> dict:
        """{d: {method: verdict}}."""
        out: dict = {}
        for v in self.verdicts:
            out.setdefault(v.d, {})[v.method.value] = v.verdict
        return out

    def to_dict(self) -> dict:
        return {
            "regularity_index": self.regularity_index,
            "max_d": self.max_d,
            "holds": {str(d): flag for d, flag in self.holds.items()},
            "verdicts": [v.to_dict() for v in self.verdicts],
            "note": self.note,
        }


def cbp_degree(X: Scheme, d: int, context: Optional[LinkageTriple] = None,
               methods: Optional[Sequence] = None):
    """
    Run the chosen methods (default: every applicable one) on CBP(d).

    Returns:
        tuple: (verdicts, holds) where holds is None when no method was conclusive.

    Raises:
        MethodDisagreementError: two conclusive verdicts differ.
    """
    chosen = [CbpMethod(m) for m in methods] if methods else applicable_methods(X, context)
    row = [cbp_check(X, d, m, context) for m in chosen]
    conclusive = {v.holds for v in row if v.holds is not None}
    if len(conclusive) > 1:
        detail = ", ".join(f"{v.method.value}={v.verdict}" for v in row)
        raise MethodDisagreementError(f"methods disagree on CBP({d}): {detail}")
    return row, conclusive.pop() if conclusive else None


def cbp_profile(X: Scheme, context: Optional[LinkageTriple] = None,
                methods: Optional[Sequence] = None) -> CbpProfile:
    """
    Run every applicable method for d = 0..r_X-1 and cross-check them.

    Raises:
        MethodDisagreementError: two conclusive verdicts differ, or the
            verdicts are not monotone in d.
    """
    r = X.regularity_index
    if not r:
        return CbpProfile(r, None, {}, [], "r_X = 0: Cayley-Bacharach holds vacuously")
    verdicts, holds = [], {}
    for d in range(r):
        row, holds[d] = cbp_degree(X, d, context, methods)
        verdicts += row
    known = [d for d, flag in holds.items() if flag is not None]
    for d in known:
        if holds[d] and any(holds[e] is False for e in known if e < d):
            raise MethodDisagreementError(f"CBP({d}) holds but a smaller degree fails")
    true_degrees = [d for d, flag in holds.items() if flag]
    return CbpProfile(r, max(true_degrees) if true_degrees else None, holds, verdicts)


def is_cayley_bacharach(X: Scheme, context: Optional[LinkageTriple] = None) -> bool:
    """CBP(r_X - 1) by the first conclusive method in the configured order."""
    r = X.regularity_index
    if not r:
        logger.info("r_X = 0: Cayley-Bacharach holds vacuously")
        return True
    for name in CBP_METHOD_ORDER:
        method = CbpMethod(name)
        if method.needs_context and context is None:
            continue
        verdict = cbp_check(X, r - 1, method, context)
        if verdict.holds is not None:
            return verdict.holds
    raise MissingContextError("no method could decide the Cayley-Bacharach property")
