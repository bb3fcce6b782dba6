"""
Operations on homogeneous ideals: sum, product, intersection, colon ideals,
saturation by X0 and the vector-space colon of two graded pieces.

Intersections and colons are built one degree at a time as kernels of exact
linear maps. When the result is known to have X0 as a non-zerodivisor, the
construction stops at the first degree d with HF(d-1) = HF(d): from there on
the Artinian reduction vanishes, and the rows collected so far already
contain the reduced Gröbner basis.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from config import settings
from algebra.errors import DegreeOutOfRangeError, NotZeroDimensionalError, VacuousPieceWarning
from algebra.gbasis import GroebnerBasis, HomogIdeal
from algebra.linalg import EchelonForm, concat, intersect_spans, kernel, rank
from algebra.polycore import Poly, PolyRing, mono_divides, order_key

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _index(nvars: int, d: int, modulo_x0: bool) -> tuple:
    from algebra.polycore import monomials_of_degree

    monos = monomials_of_degree(nvars, d)
    if modulo_x0:
        monos = tuple(m for m in monos if m[0] == 0)
    return monos, {m: k for k, m in enumerate(monos)}


def poly_vector(f: Poly, d: int, modulo_x0: bool = False) -> dict:
    """Coordinates of a degree-d form in the monomial basis of P_d (or of P_d mod X0)."""
    index = _index(f.ring.nvars, d, modulo_x0)[1]
    if modulo_x0:
        return {index[m]: c for m, c in f.terms.items() if m[0] == 0}
    return {index[m]: c for m, c in f.terms.items()}


def vector_poly(ring: PolyRing, vec: dict, d: int, modulo_x0: bool = False) -> Poly:
    monos = _index(ring.nvars, d, modulo_x0)[0]
    return Poly(ring, {monos[k]: ring.field(c) for k, c in vec.items() if c})


@dataclass(frozen=True)
class GradedSubspace:
    """A K-basis of forms of one degree, in reduced echelon form."""

    ring: PolyRing
    degree: int
    basis: tuple
    modulo_x0: bool = False

    @classmethod
    def spanned_by(cls, ring: PolyRing, degree: int, polys: Iterable[Poly],
                   modulo_x0: bool = False) -> "GradedSubspace":
        ech = EchelonForm(field=ring.field)
        for f in polys:
            ring.check(f.ring)
            if f and f.degree != degree:
                raise DegreeOutOfRangeError(f"{f} is not of degree {degree}")
            ech.insert(poly_vector(f, degree, modulo_x0))
        basis = tuple(vector_poly(ring, row, degree, modulo_x0) for _, row in ech.rows())
        return cls(ring, degree, basis, modulo_x0)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list:
        return [poly_vector(f, self.degree, self.modulo_x0) for f in self.basis]

    def contains(self, f: Poly) -> bool:
        if not f:
            return True
        if f.degree != self.degree:
            return False
        ech = EchelonForm(field=self.ring.field)
        for vec in self.vectors():
            ech.insert(vec)
        return ech.contains(poly_vector(f, self.degree, self.modulo_x0))

    def equals(self, other: "GradedSubspace") -> bool:
        if self.degree != other.degree or self.dim != other.dim:
            return False
        return rank(self.vectors() + other.vectors(), self.ring.field) == self.dim

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def graded_piece(ideal: HomogIdeal, d: int, modulo_x0: bool = False) -> GradedSubspace:
    """I_d, or its image in P/(X0) when modulo_x0 is set."""
    return GradedSubspace.spanned_by(ideal.ring, d, ideal.piece(d), modulo_x0)


# ---------------------------------------------------------------------------
# Degree-by-degree construction
# ---------------------------------------------------------------------------

def ideal_from_pieces(ring: PolyRing, piece_at: Callable[[int], Iterable[dict]],
                      x0_regular: bool = True, cap: Optional[int] = None) -> HomogIdeal:
    """
    Assemble an ideal from spanning vectors of its graded pieces.

    Args:
        ring (PolyRing): Ambient ring.
        piece_at (callable): Degree d -> vectors spanning I_d over the monomials of P_d.
        x0_regular (bool): Whether X0 is known to be a non-zerodivisor on P/I;
            enables the early stop.
        cap (int, optional): Last degree to compute.

    Returns:
        HomogIdeal: with a complete basis when the early stop fired, else truncated at cap.
    """
    bound = cap if cap is not None else settings.DEGREE_SAFETY_BOUND
    selected = []
    previous = None
    for d in range(bound + 1):
        monos = ring.graded_basis(d)
        ech = EchelonForm(field=ring.field)
        for vec in piece_at(d):
            ech.insert(vec)
        hf = len(monos) - ech.rank
        for pivot, row in ech.rows():
            lm = monos[pivot]
            if not any(mono_divides(g.lm, lm) for g in selected):
                selected.append(vector_poly(ring, row, d))
        if x0_regular and previous is not None and hf == previous:
            logger.debug("pieces stable at degree %d (HF %d)", d, hf)
            polys = tuple(sorted(selected, key=lambda p: order_key(p.lm), reverse=True))
            basis = GroebnerBasis(ring, polys)
            return HomogIdeal(ring, polys, basis=basis)
        previous = hf
    if x0_regular and cap is None:
        raise NotZeroDimensionalError(
            f"Hilbert function still changing at the safety bound {bound}")
    polys = tuple(sorted(selected, key=lambda p: order_key(p.lm), reverse=True))
    return HomogIdeal(ring, polys, basis=GroebnerBasis(ring, polys, cap=bound), cap=bound)


def _working_cap(*ideals: HomogIdeal) -> int:
    caps = [I.cap for I in ideals if I.cap is not None]
    if caps:
        return min(caps)
    return 2 * max(I.max_basis_degree for I in ideals) + 2


def _x0_regular(ideal: HomogIdeal) -> bool:
    return ideal.cap is None and ideal.is_saturated


# ---------------------------------------------------------------------------
# Ideal operations
# ---------------------------------------------------------------------------

def combine(I: HomogIdeal, J: HomogIdeal, mode: str) -> HomogIdeal:
    """Sum, product or intersection of two ideals of the same ring."""
    I.ring.check(J.ring)
    ring = I.ring
    if mode == "sum":
        return HomogIdeal(ring, I.generators + J.generators)
    if mode == "product":
        return HomogIdeal(ring, [f * g for f in I.generators for g in J.generators])
    if mode != "intersect":
        raise ValueError(f"unknown mode {mode!r}")

    def piece_at(d):
        first = [poly_vector(f, d) for f in I.piece(d)]
        second = [poly_vector(f, d) for f in J.piece(d)]
        return intersect_spans(first, second, ring.field)

    if _x0_regular(I) and _x0_regular(J):
        return ideal_from_pieces(ring, piece_at)
    return ideal_from_pieces(ring, piece_at, x0_regular=False, cap=_working_cap(I, J))


def intersect_all(ring: PolyRing, ideals: Sequence[HomogIdeal]) -> HomogIdeal:
    if not ideals:
        return HomogIdeal.unit(ring)
    result = ideals[0]
    for J in ideals[1:]:
        result = combine(result, J, "intersect")
    return result


def _colon_by_forms(I: HomogIdeal, forms: Sequence[Poly]) -> HomogIdeal:
    ring = I.ring
    forms = [g for g in forms if g]
    if not forms or I.is_unit:
        return HomogIdeal.unit(ring)

    def piece_at(d):
        monos = ring.graded_basis(d)
        widths = [len(I.standard_monomials(d + g.degree)) for g in forms]
        images = []
        for m in monos:
            blocks = [I.coordinates(g.shift(m), d + g.degree) for g in forms]
            images.append(concat(blocks, widths))
        return kernel(images, ring.field)

    if _x0_regular(I):
        return ideal_from_pieces(ring, piece_at)
    cap = _working_cap(I) - max(g.degree for g in forms)
    return ideal_from_pieces(ring, piece_at, x0_regular=False, cap=max(cap, 0))


def colon(I: HomogIdeal, J: HomogIdeal) -> HomogIdeal:
    """I : J = {f : f J ⊆ I}."""
    I.ring.check(J.ring)
    return _colon_by_forms(I, list(J.generators))


def colon_by_piece(I: HomogIdeal, J: HomogIdeal, k: int) -> HomogIdeal:
    """I : <J_k>; an empty piece leaves I unchanged and warns."""
    I.ring.check(J.ring)
    piece = J.piece(k)
    if not piece:
        message = f"degree {k} piece of the divisor ideal is zero; colon left unchanged"
        logger.warning(message)
        warnings.warn(message, VacuousPieceWarning, stacklevel=2)
        return I
    return _colon_by_forms(I, piece)


def saturate_x0(I: HomogIdeal) -> HomogIdeal:
    """I : X0^infinity, by dividing basis elements by their X0 powers."""
    ideal = I
    while not ideal.is_saturated:
        divided = [g.divide_x0(g.x0_order()) for g in ideal.basis]
        ideal = HomogIdeal(ideal.ring, divided, cap=ideal.cap)
    return ideal


def piece_colon(Ipiece: GradedSubspace, Jpiece: GradedSubspace, target_degree: int,
                modulo_x0: bool = False) -> GradedSubspace:
    """{f in P_d : f * Jpiece ⊆ span(Ipiece)}, optionally inside P/(X0)."""
    d = target_degree
    if Ipiece.degree != d + Jpiece.degree:
        raise DegreeOutOfRangeError(
            f"piece degrees {Ipiece.degree} and {Jpiece.degree} do not fit target degree {d}")
    ring = Ipiece.ring
    ring.check(Jpiece.ring)
    top = Ipiece.degree
    ech = EchelonForm(field=ring.field)
    for f in Ipiece.basis:
        ech.insert(poly_vector(f, top, modulo_x0))
    width = len(_index(ring.nvars, top, modulo_x0)[0])
    divisors = [g.drop_x0_terms() if modulo_x0 else g for g in Jpiece.basis]
    monos = _index(ring.nvars, d, modulo_x0)[0]
    images = []
    for m in monos:
        blocks = [ech.reduce(poly_vector(g.shift(m), top, modulo_x0)) for g in divisors]
        images.append(concat(blocks, [width] * len(blocks)))
    polys = [vector_poly(ring, relation, d, modulo_x0) for relation in kernel(images, ring.field)]
    return GradedSubspace.spanned_by(ring, d, polys, modulo_x0)
