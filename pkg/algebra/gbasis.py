"""
Gröbner bases of homogeneous ideals and their Hilbert data.

Buchberger's algorithm runs with the normal strategy (all S-pairs of one
degree before the next), so stopping after a degree cap D leaves a basis that
answers every question about degrees <= D exactly. Hilbert functions come from
the Hilbert series numerator of the leading-term ideal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from algebra.errors import CapExceededError, NotHomogeneousError, NotZeroDimensionalError
from algebra.polycore import (
    Monomial,
    Poly,
    PolyRing,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    order_key,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Reduction
# ---------------------------------------------------------------------------

def _reduce_terms(ring: PolyRing, terms: dict, basis: Sequence[Poly]) -> dict:
    """Full reduction of a term dict by monic polynomials."""
    work = dict(terms)
    remainder = {}
    while work:
        m = max(work, key=order_key)
        c = work.pop(m)
        for g in basis:
            lm = g.lm
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    mm = mono_mul(gm, q)
                    v = work.get(mm)
                    v = -c * gc if v is None else v - c * gc
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return remainder


def _s_polynomial(f: Poly, g: Poly) -> Poly:
    lcm = mono_lcm(f.lm, g.lm)
    return f.shift(mono_div(lcm, f.lm)) - g.shift(mono_div(lcm, g.lm))


def _interreduce(ring: PolyRing, polys: list) -> list:
    polys = sorted(polys, key=lambda p: order_key(p.lm))
    minimal = []
    for p in polys:
        if not any(mono_divides(q.lm, p.lm) for q in minimal):
            minimal.append(p)
    reduced = []
    for k, p in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = {m: c for m, c in p.terms.items() if m != p.lm}
        terms = _reduce_terms(ring, tail, others)
        terms[p.lm] = p.lc
        reduced.append(Poly(ring, terms).monic())
    return sorted(reduced, key=lambda p: order_key(p.lm), reverse=True)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic basis; cap is None for a complete basis."""

    ring: PolyRing
    polys: tuple
    cap: Optional[int] = None

    @property
    def is_complete(self) -> bool:
        return self.cap is None

    def covers(self, degree: int) -> bool:
        return self.cap is None or degree <= self.cap

    @property
    def leading_monomials(self) -> list:
        return [g.lm for g in self.polys]

    def reduce(self, f: Poly) -> Poly:
        self.ring.check(f.ring)
        if not self.covers(f.degree):
            raise CapExceededError(
                f"degree {f.degree} exceeds the truncation cap {self.cap}")
        return Poly(self.ring, _reduce_terms(self.ring, f.terms, self.polys))

    def in_leading_ideal(self, mono: Monomial) -> bool:
        return any(mono_divides(lm, mono) for lm in self.leading_monomials)


def _check_generators(ring: PolyRing, gens: Iterable[Poly]) -> list:
    out = []
    for g in gens:
        ring.check(g.ring)
        if not g:
            continue
        if not g.is_homogeneous:
            raise NotHomogeneousError(f"generator {g} is not homogeneous")
        out.append(g)
    return out


def buchberger(gens: Sequence[Poly], cap: Optional[int] = None,
               ring: Optional[PolyRing] = None) -> GroebnerBasis:
    """
    Reduced Gröbner basis of homogeneous generators.

    Args:
        gens (list[Poly]): Homogeneous generators (zeros are ignored).
        cap (int, optional): Stop after all S-pairs of degree <= cap.
        ring (PolyRing, optional): Needed when gens is empty.

    Returns:
        GroebnerBasis: complete, or truncated with its cap recorded.
    """
    if ring is None:
        if not gens:
            raise ValueError("buchberger needs a ring when no generators are given")
        ring = gens[0].ring
    gens = _check_generators(ring, gens)

    basis: list = []
    pending: dict = {}
    pairs: dict = {}
    for g in gens:
        pending.setdefault(g.degree, []).append(g)

    def add(poly: Poly):
        idx = len(basis)
        basis.append(poly)
        for k in range(idx):
            a, b = basis[k].lm, poly.lm
            if mono_coprime(a, b):
                continue
            pairs.setdefault(sum(mono_lcm(a, b)), []).append((k, idx))

    truncated = False
    while pending or pairs:
        d = min(list(pending) + list(pairs))
        if cap is not None and d > cap:
            truncated = True
            break
        batch = pending.pop(d, [])
        batch += [_s_polynomial(basis[i], basis[j]) for i, j in pairs.pop(d, [])]
        for p in batch:
            r = Poly(ring, _reduce_terms(ring, p.terms, basis))
            if r:
                add(r.monic())
        logger.debug("degree %d done, %d basis elements", d, len(basis))

    polys = tuple(_interreduce(ring, basis))
    return GroebnerBasis(ring, polys, cap if truncated else None)


def normal_form(f: Poly, ideal: "HomogIdeal") -> Poly:
    return ideal.normal_form(f)


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals
# ---------------------------------------------------------------------------

def minimalize(monos: Iterable[Monomial]) -> list:
    """Minimal generators of the monomial ideal spanned by monos."""
    result = []
    for m in sorted(set(monos), key=sum):
        if not any(mono_divides(r, m) for r in result):
            result.append(m)
    return result


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def hilbert_numerator(monos: Iterable[Monomial], nvars: int) -> list:
    """Coefficients of N(t) with HS(P/M)(t) = N(t) / (1-t)^nvars."""
    gens = minimalize(monos)
    if not gens:
        return [1]
    if all(mono_coprime(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]):
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [0] if d == 0 else [1] + [0] * (d - 1) + [-1])
        return out
    # pivot on the variable occurring in most generators
    counts = [sum(1 for g in gens if g[k]) for k in range(nvars)]
    k = counts.index(max(counts))
    x = tuple(1 if j == k else 0 for j in range(nvars))
    plus = hilbert_numerator(gens + [x], nvars)
    colon = [g[:k] + (max(g[k] - 1, 0),) + g[k + 1:] for g in gens]
    return _poly_add(plus, [0] + hilbert_numerator(colon, nvars))


@dataclass(frozen=True)
class HilbertData:
    """
    Hilbert function of P/I for a homogeneous ideal with constant Hilbert polynomial.

    ``values`` holds HF(0..r); ``regularity_index`` is None when HF vanishes
    everywhere (the unit ideal), matching ri = -infinity.
    """

    values: tuple
    regularity_index: Optional[int]
    eventual_value: int
    alpha: Optional[int]
    krull_dimension: int
    criterion: str
    h_vector: tuple = ()

    def hf(self, i: int) -> int:
        if i < 0 or self.regularity_index is None:
            return 0
        if i < len(self.values):
            return self.values[i]
        return self.eventual_value

    def table(self, upto: Optional[int] = None) -> list:
        last = upto if upto is not None else (self.regularity_index or 0)
        return [self.hf(i) for i in range(last + 1)]

    @property
    def degree(self) -> int:
        return self.eventual_value


def hilbert_data_from_basis(basis: GroebnerBasis) -> HilbertData:
    """Hilbert data of P/I from a complete Gröbner basis of I."""
    if not basis.is_complete:
        raise CapExceededError("Hilbert data needs a complete basis")
    nvars = basis.ring.nvars
    lms = basis.leading_monomials
    alpha = min((sum(m) for m in lms), default=None)
    pure = all(
        any(lm[k] and sum(lm) == lm[k] for lm in lms) for k in range(1, nvars))
    criterion = "pure-powers" if pure else "hilbert-series"

    numerator = hilbert_numerator(lms, nvars)
    while numerator and numerator[-1] == 0:
        numerator.pop()
    if not numerator:
        return HilbertData((), None, 0, alpha, 0, criterion)
    divided = 0
    while divided < nvars and sum(numerator) == 0:
        partial, total = [], 0
        for c in numerator[:-1]:
            total += c
            partial.append(total)
        numerator = partial
        while numerator and numerator[-1] == 0:
            numerator.pop()
        divided += 1
    dim = nvars - divided
    if dim > 1:
        raise NotZeroDimensionalError(
            f"quotient has Krull dimension {dim}; the scheme is not 0-dimensional")
    h = tuple(numerator)
    if dim == 1:
        eventual = sum(h)
        hf, total = [], 0
        for c in h:
            total += c
            hf.append(total)
    else:
        eventual = 0
        hf = list(h)
    last = max((i for i, v in enumerate(hf) if v != eventual), default=-1)
    r = last + 1
    values = tuple(hf[:r + 1]) if r < len(hf) else tuple(hf) + (eventual,)
    return HilbertData(values, r, eventual, alpha, dim, criterion, h)


# ---------------------------------------------------------------------------
# Homogeneous ideals
# ---------------------------------------------------------------------------

class HomogIdeal:
    """
    A homogeneous ideal given by generators, with its Gröbner basis cached.

    An ideal constructed with ``cap`` only ever computes truncated bases and
    refuses questions above that degree.
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Poly] = (),
                 basis: Optional[GroebnerBasis] = None, cap: Optional[int] = None):
        self.ring = ring
        self.generators = tuple(_check_generators(ring, generators))
        self.cap = cap
        self._basis = basis
        self._hilbert = None
        self._standard = {}

    @classmethod
    def from_basis(cls, basis: GroebnerBasis) -> "HomogIdeal":
        return cls(basis.ring, basis.polys, basis=basis, cap=basis.cap)

    @classmethod
    def unit(cls, ring: PolyRing) -> "HomogIdeal":
        one = ring.one()
        return cls(ring, [one], basis=GroebnerBasis(ring, (one,)))

    # bases ---------------------------------------------------------------

    def groebner(self) -> GroebnerBasis:
        if self._basis is None:
            self._basis = buchberger(self.generators, cap=self.cap, ring=self.ring)
            logger.debug("Gröbner basis with %d elements (cap %s)",
                         len(self._basis.polys), self._basis.cap)
        return self._basis

    @property
    def basis(self) -> tuple:
        return self.groebner().polys

    @property
    def is_complete(self) -> bool:
        return self.groebner().is_complete

    def _require(self, degree: int):
        if self.cap is not None and degree > self.cap:
            raise CapExceededError(f"degree {degree} exceeds the cap {self.cap}")

    def normal_form(self, f: Poly) -> Poly:
        self._require(f.degree)
        return self.groebner().reduce(f)

    def contains(self, f: Poly) -> bool:
        return not self.normal_form(f)

    def contains_ideal(self, other: "HomogIdeal") -> bool:
        """True when other ⊆ self."""
        return all(self.contains(g) for g in other.basis)

    def equals(self, other: "HomogIdeal") -> bool:
        """Equality of reduced bases."""
        self.ring.check(other.ring)
        return set(self.basis) == set(other.basis)

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.basis)

    @property
    def is_saturated(self) -> bool:
        """No basis element divisible by X0, i.e. X0 is a non-zerodivisor on P/I."""
        return all(g.x0_order() == 0 for g in self.basis)

    @property
    def max_basis_degree(self) -> int:
        return max((g.degree for g in self.basis), default=0)

    # Hilbert data ----------------------------------------------------------

    @property
    def hilbert(self) -> HilbertData:
        if self._hilbert is None:
            self._hilbert = hilbert_data_from_basis(self.groebner())
        return self._hilbert

    def hilbert_function(self, i: int) -> int:
        if i < 0:
            return 0
        if self.cap is not None or not self.groebner().is_complete:
            return len(self.standard_monomials(i))
        try:
            return self.hilbert.hf(i)
        except NotZeroDimensionalError:
            return len(self.standard_monomials(i))

    def regularity_index(self):
        return self.hilbert.regularity_index

    # graded pieces ---------------------------------------------------------

    def standard_monomials(self, d: int) -> tuple:
        """Degree-d monomials outside the leading-term ideal, largest first."""
        if d not in self._standard:
            self._require(d)
            gb = self.groebner()
            monos = tuple(m for m in self.ring.graded_basis(d) if not gb.in_leading_ideal(m))
            self._standard[d] = (monos, {m: k for k, m in enumerate(monos)})
        return self._standard[d][0]

    def standard_index(self, d: int) -> dict:
        self.standard_monomials(d)
        return self._standard[d][1]

    def coordinates(self, f: Poly, d: int) -> dict:
        """Coordinates of f mod I in the standard monomial basis of degree d."""
        if not f:
            return {}
        index = self.standard_index(d)
        return {index[m]: c for m, c in self.normal_form(f).terms.items()}

    def from_coordinates(self, vec: dict, d: int) -> Poly:
        monos = self.standard_monomials(d)
        return Poly(self.ring, {monos[k]: c for k, c in vec.items() if c})

    def piece(self, d: int) -> list:
        """Basis {m - NF(m) : m in LT(I)_d} of I_d."""
        if d < 0:
            return []
        self._require(d)
        gb = self.groebner()
        out = []
        for m in self.ring.graded_basis(d):
            if gb.in_leading_ideal(m):
                mono = self.ring.monomial(m)
                out.append(mono - gb.reduce(mono))
        return out

    def dim_piece(self, d: int) -> int:
        if d < 0:
            return 0
        return len(self.ring.graded_basis(d)) - self.hilbert_function(d)

    def __repr__(self):
        return f"HomogIdeal({[str(g) for g in self.generators]})"


def hilbert_function(ideal: HomogIdeal, i: int) -> int:
    return ideal.hilbert_function(i)


def regularity_index(ideal: HomogIdeal):
    return ideal.regularity_index()
