"""
Exact sparse linear algebra over Q and F_p.

Vectors are dicts {column index: nonzero field element}. Rows of an
EchelonForm are kept fully reduced with their pivot at the smallest column,
so when column 0 is the largest monomial of a graded piece each row is a
monic form whose leading monomial is the pivot.

Every entry is passed through the field on the way in, so plain ints are
accepted and everything handed back (rows, relations, solutions) is a field
element. Without an explicit field, a residue class among the first inserted
entries selects F_p and Q is used otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from algebra.polycore import Field, ModP


def field_of(vectors: Iterable[dict]) -> Field:
    """The field the entries of vectors live in (Q unless a residue class shows up)."""
    for vec in vectors:
        for v in vec.values():
            if isinstance(v, ModP):
                return Field(v.p)
    return Field.rationals()


def _axpy(target: dict, coeff, source: dict):
    """target -= coeff * source, in place."""
    for col, v in source.items():
        new = target.get(col)
        new = -coeff * v if new is None else new - coeff * v
        if new:
            target[col] = new
        else:
            target.pop(col, None)


class EchelonForm:
    """
    Incremental reduced row echelon form.

    With ``track=True`` every row remembers which combination of the inserted
    vectors produced it, so dependent insertions yield kernel relations and
    ``express`` solves linear systems.
    """

    def __init__(self, track: bool = False, field: Optional[Field] = None):
        self.track = track
        self.field = field
        self.pivots: dict = {}  # pivot column -> row
        self.combos: dict = {}  # pivot column -> combination of tags
        self.relations: list = []

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _coerce(self, vec: dict) -> dict:
        if self.field is None:
            if not any(vec.values()):
                return {}
            self.field = field_of([vec])
        field = self.field
        kind = ModP if field.is_prime_field else Fraction
        return {c: v if type(v) is kind else field(v) for c, v in vec.items() if v}

    def _reduce(self, vec: dict, combo):
        vec = self._coerce(vec)
        for col in [c for c in vec if c in self.pivots]:
            coeff = vec.get(col)
            if not coeff:
                continue
            _axpy(vec, coeff, self.pivots[col])
            if combo is not None:
                _axpy(combo, coeff, self.combos[col])
        return vec, combo

    def reduce(self, vec: dict) -> dict:
        """Canonical remainder of vec modulo the row space."""
        return self._reduce(vec, None)[0]

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: dict, tag=None) -> bool:
        """Add a vector; return True when it enlarged the row space."""
        vec = self._coerce(vec)
        one = (self.field or Field.rationals()).one
        combo = {tag: one} if self.track else None
        rem, combo = self._reduce(vec, combo)
        if not rem:
            if self.track:
                combo = {k: v for k, v in combo.items() if v}
                if combo:
                    self.relations.append(combo)
            return False
        pivot = min(rem)
        inv = self.field.one / rem[pivot]
        rem = {c: v * inv for c, v in rem.items()}
        if combo is not None:
            combo = {k: v * inv for k, v in combo.items() if v}
        for col, row in self.pivots.items():
            coeff = row.get(pivot)
            if coeff:
                _axpy(row, coeff, rem)
                if combo is not None:
                    _axpy(self.combos[col], coeff, combo)
        self.pivots[pivot] = rem
        if combo is not None:
            self.combos[pivot] = combo
        return True

    def express(self, vec: dict):
        """Coefficients (by tag) writing vec in the inserted vectors, or None."""
        if not self.track:
            raise ValueError("express needs an EchelonForm built with track=True")
        rem, combo = self._reduce(vec, {})
        if rem:
            return None
        return {k: -v for k, v in combo.items() if v}

    def rows(self) -> list:
        """(pivot, row) pairs by increasing pivot column."""
        return sorted(self.pivots.items())


def kernel(vectors: Sequence[dict], field: Optional[Field] = None) -> list:
    """Basis of {c : sum_k c_k vectors[k] = 0}, as dicts index -> coefficient."""
    ech = EchelonForm(track=True, field=field or field_of(vectors))
    for k, vec in enumerate(vectors):
        ech.insert(vec, tag=k)
    return ech.relations


def rank(vectors: Iterable[dict], field: Optional[Field] = None) -> int:
    vectors = list(vectors)
    ech = EchelonForm(field=field or field_of(vectors))
    for vec in vectors:
        ech.insert(vec)
    return ech.rank


def span_basis(vectors: Iterable[dict], field: Optional[Field] = None) -> list:
    """Reduced echelon basis of the span, sorted by pivot."""
    vectors = list(vectors)
    ech = EchelonForm(field=field or field_of(vectors))
    for vec in vectors:
        ech.insert(vec)
    return [row for _, row in ech.rows()]


def intersect_spans(first: Sequence[dict], second: Sequence[dict],
                    field: Optional[Field] = None) -> list:
    """Basis of span(first) ∩ span(second)."""
    field = field or field_of(list(first) + list(second))
    # offset tags of the second family so one kernel covers both
    offset = len(first)
    stacked = list(first) + [{c: -field(v) for c, v in vec.items()} for vec in second]
    result = EchelonForm(field=field)
    for relation in kernel(stacked, field):
        combo = combine_rows({k: c for k, c in relation.items() if k < offset}, first, field)
        if combo:
            result.insert(combo)
    return [row for _, row in result.rows()]


def combine_rows(coeffs: dict, vectors: Sequence[dict], field: Optional[Field] = None) -> dict:
    """sum_k coeffs[k] * vectors[k]."""
    field = field or field_of(list(vectors[k] for k in coeffs) + [coeffs])
    out: dict = {}
    for k, c in coeffs.items():
        c = field(c)
        for col, v in vectors[k].items():
            out[col] = out.get(col, field.zero) + c * field(v)
    return {col: v for col, v in out.items() if v}


def concat(blocks: Sequence[dict], widths: Sequence[int]) -> dict:
    """Concatenate block vectors into one vector with shifted columns."""
    out = {}
    offset = 0
    for vec, width in zip(blocks, widths):
        for col, v in vec.items():
            out[offset + col] = v
        offset += width
    return out
