"""
Zero-dimensional subschemes of projective n-space.

A Scheme is built either from primary components (a K-rational point plus
the generators of its primary ideal) or from a raw saturated ideal. Both
modes carry the vanishing ideal and its Hilbert data; only components mode
knows the local algebras, so germs, separators and point degrees require it.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from algebra.errors import (
    AutoSaturationWarning,
    ComponentsRequiredError,
    DuplicatePointError,
    NonPrimaryComponentError,
    NotSaturatedError,
    NotZeroDimensionalError,
    RingMismatchError,
    SocleDirectionError,
    SupportAtInfinityError,
)
from algebra.gbasis import HilbertData, HomogIdeal
from algebra.idealops import intersect_all, poly_vector, saturate_x0
from algebra.linalg import EchelonForm, concat, intersect_spans, kernel
from algebra.local import LocalAlgebra
from algebra.polycore import AffinePoint, Poly, PolyRing, format_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchemeComponent:
    """A K-rational point with the generators of its primary ideal (the point's prime if empty)."""

    point: AffinePoint
    local_gens: tuple = ()
    label: str = ""

    def generators(self, ring: PolyRing) -> list:
        if self.local_gens:
            return list(self.local_gens)
        x0 = ring.var(0)
        return [ring.var(k) - x0 * a for k, a in enumerate(self.point.coords) if k > 0]


class Scheme:
    """
    A 0-dimensional scheme with X0 a non-zerodivisor on its coordinate ring.

    Use scheme_from_components or scheme_from_ideal rather than the constructor.
    """

    def __init__(self, ring: PolyRing, ideal: HomogIdeal,
                 components: Optional[Sequence[SchemeComponent]] = None,
                 local_algebras: Optional[Sequence[LocalAlgebra]] = None,
                 component_ideals: Optional[Sequence[HomogIdeal]] = None,
                 name: str = ""):
        self.ring = ring
        self.ideal = ideal
        self.components = tuple(components) if components is not None else None
        self._local = tuple(local_algebras) if local_algebras is not None else None
        self.component_ideals = tuple(component_ideals) if component_ideals is not None else None
        self.name = name
        self._germ_columns: dict = {}

    # basic data ------------------------------------------------------------

    @property
    def mode(self) -> str:
        return "components" if self.components is not None else "raw"

    @property
    def has_components(self) -> bool:
        return self.components is not None

    @property
    def field(self):
        return self.ring.field

    @property
    def hilbert(self) -> HilbertData:
        return self.ideal.hilbert

    @property
    def degree(self) -> int:
        return self.hilbert.degree

    @property
    def is_empty(self) -> bool:
        return self.ideal.is_unit

    @property
    def regularity_index(self) -> Optional[int]:
        return self.hilbert.regularity_index

    @property
    def alpha(self) -> Optional[int]:
        return self.hilbert.alpha

    def hf(self, i: int) -> int:
        return self.hilbert.hf(i)

    def hf_table(self, upto: Optional[int] = None) -> list:
        return self.hilbert.table(upto)

    @property
    def local_algebras(self) -> tuple:
        self.require_components("local algebras")
        return self._local

    @property
    def points(self) -> list:
        self.require_components("the support")
        return [c.point for c in self.components]

    def labels(self) -> list:
        self.require_components("point labels")
        return [c.label or f"p{k + 1}" for k, c in enumerate(self.components)]

    def require_components(self, what: str):
        if self.components is None:
            raise ComponentsRequiredError(f"{what} needs a scheme given by components")

    def component_index(self, j: int) -> int:
        self.require_components("point operations")
        if not 0 <= j < len(self.components):
            raise IndexError(f"point index {j} out of range 0..{len(self.components) - 1}")
        return j

    @property
    def block_offsets(self) -> list:
        offsets, total = [], 0
        for A in self.local_algebras:
            offsets.append(total)
            total += A.dim
        return offsets

    def contains_scheme(self, other: "Scheme") -> bool:
        """True when other is a subscheme, i.e. I_self ⊆ I_other."""
        return other.ideal.contains_ideal(self.ideal)

    # Gorenstein and complete intersection flags ----------------------------

    @cached_property
    def locally_gorenstein(self) -> Optional[bool]:
        if self.components is None:
            return None
        return all(A.is_gorenstein for A in self._local)

    @cached_property
    def artinian_socle(self) -> dict:
        """Socle of P/(I + X0) by degree, as lists of forms without X0."""
        if self.is_empty:
            return {}
        r = self.regularity_index
        ideal = self.ideal
        nvars = self.ring.nvars
        socle = {}
        for i in range(r + 1):
            source = [m for m in ideal.standard_monomials(i) if m[0] == 0]
            target = [m for m in ideal.standard_monomials(i + 1) if m[0] == 0]
            index = {m: k for k, m in enumerate(target)}
            images = []
            for m in source:
                blocks = []
                for k in range(1, nvars):
                    image = ideal.normal_form(self.ring.monomial(m).shift(_unit(nvars, k)))
                    blocks.append({index[t]: c for t, c in image.terms.items() if t[0] == 0})
                images.append(concat(blocks, [len(target)] * (nvars - 1)))
            relations = kernel(images, self.ring.field)
            if relations:
                socle[i] = [Poly(self.ring, {source[k]: c for k, c in rel.items()})
                            for rel in relations]
        return socle

    @property
    def cm_type(self) -> int:
        return sum(len(v) for v in self.artinian_socle.values())

    @property
    def is_arithmetically_gorenstein(self) -> bool:
        return not self.is_empty and self.cm_type == 1

    @cached_property
    def minimal_generators(self) -> list:
        """Minimal homogeneous generators of the ideal, by degree."""
        if self.is_empty:
            return [self.ring.one()]
        ideal = self.ideal
        gens = []
        for d in range(1, ideal.max_basis_degree + 1):
            ech = EchelonForm(field=self.ring.field)
            for f in ideal.piece(d - 1):
                for k in range(self.ring.nvars):
                    ech.insert(poly_vector(f.shift(_unit(self.ring.nvars, k)), d))
            for f in ideal.piece(d):
                if ech.insert(poly_vector(f, d)):
                    gens.append(f)
        return gens

    @property
    def minimal_generator_degrees(self) -> list:
        return [g.degree for g in self.minimal_generators]

    @cached_property
    def is_complete_intersection(self) -> bool:
        degrees = self.minimal_generator_degrees
        if self.is_empty or len(degrees) != self.ring.n:
            return False
        expected = ci_hilbert_function(degrees)
        top = max(len(expected), (self.regularity_index or 0) + 1) + 1
        return all(self.hf(i) == _at(expected, i) for i in range(top))

    # germs -----------------------------------------------------------------

    def germ(self, f: Poly) -> dict:
        """Germ vector of a form in the product of the local algebras."""
        blocks = [A.germ(f) for A in self.local_algebras]
        return concat(blocks, [A.dim for A in self._local])

    def germ_columns(self, i: int) -> tuple:
        """(standard monomials of degree i, their germ vectors)."""
        if i not in self._germ_columns:
            monos = self.ideal.standard_monomials(i)
            cols = [self.germ(self.ring.monomial(m)) for m in monos]
            self._germ_columns[i] = (monos, cols)
        return self._germ_columns[i]

    def embed_socle(self, j: int, vec: dict) -> dict:
        offset = self.block_offsets[j]
        return {offset + pos: c for pos, c in vec.items()}

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Scheme{label}(mode={self.mode}, deg={self.degree})"


def _unit(nvars: int, k: int) -> tuple:
    return tuple(1 if j == k else 0 for j in range(nvars))


def ci_hilbert_function(degrees: Sequence[int]) -> list:
    """HF(0..ri) of a complete intersection of forms of the given degrees in P^n."""
    h = [1]
    for d in degrees:
        h = [sum(h[i - j] for j in range(d) if 0 <= i - j < len(h))
             for i in range(len(h) + d - 1)]
    values, total = [], 0
    for c in h:
        total += c
        values.append(total)
    return values


def _at(values: list, i: int) -> int:
    if i < 0:
        return 0
    return values[i] if i < len(values) else values[-1]


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def scheme_from_components(ring: PolyRing, components: Sequence[SchemeComponent],
                           name: str = "") -> Scheme:
    """
    Assemble a scheme from primary components at distinct K-rational points.

    Args:
        ring (PolyRing): The projective ring.
        components (list[SchemeComponent]): One entry per support point.
        name (str): Label used in reports.

    Returns:
        Scheme: components-mode scheme with ideal = intersection of the components.
    """
    seen = {}
    for k, comp in enumerate(components):
        if len(comp.point.coords) != ring.nvars:
            raise RingMismatchError(
                f"component {k}: point {comp.point} does not lie in P^{ring.n}")
        if comp.point.coords in seen:
            raise DuplicatePointError(
                f"components {seen[comp.point.coords]} and {k} share the point {comp.point}")
        seen[comp.point.coords] = k

    ideals, local = [], []
    for k, comp in enumerate(components):
        ideal = saturate_x0(HomogIdeal(ring, comp.generators(ring)))
        if ideal.is_unit:
            raise NonPrimaryComponentError(f"component {k}: the ideal is the unit ideal")
        algebra = LocalAlgebra(ring, comp.point, ideal.basis)
        try:
            degree = ideal.hilbert.degree
        except NotZeroDimensionalError as exc:
            raise NonPrimaryComponentError(f"component {k}: {exc}") from exc
        if degree != algebra.dim:
            raise NonPrimaryComponentError(
                f"component {k}: ideal of degree {degree} has local multiplicity "
                f"{algebra.dim} at {comp.point}; its zero locus is not that single point")
        ideals.append(ideal)
        local.append(algebra)

    ideal = intersect_all(ring, ideals)
    expected = sum(A.dim for A in local)
    if ideal.hilbert.degree != expected:
        raise NonPrimaryComponentError(
            f"intersection has degree {ideal.hilbert.degree}, expected {expected}")
    logger.info("scheme %s assembled from %d components, degree %d",
                name or "<unnamed>", len(components), expected)
    return Scheme(ring, ideal, components, local, ideals, name)


def scheme_from_ideal(gens: Sequence[Poly], ring: Optional[PolyRing] = None,
                      auto_saturate: bool = False, name: str = "") -> Scheme:
    """
    Raw-mode scheme from homogeneous generators.

    The ideal must be saturated with respect to X0 and define a 0-dimensional
    scheme away from Z(X0). With auto_saturate a non-saturated ideal is
    replaced by its saturation (with a warning) when no support is lost.
    """
    if ring is None:
        if not gens:
            raise ValueError("scheme_from_ideal needs a ring when no generators are given")
        ring = gens[0].ring
    ideal = HomogIdeal(ring, gens)
    if ideal.is_unit:
        return Scheme(ring, ideal, name=name)
    saturated = saturate_x0(ideal)
    sat_degree = saturated.hilbert.degree
    if not ideal.is_saturated:
        try:
            raw_degree = ideal.hilbert.degree
        except NotZeroDimensionalError:
            raw_degree = None
        if raw_degree != sat_degree:
            raise SupportAtInfinityError(
                "X0 is a zero divisor: part of the scheme lies on Z(X0)")
        if not auto_saturate:
            raise NotSaturatedError("the ideal is not saturated")
        message = "ideal was not saturated; using its saturation"
        logger.warning(message)
        warnings.warn(message, AutoSaturationWarning, stacklevel=2)
    logger.info("raw scheme %s of degree %d", name or "<unnamed>", sat_degree)
    return Scheme(ring, saturated, name=name)


def empty_scheme(ring: PolyRing, name: str = "") -> Scheme:
    return Scheme(ring, HomogIdeal.unit(ring), components=(), local_algebras=(),
                  component_ideals=(), name=name)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass
class SchemeReport:
    name: str
    mode: str
    field: str
    nvars: int
    degree: int
    hilbert_function: list
    regularity_index: Optional[int]
    alpha: Optional[int]
    h_vector: list
    criterion: str
    arithmetically_gorenstein: bool
    cm_type: int
    complete_intersection: bool
    minimal_generator_degrees: list
    locally_gorenstein: Optional[bool]
    ideal_basis: list
    support: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def analyze(X: Scheme) -> SchemeReport:
    """Degree, Hilbert data and the Gorenstein / complete intersection flags of X."""
    hilbert = X.hilbert
    support = []
    if X.has_components:
        for label, comp, A in zip(X.labels(), X.components, X.local_algebras):
            support.append({
                "label": label,
                "point": str(comp.point),
                "multiplicity": A.dim,
                "gorenstein": A.is_gorenstein,
            })
    upto = (hilbert.regularity_index or 0) + 1
    return SchemeReport(
        name=X.name,
        mode=X.mode,
        field=X.field.name,
        nvars=X.ring.nvars,
        degree=X.degree,
        hilbert_function=[] if X.is_empty else X.hf_table(upto),
        regularity_index=hilbert.regularity_index,
        alpha=hilbert.alpha,
        h_vector=list(hilbert.h_vector),
        criterion=hilbert.criterion,
        arithmetically_gorenstein=X.is_arithmetically_gorenstein,
        cm_type=X.cm_type,
        complete_intersection=X.is_complete_intersection,
        minimal_generator_degrees=X.minimal_generator_degrees,
        locally_gorenstein=X.locally_gorenstein,
        ideal_basis=[format_poly(g) for g in X.ideal.basis],
        support=support,
    )


def is_nonzerodivisor(X: Scheme, H: Poly) -> bool:
    """Whether multiplication by the form H is injective on R_X."""
    X.ring.check(H.ring)
    if X.is_empty:
        return True
    if not H:
        return False
    r = X.regularity_index
    target = r + H.degree
    images = [X.ideal.coordinates(H.shift(m), target) for m in X.ideal.standard_monomials(r)]
    return not kernel(images, X.field)


# ---------------------------------------------------------------------------
# Germs, point degrees and separators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GermMatrix:
    """Columns are germ vectors of the standard monomials of one degree."""

    degree: int
    monomials: tuple
    columns: tuple
    nrows: int

    @property
    def rank(self) -> int:
        ech = EchelonForm()
        for col in self.columns:
            ech.insert(col)
        return ech.rank


def germ_matrix(X: Scheme, i: int) -> GermMatrix:
    """Matrix of (R_X)_i -> prod_j O_{X,p_j}."""
    X.require_components("germ_matrix")
    monos, cols = X.germ_columns(i)
    return GermMatrix(i, monos, tuple(cols), X.degree)


def _socle_block(X: Scheme, j: int) -> list:
    return [X.embed_socle(j, s) for s in X.local_algebras[j].socle]


def point_degree(X: Scheme, j: int) -> int:
    """deg_X(p_j): least degree of a form whose germs span a socle line at p_j only."""
    j = X.component_index(j)
    block = _socle_block(X, j)
    r = X.regularity_index or 0
    for i in range(r + 1):
        _, cols = X.germ_columns(i)
        if intersect_spans(cols, block, X.field):
            return i
    raise NonPrimaryComponentError(f"no separator of p_{j} up to degree {r}")


def point_degrees(X: Scheme) -> list:
    X.require_components("point degrees")
    return [point_degree(X, j) for j in range(len(X.components))]


def _socle_direction(X: Scheme, j: int, socle_dir: Optional[dict]) -> dict:
    A = X.local_algebras[j]
    if socle_dir is None:
        socle_dir = A.default_socle_direction()
        if socle_dir is None:
            raise SocleDirectionError(
                f"the local ring at p_{j} is not Gorenstein; give a socle direction")
        return socle_dir
    vec = {pos: A.ring.field(c) for pos, c in socle_dir.items() if c}
    if not A.is_socle_element(vec):
        raise SocleDirectionError(f"{socle_dir} is not a nonzero socle element at p_{j}")
    return vec


@dataclass(frozen=True)
class SeparatorSet:
    """Separator data of the maximal p_j-subscheme cut out by a socle direction."""

    index: int
    direction: dict
    minimal_separator: Poly
    standard_separator: Poly
    mu: int
    regularity_index: int

    def ideal_piece(self, i: int) -> list:
        """Spanning forms of (I_{X'/X})_i: x0^(i - mu) times the minimal separator."""
        if i < self.mu:
            return []
        shift = (i - self.mu,) + (0,) * (self.minimal_separator.ring.nvars - 1)
        return [self.minimal_separator.shift(shift)]


def separators_of(X: Scheme, j: int, socle_dir: Optional[dict] = None) -> SeparatorSet:
    """
    Minimal and standard separators of the maximal p_j-subscheme given by socle_dir.

    Args:
        X (Scheme): components-mode scheme.
        j (int): Component index.
        socle_dir (dict, optional): Socle vector of O_{X,p_j}; defaults to the socle
            generator when that ring is Gorenstein.

    Returns:
        SeparatorSet: with mu = least degree of a separator.
    """
    j = X.component_index(j)
    direction = _socle_direction(X, j, socle_dir)
    target = X.embed_socle(j, direction)
    r = X.regularity_index or 0
    for i in range(r + 1):
        monos, cols = X.germ_columns(i)
        ech = EchelonForm(track=True, field=X.field)
        for k, col in enumerate(cols):
            ech.insert(col, tag=k)
        coeffs = ech.express(target)
        if coeffs is None:
            continue
        minimal = Poly(X.ring, {monos[k]: X.field(c) for k, c in coeffs.items() if c})
        padding = (r - i,) + (0,) * (X.ring.nvars - 1)
        logger.debug("separator of p_%d found in degree %d", j, i)
        return SeparatorSet(j, direction, minimal, minimal.shift(padding), i, r)
    raise NonPrimaryComponentError(f"no separator of p_{j} up to degree {r}")


def maximal_subscheme(X: Scheme, j: int, socle_dir: Optional[dict] = None) -> Scheme:
    """X with the local ideal at p_j enlarged by the socle direction."""
    j = X.component_index(j)
    direction = _socle_direction(X, j, socle_dir)
    A = X.local_algebras[j]
    components = list(X.components)
    name = f"{X.name}-{X.labels()[j]}" if X.name else ""
    if A.dim == 1:
        del components[j]
        if not components:
            return empty_scheme(X.ring, name)
        return scheme_from_components(X.ring, components, name)
    lifted = A.lift_form(direction)
    enlarged = saturate_x0(HomogIdeal(X.ring, list(X.component_ideals[j].basis) + [lifted]))
    old = components[j]
    components[j] = SchemeComponent(old.point, tuple(enlarged.basis), old.label)
    return scheme_from_components(X.ring, components, name)
