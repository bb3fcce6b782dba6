"""
Graded pieces of the canonical module of R_X as K[x0]-linear functionals.

R_X is a free K[x0]-module on an adapted basis g_1, ..., g_m (m = deg X):
for every degree i the elements of degree <= i, padded by powers of x0, form
a K-basis of (R_X)_i. A homogeneous functional of degree -d sends g_k to
c_k * x0^(deg g_k - d - 1), so it is stored as the coefficient vector c with
c_k = 0 whenever deg g_k <= d.
"""

from __future__ import annotations

import logging
import random
import warnings
import weakref
from dataclasses import dataclass
from typing import Optional

from config.settings import FUNCTIONAL_COEFF_BOUND, FUNCTIONAL_RETRY_BUDGET
from algebra.errors import DegreeOutOfRangeError, FiniteFieldWarning, NotGorensteinError
from algebra.linalg import EchelonForm, kernel, rank
from algebra.polycore import Poly
from algebra.scheme import Scheme

logger = logging.getLogger(__name__)

_BASES: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


class AdaptedBasis:
    """Normal-form monomials g_k, chosen degree by degree to extend x0 * (R_X)_{i-1}."""

    def __init__(self, X: Scheme):
        self.scheme = X
        self.ring = X.ring
        self.elements: list = []
        self.degrees: list = []
        self._echelons: dict = {}
        if X.is_empty:
            return
        ideal = X.ideal
        for i in range(X.regularity_index + 1):
            ech = self._padded_echelon(i)
            for m in ideal.standard_monomials(i):
                vec = ideal.coordinates(self.ring.monomial(m), i)
                if not ech.contains(vec):
                    ech.insert(vec, tag=len(self.elements))
                    self.elements.append(self.ring.monomial(m))
                    self.degrees.append(i)
            self._echelons[i] = ech
        logger.debug("adapted basis of degrees %s", self.degrees)

    def _padded_echelon(self, t: int) -> EchelonForm:
        ech = EchelonForm(track=True, field=self.ring.field)
        for k, g in enumerate(self.elements):
            if self.degrees[k] <= t:
                ech.insert(self.scheme.ideal.coordinates(self.padded(k, t), t), tag=k)
        return ech

    def padded(self, k: int, t: int) -> Poly:
        """x0^(t - deg g_k) * g_k."""
        shift = (t - self.degrees[k],) + (0,) * (self.ring.nvars - 1)
        return self.elements[k].shift(shift)

    def __len__(self):
        return len(self.elements)

    @property
    def h_counts(self) -> list:
        top = max(self.degrees, default=-1)
        return [self.degrees.count(i) for i in range(top + 1)]

    def express(self, f: Poly) -> dict:
        """Coordinates {k: a_k} of a homogeneous f with f = sum a_k x0^(t - deg g_k) g_k."""
        if not f:
            return {}
        t = f.degree
        if t not in self._echelons:
            self._echelons[t] = self._padded_echelon(t)
        coeffs = self._echelons[t].express(self.scheme.ideal.coordinates(f, t))
        if coeffs is None:
            raise ArithmeticError(f"{f} is not in the span of the adapted basis")
        return coeffs


def adapted_basis(X: Scheme) -> AdaptedBasis:
    basis = _BASES.get(X)
    if basis is None:
        basis = AdaptedBasis(X)
        _BASES[X] = basis
    return basis


@dataclass(frozen=True)
class OmegaElement:
    """A functional of degree -d: g_k -> coeffs[k] * x0^(deg g_k - d - 1)."""

    d: int
    coeffs: tuple

    @property
    def degree(self) -> int:
        return -self.d

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)


def evaluate_functional(basis: AdaptedBasis, phi: OmegaElement, f: Poly):
    """Coefficient c with phi(f) = c * x0^(deg f - d - 1)."""
    coords = basis.express(f)
    total = basis.ring.field.zero
    for k, a in coords.items():
        if phi.coeffs[k]:
            total = total + a * phi.coeffs[k]
    return total


def omega_piece(X: Scheme, d: int) -> list:
    """Basis functionals of (omega_{R_X})_{-d}."""
    if d < 0:
        raise DegreeOutOfRangeError("omega_piece needs d >= 0")
    basis = adapted_basis(X)
    field = X.field
    out = []
    for k, deg in enumerate(basis.degrees):
        if deg >= d + 1:
            coeffs = [field.zero] * len(basis)
            coeffs[k] = field.one
            out.append(OmegaElement(d, tuple(coeffs)))
    return out


def module_action(X: Scheme, f: Poly, phi: OmegaElement) -> OmegaElement:
    """f * phi, the functional g -> phi(f g)."""
    basis = adapted_basis(X)
    if not f:
        return OmegaElement(phi.d, tuple(X.field.zero for _ in basis.elements))
    coeffs = tuple(evaluate_functional(basis, phi, f * g) for g in basis.elements)
    return OmegaElement(phi.d - f.degree, coeffs)


def _check_range(X: Scheme, d: int):
    r = X.regularity_index or 0
    if not 0 <= d <= r - 1:
        raise DegreeOutOfRangeError(f"d = {d} outside 0..{r - 1}")


@dataclass(frozen=True)
class AnnihilatorResult:
    is_zero: bool
    degree: int
    dimension: int
    witness: Optional[Poly] = None


def annihilator_in_degree(X: Scheme, d: int, t: int) -> AnnihilatorResult:
    """Ann((omega)_{-d}) ∩ (R_X)_t as the kernel of f -> (phi_b(f g_k))_{b,k}."""
    basis = adapted_basis(X)
    active = [k for k, deg in enumerate(basis.degrees) if deg >= d + 1]
    monos = X.ideal.standard_monomials(t)
    images = []
    for m in monos:
        u = X.ring.monomial(m)
        vec = {}
        for k, g in enumerate(basis.elements):
            coords = basis.express(u * g)
            for pos, b in enumerate(active):
                c = coords.get(b)
                if c:
                    vec[k * len(active) + pos] = c
        images.append(vec)
    relations = kernel(images, X.field)
    witness = None
    if relations:
        rel = relations[0]
        witness = Poly(X.ring, {monos[k]: X.field(c) for k, c in rel.items() if c})
    return AnnihilatorResult(not relations, t, len(relations), witness)


def annihilator_is_zero(X: Scheme, d: int) -> AnnihilatorResult:
    """
    Whether Ann_{R_X}((omega_{R_X})_{-d}) = 0.

    Only degree r_X is tested: x0 is a non-zerodivisor on R_X and acts
    injectively on omega, so a nonzero annihilator in any degree produces one
    in degree r_X.
    """
    _check_range(X, d)
    return annihilator_in_degree(X, d, X.regularity_index)


@dataclass(frozen=True)
class RestrictionCheck:
    rank: int
    expected: int
    kills_x0: bool

    @property
    def ok(self) -> bool:
        return self.kills_x0 and self.rank == self.expected


def restriction_rank(X: Scheme, d: int) -> RestrictionCheck:
    """Restrict (omega)_{-d} to (R_X)_{d+1}; the image must be all functionals killing x0 (R_X)_d."""
    basis = adapted_basis(X)
    functionals = omega_piece(X, d)
    upper = [X.ring.monomial(m) for m in X.ideal.standard_monomials(d + 1)]
    lower = [X.ring.monomial(m).shift((1,) + (0,) * (X.ring.nvars - 1))
             for m in X.ideal.standard_monomials(d)] if d >= 0 else []
    rows = []
    kills = True
    for phi in functionals:
        rows.append({pos: v for pos, u in enumerate(upper)
                     if (v := evaluate_functional(basis, phi, u))})
        kills = kills and all(not evaluate_functional(basis, phi, v) for v in lower)
    expected = X.hf(d + 1) - X.hf(d)
    return RestrictionCheck(rank(rows, X.field), expected, kills)


def _annihilates_nothing(X: Scheme, phi: OmegaElement) -> bool:
    basis = adapted_basis(X)
    images = []
    for m in X.ideal.standard_monomials(X.regularity_index):
        u = X.ring.monomial(m)
        images.append({k: v for k, g in enumerate(basis.elements)
                       if (v := evaluate_functional(basis, phi, u * g))})
    return not kernel(images, X.field)


def find_injective_functional(X: Scheme, d: int, seed: int,
                              budget: int = FUNCTIONAL_RETRY_BUDGET,
                              bound: int = FUNCTIONAL_COEFF_BOUND) -> Optional[OmegaElement]:
    """
    Search (omega)_{-d} for a functional with zero annihilator.

    Returns None when no random combination works within the budget, which is
    consistent with CBP(d) failing (or with bad luck over a small field).
    """
    _check_range(X, d)
    X.require_components("the local Gorenstein check")
    if not X.locally_gorenstein:
        raise NotGorensteinError("injective functionals need a locally Gorenstein scheme")
    if X.field.is_prime_field:
        message = f"searching functionals over {X.field.name}; existence assumes an infinite field"
        logger.warning(message)
        warnings.warn(message, FiniteFieldWarning, stacklevel=2)
    pieces = omega_piece(X, d)
    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        weights = [X.field.random_element(rng, bound) for _ in pieces]
        coeffs = [X.field.zero] * len(adapted_basis(X))
        for w, phi in zip(weights, pieces):
            coeffs = [c + w * p for c, p in zip(coeffs, phi.coeffs)]
        candidate = OmegaElement(d, tuple(coeffs))
        if not candidate.is_zero and _annihilates_nothing(X, candidate):
            logger.info("injective functional found at attempt %d", attempt)
            return candidate
    logger.info("no injective functional in %d attempts (seed %s)", budget, seed)
    return None
