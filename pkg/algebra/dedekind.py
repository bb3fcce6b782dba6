"""
Trace maps, the Dedekind complementary module C and the Dedekind different.

The degree-0 part of the homogeneous ring of quotients Q^h(R_X) is modeled by
A = (R_X)_{r_X}: a form f of degree r_X stands for f / x0^{r_X}, products are
computed in degree 2 r_X and divided by x0^{r_X}. A degree-t element of
Q^h(R_X) is x0^t * a with a in A, and (R_X)_i embeds into A as U_i =
x0^(r_X - i) (R_X)_i. In components mode A is identified with the product of
the local algebras through the germs of degree-r_X forms.

A homogeneous trace map of degree zero is x0^t a -> x0^t tau(a) for a linear
functional tau on A whose pairing (a, b) -> tau(ab) is non-degenerate. Then

    C_t     = {a in A : tau(a u) = 0 for all u in U_{-t-1}}
    delta_i = {f in (R_X)_i : embed(f) * C_t ⊆ U_{i+t} for t = -r_X..0}

C is generated in degrees <= 0, so these constraints are complete.
"""

from __future__ import annotations

import logging
import random
import warnings
from dataclasses import dataclass, field
from typing import Optional

from config.settings import TRACE_COEFF_BOUND, TRACE_RETRY_BUDGET
from algebra.errors import FiniteFieldWarning, NotGorensteinError, RetryBudgetExhaustedError
from algebra.linalg import EchelonForm, concat, kernel, rank
from algebra.local import LocalAlgebra
from algebra.polycore import Poly
from algebra.scheme import Scheme

logger = logging.getLogger(__name__)


def _x0_power(nvars: int, e: int) -> tuple:
    return (e,) + (0,) * (nvars - 1)


# ---------------------------------------------------------------------------
# The algebra A = Q^h(R_X)_0
# ---------------------------------------------------------------------------

class QuotientAlgebra:
    """(R_X)_{r_X} with the product a * b = ab / x0^{r_X}."""

    def __init__(self, X: Scheme):
        self.scheme = X
        self.ring = X.ring
        self.r = X.regularity_index
        self.monos = X.ideal.standard_monomials(self.r)
        self.dim = len(self.monos)
        self._lifts: dict = {}
        self._products: dict = {}
        self._units: dict = {}

    def _lift_echelon(self, degree: int) -> EchelonForm:
        """Tracked echelon of x0^(degree - r) * basis, for degree >= r."""
        if degree not in self._lifts:
            ideal = self.scheme.ideal
            shift = _x0_power(self.ring.nvars, degree - self.r)
            ech = EchelonForm(track=True, field=self.ring.field)
            for k, m in enumerate(self.monos):
                ech.insert(ideal.coordinates(self.ring.monomial(m).shift(shift), degree), tag=k)
            self._lifts[degree] = ech
        return self._lifts[degree]

    def embed(self, f: Poly) -> dict:
        """The A-coordinates of f / x0^(deg f)."""
        if not f:
            return {}
        i = f.degree
        ideal = self.scheme.ideal
        if i <= self.r:
            padded = f.shift(_x0_power(self.ring.nvars, self.r - i))
            return ideal.coordinates(padded, self.r)
        coeffs = self._lift_echelon(i).express(ideal.coordinates(f, i))
        return {k: c for k, c in coeffs.items() if c}

    def element(self, vec: dict) -> Poly:
        return Poly(self.ring, {self.monos[k]: self.ring.field(c) for k, c in vec.items() if c})

    def _basis_product(self, k: int, l: int) -> dict:
        key = (k, l) if k <= l else (l, k)
        if key not in self._products:
            prod = self.ring.monomial(self.monos[k]).shift(self.monos[l])
            coords = self.scheme.ideal.coordinates(prod, 2 * self.r)
            coeffs = self._lift_echelon(2 * self.r).express(coords)
            self._products[key] = {t: c for t, c in coeffs.items() if c}
        return self._products[key]

    def multiply(self, u: dict, v: dict) -> dict:
        out: dict = {}
        zero = self.ring.field.zero
        for k, a in u.items():
            for l, b in v.items():
                for t, c in self._basis_product(k, l).items():
                    out[t] = out.get(t, zero) + a * b * c
        return {t: c for t, c in out.items() if c}

    def unit_space(self, i: int) -> EchelonForm:
        """Echelon form of U_i, the image of (R_X)_i."""
        i = min(i, self.r) if i >= 0 else -1
        if i not in self._units:
            ech = EchelonForm(field=self.ring.field)
            if i >= 0:
                for m in self.scheme.ideal.standard_monomials(i):
                    ech.insert(self.embed(self.ring.monomial(m)))
            self._units[i] = ech
        return self._units[i]

    def unit_basis(self, i: int) -> list:
        return [row for _, row in self.unit_space(i).rows()]


# ---------------------------------------------------------------------------
# Trace maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalTrace:
    """A functional on a local algebra with invertible Gram matrix."""

    values: tuple
    gram_rank: int


def _gram_rank(dim: int, values, product, field) -> int:
    rows = []
    for k in range(dim):
        row = {}
        for l in range(dim):
            total = field.zero
            for pos, c in product(k, l).items():
                if values[pos]:
                    total = total + c * values[pos]
            if total:
                row[l] = total
        rows.append(row)
    return rank(rows, field)


def local_trace(A: LocalAlgebra, seed=None, rng: Optional[random.Random] = None,
                budget: int = TRACE_RETRY_BUDGET, bound: int = TRACE_COEFF_BOUND) -> LocalTrace:
    """
    Random functional tau on a Gorenstein local algebra with tau(b_i b_j) invertible.

    Raises:
        NotGorensteinError: the algebra has a socle of dimension > 1.
        RetryBudgetExhaustedError: no functional found within the budget.
    """
    if not A.is_gorenstein:
        raise NotGorensteinError(f"the local ring at {A.point} is not Gorenstein")
    rng = rng or random.Random(seed)
    field_ = A.ring.field
    product = lambda k, l: A._basis_product(k, l)
    for attempt in range(1, budget + 1):
        values = tuple(field_.random_element(rng, bound) for _ in range(A.dim))
        gram = _gram_rank(A.dim, values, product, field_)
        if gram == A.dim:
            logger.debug("local trace at %s after %d attempts", A.point, attempt)
            return LocalTrace(values, gram)
    raise RetryBudgetExhaustedError(f"no trace functional at {A.point}", seed=seed, attempts=budget)


@dataclass(frozen=True)
class TraceMap:
    """tau on A as its values on the basis monomials of (R_X)_{r_X}."""

    mode: str
    values: tuple
    local: tuple = ()
    gram_rank: int = 0
    seed: Optional[int] = None

    def __call__(self, vec: dict):
        total = 0
        for k, c in vec.items():
            if self.values[k]:
                total = total + c * self.values[k]
        return total


def draw_trace(X: Scheme, algebra: QuotientAlgebra, rng: random.Random, seed=None,
               budget: int = TRACE_RETRY_BUDGET, bound: int = TRACE_COEFF_BOUND) -> TraceMap:
    """A trace map from local traces (components mode) or drawn on A directly (raw mode)."""
    field_ = X.field
    if X.has_components:
        if not X.locally_gorenstein:
            raise NotGorensteinError("the Dedekind different needs a locally Gorenstein scheme")
        local = tuple(local_trace(A, seed, rng, budget, bound) for A in X.local_algebras)
        stacked = concat([{pos: v for pos, v in enumerate(t.values) if v} for t in local],
                         [A.dim for A in X.local_algebras])
        _, columns = X.germ_columns(algebra.r)
        values = []
        for col in columns:
            total = field_.zero
            for pos, c in col.items():
                if pos in stacked:
                    total = total + c * stacked[pos]
            values.append(total)
        gram = _gram_rank(algebra.dim, values, algebra._basis_product, field_)
        return TraceMap("components", tuple(values), local, gram, seed)
    for attempt in range(1, budget + 1):
        values = tuple(field_.random_element(rng, bound) for _ in range(algebra.dim))
        gram = _gram_rank(algebra.dim, values, algebra._basis_product, field_)
        if gram == algebra.dim:
            logger.debug("global trace after %d attempts", attempt)
            return TraceMap("global", values, (), gram, seed)
    raise RetryBudgetExhaustedError("no trace functional on Q^h(R_X)_0", seed=seed, attempts=budget)


# ---------------------------------------------------------------------------
# Complementary module and different
# ---------------------------------------------------------------------------

def complementary_piece(algebra: QuotientAlgebra, sigma: TraceMap, t: int) -> list:
    """Basis of C_t inside A."""
    constraints = algebra.unit_basis(-t - 1)
    if not constraints:
        return [{k: algebra.ring.field.one} for k in range(algebra.dim)]
    images = []
    for k in range(algebra.dim):
        unit = {k: algebra.ring.field.one}
        images.append({pos: v for pos, u in enumerate(constraints)
                       if (v := sigma(algebra.multiply(unit, u)))})
    return kernel(images, algebra.ring.field)


def complementary_module(X: Scheme, sigma: TraceMap,
                         algebra: Optional[QuotientAlgebra] = None) -> dict:
    """{t: basis of C_t} for t = -r_X-1..1."""
    algebra = algebra or QuotientAlgebra(X)
    r = algebra.r
    return {t: complementary_piece(algebra, sigma, t) for t in range(-r - 1, 2)}


def _c_dims_ok(X: Scheme, pieces: dict) -> bool:
    return all(len(basis) == X.degree - X.hf(-t - 1) for t, basis in pieces.items())


def different_pieces(X: Scheme, algebra: QuotientAlgebra, pieces: dict) -> dict:
    """{i: basis of delta_i as forms} for i = 0..2 r_X."""
    r = algebra.r
    out = {}
    for i in range(2 * r + 1):
        monos = X.ideal.standard_monomials(i)
        block_terms = []
        for t in range(-r, 1):
            if i + t >= r:
                continue
            space = algebra.unit_space(i + t)
            for c in pieces[t]:
                block_terms.append((space, c))
        images = []
        for m in monos:
            u = algebra.embed(X.ring.monomial(m))
            blocks = [space.reduce(algebra.multiply(u, c)) for space, c in block_terms]
            images.append(concat(blocks, [algebra.dim] * len(blocks)))
        if block_terms:
            basis = [Poly(X.ring, {monos[k]: X.field(c) for k, c in rel.items() if c})
                     for rel in kernel(images, X.field)]
        else:
            basis = [X.ring.monomial(m) for m in monos]
        out[i] = basis
    return out


@dataclass
class DedekindReport:
    hf_delta: list
    alpha_delta: Optional[int]
    ri_delta: Optional[int]
    hf_c: dict
    hf_c_expected: dict
    flags: dict
    trace_mode: str
    seed: Optional[int]
    regularity_index: int
    degree: int
    i0: Optional[int] = None
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = dict(self.__dict__)
        out["hf_c"] = {str(t): v for t, v in self.hf_c.items()}
        out["hf_c_expected"] = {str(t): v for t, v in self.hf_c_expected.items()}
        return out


def _regularity(values: list, eventual: int) -> Optional[int]:
    last = max((i for i, v in enumerate(values) if v != eventual), default=-1)
    return last + 1


def _in_span(X: Scheme, basis: list, f: Poly, degree: int) -> bool:
    ech = EchelonForm(field=X.field)
    for g in basis:
        ech.insert(X.ideal.coordinates(g, degree))
    return ech.contains(X.ideal.coordinates(f, degree))


def dedekind_different(X: Scheme, sigma: Optional[TraceMap] = None, seed: int = 0,
                       budget: int = TRACE_RETRY_BUDGET) -> DedekindReport:
    """
    Hilbert function of the Dedekind different for a trace map (drawn from seed if absent).

    A drawn trace is redrawn until the dimensions of C match
    deg(X) - HF_X(-t-1) in every computed degree.
    """
    if X.is_empty:
        raise NotGorensteinError("the empty scheme has no Dedekind different")
    algebra = QuotientAlgebra(X)
    r = algebra.r
    rng = random.Random(seed)
    pieces = None
    if sigma is not None:
        pieces = complementary_module(X, sigma, algebra)
    else:
        for attempt in range(1, budget + 1):
            sigma = draw_trace(X, algebra, rng, seed)
            pieces = complementary_module(X, sigma, algebra)
            if _c_dims_ok(X, pieces):
                break
            logger.info("trace attempt %d: C has the wrong dimensions, redrawing", attempt)
        else:
            raise RetryBudgetExhaustedError("no trace map with the expected C dimensions",
                                            seed=seed, attempts=budget)

    delta = different_pieces(X, algebra, pieces)
    hf_delta = [len(delta[i]) for i in range(2 * r + 1)]
    alpha = next((i for i, v in enumerate(hf_delta) if v), None)
    ri = _regularity(hf_delta, X.degree)
    hf_c = {t: len(basis) for t, basis in pieces.items()}
    hf_c_expected = {t: X.degree - X.hf(-t - 1) for t in pieces}

    ideal_ok = True
    for i in range(2 * r):
        for f in delta[i]:
            for k in range(X.ring.nvars):
                shifted = f.shift(tuple(1 if j == k else 0 for j in range(X.ring.nvars)))
                if not _in_span(X, delta[i + 1], shifted, i + 1):
                    ideal_ok = False
    x0_top = X.ring.monomial(_x0_power(X.ring.nvars, 2 * r))
    flags = {
        "c_dimensions": hf_c == hf_c_expected,
        "c_generated_in_nonpositive_degrees": (
            len(pieces[1]) == len(pieces[0]) == rank(pieces[0] + pieces[1], X.field)),
        "x0_power_in_delta": _in_span(X, delta[2 * r], x0_top, 2 * r),
        "ideal": ideal_ok,
        "monotone": all(a <= b for a, b in zip(hf_delta, hf_delta[1:])),
        "top_value": hf_delta[-1] == X.degree,
        "ri_bounds": ri is not None and r <= ri <= 2 * r,
    }
    logger.info("Dedekind different: HF %s, ri %s", hf_delta, ri)
    return DedekindReport(hf_delta, alpha, ri, hf_c, hf_c_expected, flags,
                          sigma.mode, seed, r, X.degree)


def dedekind_checks(X: Scheme, report: DedekindReport, max_d: Optional[int]) -> dict:
    """
    Bounds relating the different to the Cayley-Bacharach degree d = max_d.

    The results are stored in report.checks (and report.i0) and returned.
    """
    if X.field.is_prime_field:
        message = f"degree bounds for the different assume an infinite field, not {X.field.name}"
        logger.warning(message)
        warnings.warn(message, FiniteFieldWarning, stacklevel=2)
    if max_d is None:
        report.checks = {"applicable": False}
        return report.checks
    d, r = max_d, report.regularity_index
    hf = report.hf_delta

    def shifted(i, s):
        return X.hf(i - s)

    i0 = next((i for i, v in enumerate(hf) if v > 0 and v == shifted(i, d + 1)), None)
    report.i0 = i0
    checks = {
        "applicable": True,
        "d": d,
        "alpha_bounds": report.alpha_delta is not None and d + 1 <= report.alpha_delta <= 2 * r,
        "degreewise_bound": all(v <= shifted(i, d + 1) for i, v in enumerate(hf)),
        "equality_persists": i0 is not None and all(
            hf[i] == shifted(i, d + 1) for i in range(i0, len(hf))),
        "ri_formula": i0 is not None and report.ri_delta == max(i0, r + d + 1),
    }
    if d == r - 1:
        equality = all(v == shifted(i, r) for i, v in enumerate(hf))
        checks["cayley_bacharach_ri"] = report.ri_delta == 2 * r
        checks["gorenstein_shift"] = equality == X.is_arithmetically_gorenstein
        checks["shifted_equality"] = equality
    report.checks = checks
    return checks
