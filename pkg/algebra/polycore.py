"""
Exact scalars and sparse polynomials over Q or F_p.

Polynomials live in P = K[X0, ..., Xn] (or in the affine ring K[X1, ..., Xn]
after dehomogenization) and are stored as dicts mapping exponent tuples to
nonzero field elements. The monomial order is degree-reverse-lexicographic
with X0 the smallest variable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from tokenize import TokenError
from typing import Iterable, Sequence

import sympy
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import PolynomialError

from algebra.errors import ParseError, RingMismatchError, SupportAtInfinityError

logger = logging.getLogger(__name__)

Monomial = tuple  # exponent vector


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

class ModP:
    """Residue class modulo a prime, kept in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise RingMismatchError(f"F_{self.p} and F_{other.p} do not mix")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"{other} has no image in F_{self.p}")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else ModP(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else ModP(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else ModP(v - self.value, self.p)

    def __mul__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else ModP(self.value * v, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self * ModP(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModP(v, self.p) * self.inverse()

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return ModP(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other):
        v = self._other(other)
        return NotImplemented if v is None else self.value == v

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Field:
    """Q when characteristic is 0, otherwise the prime field F_p."""

    characteristic: int = 0

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        if p < 2 or not sympy.isprime(p):
            raise ParseError(f"{p} is not a prime")
        return cls(p)

    @classmethod
    def parse(cls, description) -> "Field":
        """Accepts "Q", "Fp:<p>", {"Fp": p} or an existing Field."""
        if isinstance(description, Field):
            return description
        if isinstance(description, dict) and set(description) == {"Fp"}:
            return cls.prime(int(description["Fp"]))
        if isinstance(description, str):
            text = description.strip()
            if text in ("Q", "QQ"):
                return cls.rationals()
            if text.startswith("Fp:"):
                try:
                    return cls.prime(int(text[3:]))
                except ValueError as exc:
                    raise ParseError(f"bad field {description!r}") from exc
        raise ParseError(f"unknown field {description!r}; use 'Q' or 'Fp:<p>'")

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"

    def __call__(self, value):
        if self.characteristic == 0:
            if isinstance(value, ModP):
                raise RingMismatchError("a residue class is not a rational number")
            return Fraction(value)
        if isinstance(value, ModP):
            if value.p != self.characteristic:
                raise RingMismatchError(f"{value!r} is not in {self.name}")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        zero = ModP(0, self.characteristic)
        return zero + value

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def random_element(self, rng, bound: int):
        """Uniform over F_p, or an integer in [-bound, bound] over Q."""
        if self.characteristic:
            return self(rng.randrange(self.characteristic))
        return self(rng.randint(-bound, bound))

    def to_text(self, value) -> str:
        return str(value)

    def __str__(self):
        return self.name


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

def order_key(mono: Monomial):
    """Sort key of the monomial order; larger key means larger monomial."""
    return (sum(mono),) + tuple(-e for e in mono)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple:
    """All monomials of degree d in nvars variables, largest first."""
    if d < 0:
        return ()
    return tuple(sorted(_compositions(d, nvars), key=order_key, reverse=True))


# ---------------------------------------------------------------------------
# Rings and polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyRing:
    """The ring tag (number of variables, field); first_index names the first variable."""

    nvars: int
    field: Field = Field()
    first_index: int = 0

    @property
    def n(self) -> int:
        """Dimension of the projective space."""
        return self.nvars - 1

    @property
    def is_projective(self) -> bool:
        return self.first_index == 0

    def variable_names(self) -> list:
        return [f"X{self.first_index + k}" for k in range(self.nvars)]

    def affine_ring(self) -> "PolyRing":
        return PolyRing(self.nvars - 1, self.field, self.first_index + 1)

    def projective_ring(self) -> "PolyRing":
        return PolyRing(self.nvars + 1, self.field, self.first_index - 1)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.nvars, field, self.first_index)

    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {self.unit_monomial(): c} if c else {})

    def monomial(self, mono: Monomial, c=1) -> "Poly":
        c = self.field(c)
        return Poly(self, {tuple(mono): c} if c else {})

    def var(self, k: int) -> "Poly":
        """The variable with position k (X_k in a projective ring)."""
        exps = [0] * self.nvars
        exps[k] = 1
        return self.monomial(tuple(exps))

    def gens(self) -> list:
        return [self.var(k) for k in range(self.nvars)]

    def from_dict(self, terms: dict) -> "Poly":
        clean = {}
        for mono, c in terms.items():
            c = self.field(c)
            if c:
                clean[tuple(mono)] = c
        return Poly(self, clean)

    def graded_basis(self, d: int) -> tuple:
        return monomials_of_degree(self.nvars, d)

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)

    def check(self, other: "PolyRing"):
        if self != other:
            raise RingMismatchError(f"ring mismatch: {self} vs {other}")

    def __str__(self):
        return f"{self.field.name}[{', '.join(self.variable_names())}]"


class Poly:
    """Sparse polynomial; immutable by convention."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # structure -----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    @property
    def lm(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=order_key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    # arithmetic ------------------------------------------------------------

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        self.ring.check(other.ring)

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m)
            v = c if v is None else v + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Poly(self.ring, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Poly":
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, c) -> "Poly":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def shift(self, mono: Monomial) -> "Poly":
        """Multiply by a monomial."""
        return Poly(self.ring, {mono_mul(m, mono): c for m, c in self.terms.items()})

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        inv = self.ring.field.one / self.lc
        return Poly(self.ring, {m: c * inv for m, c in self.terms.items()})

    # X0 handling -----------------------------------------------------------

    def x0_order(self) -> int:
        """Largest k with X0^k dividing the polynomial (0 for the zero polynomial)."""
        return min((m[0] for m in self.terms), default=0)

    def divide_x0(self, k: int) -> "Poly":
        return Poly(self.ring, {(m[0] - k,) + m[1:]: c for m, c in self.terms.items()})

    def drop_x0_terms(self) -> "Poly":
        """Image modulo X0."""
        return Poly(self.ring, {m: c for m, c in self.terms.items() if m[0] == 0})

    # comparison and printing ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def multiply(f: Poly, g: Poly) -> Poly:
    """Product of two polynomials of the same ring."""
    f.ring.check(g.ring)
    terms: dict = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            m = mono_mul(m1, m2)
            v = terms.get(m)
            terms[m] = c1 * c2 if v is None else v + c1 * c2
    return Poly(f.ring, {m: c for m, c in terms.items() if c})


def linear_combination(ring: PolyRing, coeffs: Iterable, polys: Sequence[Poly]) -> Poly:
    terms: dict = {}
    for c, p in zip(coeffs, polys):
        if not c:
            continue
        for m, v in p.terms.items():
            terms[m] = terms.get(m, ring.field.zero) + c * v
    return Poly(ring, {m: c for m, c in terms.items() if c})


@dataclass(frozen=True)
class AffinePoint:
    """A K-rational point (1 : a1 : ... : an) of projective n-space."""

    coords: tuple

    @classmethod
    def from_projective(cls, field: Field, values: Sequence) -> "AffinePoint":
        coords = [field(v) for v in values]
        if not coords or not coords[0]:
            raise SupportAtInfinityError(
                f"point ({' : '.join(map(str, coords))}) lies on Z(X0)")
        lead = coords[0]
        return cls(tuple(c / lead for c in coords))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def affine(self) -> tuple:
        return self.coords[1:]

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


def evaluate(f: Poly, point: AffinePoint):
    """Value of f at the normalized coordinates of a point."""
    if len(point.coords) != f.ring.nvars:
        raise RingMismatchError(
            f"point of P^{point.n} evaluated in {f.ring.nvars} variables")
    total = f.ring.field.zero
    for mono, c in f.terms.items():
        term = c
        for a, e in zip(point.coords, mono):
            if e:
                term = term * a ** e
        total = total + term
    return total


def graded_basis(ring: PolyRing, d: int) -> tuple:
    """All binomial(n+d, d) monomials of degree d, largest first."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return ring.graded_basis(d)


def dehomogenize(f: Poly) -> Poly:
    """Substitute X0 = 1; the result lives in the affine ring."""
    if not f.ring.is_projective:
        raise RingMismatchError("dehomogenize expects a projective ring")
    affine = f.ring.affine_ring()
    terms: dict = {}
    for m, c in f.terms.items():
        key = m[1:]
        terms[key] = terms.get(key, affine.field.zero) + c
    return Poly(affine, {m: c for m, c in terms.items() if c})


def homogenize(g: Poly, d: int) -> Poly:
    """Homogenize an affine polynomial to degree d with X0."""
    ring = g.ring.projective_ring()
    if g.degree > d:
        raise ValueError(f"cannot homogenize a degree {g.degree} polynomial to degree {d}")
    return Poly(ring, {(d - sum(m),) + m: c for m, c in g.terms.items()})


def translate(g: Poly, offsets: Sequence) -> Poly:
    """Substitute each variable Y_k by Y_k + offsets[k]."""
    ring = g.ring
    zero = ring.field.zero
    result: dict = {}
    for mono, c in g.terms.items():
        partial = {ring.unit_monomial(): c}
        for k, e in enumerate(mono):
            if e == 0:
                continue
            a = offsets[k]
            expanded: dict = {}
            for pm, pc in partial.items():
                for j in range(e + 1):
                    if j < e and not a:
                        continue
                    coeff = pc * comb(e, j) * a ** (e - j)
                    nm = pm[:k] + (pm[k] + j,) + pm[k + 1:]
                    expanded[nm] = expanded.get(nm, zero) + coeff
            partial = expanded
        for m, v in partial.items():
            result[m] = result.get(m, zero) + v
    return Poly(ring, {m: c for m, c in result.items() if c})


# ---------------------------------------------------------------------------
# Text grammar
# ---------------------------------------------------------------------------

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """
    Parse ``c*X0^a*X1^b ± ...`` with rational coefficients ``p/q``.

    Args:
        ring (PolyRing): Target ring; only its variable names are accepted.
        text (str): Polynomial text.

    Returns:
        Poly: The parsed polynomial.
    """
    names = ring.variable_names()
    symbols = sympy.symbols(names)
    local = dict(zip(names, symbols))
    try:
        expr = parse_expr(str(text), local_dict=local, transformations=_TRANSFORMATIONS)
        stray = expr.free_symbols - set(symbols)
        if stray:
            raise ParseError(
                f"unknown variables {sorted(map(str, stray))} in {text!r}; ring has {names}")
        parsed = sympy.Poly(expr, *symbols)
    except ParseError:
        raise
    except (SympifyError, PolynomialError, SyntaxError, TypeError, TokenError, AttributeError) as exc:
        raise ParseError(f"cannot parse polynomial {text!r}: {exc}") from exc
    terms = {}
    for exps, coeff in parsed.terms():
        if not coeff.is_Rational:
            raise ParseError(f"coefficient {coeff} of {text!r} is not rational")
        value = ring.field(Fraction(int(coeff.p), int(coeff.q)))
        if value:
            terms[tuple(int(e) for e in exps)] = value
    return Poly(ring, terms)


def _format_monomial(ring: PolyRing, mono: Monomial) -> str:
    parts = []
    for k, e in enumerate(mono):
        if e == 1:
            parts.append(f"X{ring.first_index + k}")
        elif e > 1:
            parts.append(f"X{ring.first_index + k}^{e}")
    return "*".join(parts)


def format_poly(f: Poly, monic: bool = False) -> str:
    """Canonical text form, terms in decreasing monomial order."""
    if monic:
        f = f.monic()
    if not f.terms:
        return "0"
    pieces = []
    for mono, c in f.sorted_terms():
        negative = isinstance(c, Fraction) and c < 0
        mag = -c if negative else c
        body = _format_monomial(f.ring, mono)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(pieces)
