"""Gröbner bases and Hilbert functions, checked against sympy and a dense count."""

import random
from fractions import Fraction

import pytest
import sympy

from algebra.errors import CapExceededError, NotHomogeneousError
from algebra.gbasis import HomogIdeal, buchberger, hilbert_numerator, minimalize
from algebra.polycore import Field, PolyRing, parse_poly
from factories import PRIME, dense_hf

CUBICS = ["X1^3 - 4*X0^2*X1", "(X2 - X0)*(X1^2 + X2^2 - 4*X0^2)"]


def _sympy_basis(texts):
    x0, x1, x2 = sympy.symbols("X0 X1 X2")
    exprs = [sympy.sympify(t.replace("^", "**")) for t in texts]
    basis = sympy.groebner(exprs, x2, x1, x0, order="grevlex")
    out = set()
    for g in basis.exprs:
        poly = sympy.Poly(g, x2, x1, x0, domain="QQ").monic()
        terms = {(e0, e1, e2): Fraction(int(c.p), int(c.q))
                 for (e2, e1, e0), c in poly.terms()}
        out.add(frozenset(terms.items()))
    return out


def _ours(ideal):
    return {frozenset(g.terms.items()) for g in ideal.basis}


def test_cubics_basis_matches_sympy(ring):
    ideal = HomogIdeal(ring, [parse_poly(ring, t) for t in CUBICS])
    assert _ours(ideal) == _sympy_basis(CUBICS)


def test_points_basis_matches_sympy(X):
    texts = [str(g) for g in X.ideal.basis]
    assert _ours(X.ideal) == _sympy_basis(texts)


def test_cubics_hilbert_data(ring):
    ideal = HomogIdeal(ring, [parse_poly(ring, t) for t in CUBICS])
    data = ideal.hilbert
    assert data.table(4) == [1, 3, 6, 8, 9]
    assert data.regularity_index == 4
    assert data.degree == 9
    assert data.alpha == 3
    assert data.hf(10) == 9
    assert data.hf(-1) == 0


def test_hilbert_numerator_of_complete_intersection():
    assert hilbert_numerator([(0, 2, 0), (0, 0, 2)], 3) == [1, 0, -2, 0, 1]
    assert minimalize([(0, 2, 0), (0, 3, 1), (1, 2, 0)]) == [(0, 2, 0)]


def test_unit_ideal_has_no_regularity(ring):
    ideal = HomogIdeal.unit(ring)
    assert ideal.is_unit
    assert ideal.regularity_index() is None
    assert ideal.hilbert_function(3) == 0


def test_capped_basis_is_truncated(ring):
    gens = [parse_poly(ring, "X1*X2"), parse_poly(ring, "X1^2 + X2^2")]
    truncated = buchberger(gens, cap=2)
    assert not truncated.is_complete
    assert truncated.covers(2) and not truncated.covers(3)
    with pytest.raises(CapExceededError):
        truncated.reduce(parse_poly(ring, "X2^3"))

    capped = HomogIdeal(ring, gens, cap=2)
    assert capped.hilbert_function(2) == 4
    with pytest.raises(CapExceededError):
        capped.piece(3)

    full = HomogIdeal(ring, gens)
    assert full.hilbert.table(3) == [1, 3, 4, 4]
    assert full.contains(parse_poly(ring, "X2^3"))


def test_inhomogeneous_generator_rejected(ring):
    with pytest.raises(NotHomogeneousError):
        HomogIdeal(ring, [parse_poly(ring, "X1^2 + X2")])


def test_piece_dimension(ring):
    ideal = HomogIdeal(ring, [parse_poly(ring, t) for t in CUBICS])
    for d in range(6):
        piece = ideal.piece(d)
        assert len(piece) == ideal.dim_piece(d)
        assert all(ideal.contains(f) for f in piece)


def _random_forms(rng, ring):
    forms = []
    for _ in range(3):
        d = rng.randint(2, 3)
        terms = {m: rng.randint(-3, 3) for m in ring.graded_basis(d)}
        form = ring.from_dict(terms)
        if form:
            forms.append(form)
    return forms


@pytest.mark.parametrize("seed", range(24))
def test_hilbert_function_matches_dense_count(seed):
    rng = random.Random(seed)
    field = Field.rationals() if seed % 2 == 0 else Field.prime(PRIME)
    ring = PolyRing(3, field)
    gens = _random_forms(rng, ring)
    ideal = HomogIdeal(ring, gens)
    for d in range(7):
        assert ideal.hilbert_function(d) == dense_hf(ring, gens, d)
