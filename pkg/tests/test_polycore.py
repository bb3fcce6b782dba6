"""Scalars, polynomial arithmetic, parsing and point handling."""

from fractions import Fraction

import pytest

from algebra.errors import ParseError, RingMismatchError, SupportAtInfinityError
from algebra.polycore import (
    AffinePoint,
    Field,
    PolyRing,
    dehomogenize,
    evaluate,
    format_poly,
    graded_basis,
    homogenize,
    linear_combination,
    multiply,
    parse_poly,
    translate,
)


def test_field_parsing():
    assert Field.parse("Q").characteristic == 0
    assert Field.parse("Fp:7").characteristic == 7
    assert Field.parse({"Fp": 32003}).name == "F_32003"
    with pytest.raises(ParseError):
        Field.parse("Fp:8")
    with pytest.raises(ParseError):
        Field.parse("R")


def test_prime_field_arithmetic():
    F = Field.prime(7)
    assert F(3) * F(5) == F(1)
    assert F(3) / F(3) == F.one
    assert F("1/2") * F(2) == F.one
    assert not F(14)


def test_parse_and_coefficients(ring):
    f = parse_poly(ring, "X1^2 - 1/2*X0*X2 + 3")
    assert f.coefficient((0, 2, 0)) == 1
    assert f.coefficient((1, 0, 1)) == Fraction(-1, 2)
    assert f.coefficient((0, 0, 0)) == 3
    assert not f.is_homogeneous
    g = parse_poly(ring, "(X2 - X0)*(X1 + X0)")
    assert g == parse_poly(ring, "X1*X2 + X0*X2 - X0*X1 - X0^2")


@pytest.mark.parametrize("text", ["X3 + X1", "X1^^2", "X1 +* X2", "sqrt(2)*X1"])
def test_parse_rejects(ring, text):
    with pytest.raises(ParseError):
        parse_poly(ring, text)


def test_degrevlex_with_x0_smallest(ring):
    f = parse_poly(ring, "X1^2 + X1*X2 + X0*X2")
    assert f.lm == (0, 1, 1)
    assert parse_poly(ring, "X0*X2 + X1^2").lm == (0, 2, 0)
    assert graded_basis(ring, 1) == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert len(graded_basis(ring, 4)) == 15


def test_arithmetic(ring):
    x0, x1, x2 = ring.gens()
    f = x1 - x0 * 2
    assert multiply(f, f) == x1 * x1 - x0 * x1 * 4 + x0 * x0 * 4
    assert (f ** 2).degree == 2
    assert linear_combination(ring, [1, -1], [x1, x1]).is_zero
    assert (x1 * x2).shift((2, 0, 0)) == x0 * x0 * x1 * x2
    assert (x0 * x0 * x1).x0_order() == 2
    assert (x0 * x1 + x1 * x2).drop_x0_terms() == x1 * x2
    assert parse_poly(ring, "2*X1 - 4*X2").monic() == parse_poly(ring, "X2 - 1/2*X1")


def test_ring_mismatch(ring):
    other = PolyRing(2)
    with pytest.raises(RingMismatchError):
        ring.var(1) + other.var(1)


def test_format_is_parseable(ring):
    f = parse_poly(ring, "X0^2 - 1/4*X1^2 - 1/2*X0*X2 - 1/4*X1*X2")
    assert parse_poly(ring, format_poly(f)) == f
    assert format_poly(ring.zero()) == "0"


def test_homogenize_and_translate(ring):
    f = parse_poly(ring, "X1^2 - X0*X2")
    g = dehomogenize(f)
    assert g.ring == ring.affine_ring()
    assert homogenize(g, 2) == f
    affine = PolyRing(1, first_index=1)
    y = affine.var(0)
    assert translate(y * y, [Fraction(1)]) == y * y + y * 2 + affine.one()


def test_points(ring):
    field = ring.field
    p = AffinePoint.from_projective(field, [2, 4, 0])
    assert p.coords == (1, 2, 0)
    assert evaluate(parse_poly(ring, "X1 - 2*X0"), p) == 0
    assert evaluate(parse_poly(ring, "X1*X2 + X0^2"), p) == 1
    with pytest.raises(SupportAtInfinityError):
        AffinePoint.from_projective(field, [0, 1, 0])
