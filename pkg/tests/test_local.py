"""Local algebras at rational points."""

import pytest

from algebra.errors import NonPrimaryComponentError
from algebra.local import LocalAlgebra
from algebra.polycore import AffinePoint, parse_poly


def _algebra(ring, coords, gens):
    point = AffinePoint.from_projective(ring.field, coords)
    return LocalAlgebra(ring, point, [parse_poly(ring, g) for g in gens])


def test_double_point(ring):
    A = _algebra(ring, (1, 2, 0), ["X1 - 2*X0", "X2^2"])
    assert A.dim == 2
    assert A.is_gorenstein
    assert A.socle == [{1: 1}]
    assert A.germ(parse_poly(ring, "X2")) == {1: 1}
    assert A.germ(parse_poly(ring, "X1 - 2*X0")) == {}
    assert A.germ(parse_poly(ring, "X0^2")) == {0: 1}
    assert A.multiply({1: 1}, {1: 1}) == {}
    assert len(A.mult_table) == 3


def test_lift_form_round_trip(ring):
    A = _algebra(ring, (1, 2, 0), ["X1 - 2*X0", "X2^2"])
    direction = A.default_socle_direction()
    assert A.lift_form(direction) == parse_poly(ring, "X2")
    assert A.germ(A.lift_form(direction)) == direction


def test_fat_point_is_not_gorenstein(ring):
    A = _algebra(ring, (1, 0, 0), ["X1^2", "X1*X2", "X2^2"])
    assert A.dim == 3
    assert A.socle_dimension == 2
    assert not A.is_gorenstein
    assert A.default_socle_direction() is None
    assert A.is_socle_element({1: 1})
    assert not A.is_socle_element({0: 1})
    assert not A.is_socle_element({})


def test_reduced_point(ring):
    A = _algebra(ring, (1, 1, -1), ["X1 - X0", "X2 + X0"])
    assert A.dim == 1
    assert A.is_gorenstein
    assert A.germ(parse_poly(ring, "X1*X2")) == {0: -1}


def test_point_off_the_zero_locus(ring):
    with pytest.raises(NonPrimaryComponentError):
        _algebra(ring, (1, 1, 1), ["X1 - X0", "X2"])
