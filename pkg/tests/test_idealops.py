"""Intersections, colons and saturation."""

import pytest

from algebra.errors import DegreeOutOfRangeError, VacuousPieceWarning
from algebra.gbasis import HomogIdeal
from algebra.idealops import (
    GradedSubspace,
    colon,
    colon_by_piece,
    combine,
    graded_piece,
    intersect_all,
    piece_colon,
    saturate_x0,
)
from algebra.polycore import parse_poly

H = "X0^2 + X0*X1 + 1/4*X1^2 - 1/2*X0*X2 - 1/4*X1*X2"


def _point_ideal(ring, a1, a2):
    return HomogIdeal(ring, [parse_poly(ring, f"X1 - {a1}*X0"), parse_poly(ring, f"X2 - {a2}*X0")])


def test_colon_links_back(W, X):
    Y = colon(W.ideal, X.ideal)
    assert Y.hilbert.degree == W.degree - X.degree
    assert Y.contains(parse_poly(X.ring, H))
    assert colon(W.ideal, Y).equals(X.ideal)


def test_intersection_of_collinear_points(ring):
    ideals = [_point_ideal(ring, a, 0) for a in (0, 1, 2)]
    meet = intersect_all(ring, ideals)
    assert meet.hilbert.table(3) == [1, 2, 3, 3]
    assert meet.contains(parse_poly(ring, "X2"))
    assert meet.contains(parse_poly(ring, "X1*(X1 - X0)*(X1 - 2*X0)"))
    assert meet.is_saturated


def test_combine_modes(ring):
    I = HomogIdeal(ring, [parse_poly(ring, "X1")])
    J = HomogIdeal(ring, [parse_poly(ring, "X2")])
    assert combine(I, J, "sum").contains(parse_poly(ring, "X1 + X2"))
    assert combine(I, J, "product").equals(HomogIdeal(ring, [parse_poly(ring, "X1*X2")]))
    assert intersect_all(ring, []).is_unit
    with pytest.raises(ValueError):
        combine(I, J, "quotient")


def test_empty_divisor_piece_warns(W, X):
    with pytest.warns(VacuousPieceWarning):
        result = colon_by_piece(W.ideal, X.ideal, 1)
    assert result is W.ideal


def test_piece_colon_recovers_residual_piece(W, Xp, triple_p):
    result = piece_colon(graded_piece(W.ideal, 4), graded_piece(Xp.ideal, 2), 2)
    assert result.equals(graded_piece(triple_p.Y.ideal, 2))


def test_piece_colon_degree_mismatch(W, Xp):
    with pytest.raises(DegreeOutOfRangeError):
        piece_colon(graded_piece(W.ideal, 4), graded_piece(Xp.ideal, 2), 3)


def test_saturate_x0(ring):
    ideal = HomogIdeal(ring, [parse_poly(ring, "X0*X1"), parse_poly(ring, "X2")])
    assert not ideal.is_saturated
    saturated = saturate_x0(ideal)
    assert saturated.is_saturated
    assert saturated.equals(HomogIdeal(ring, [parse_poly(ring, "X1"), parse_poly(ring, "X2")]))


def test_graded_subspace(ring):
    space = GradedSubspace.spanned_by(ring, 2, [parse_poly(ring, "X1^2 + X0*X2"),
                                                parse_poly(ring, "X0*X2")])
    assert space.dim == 2
    assert space.contains(parse_poly(ring, "X1^2"))
    assert not space.contains(parse_poly(ring, "X2^2"))
    assert not space.contains(parse_poly(ring, "X1"))
    other = GradedSubspace.spanned_by(ring, 2, [parse_poly(ring, "X1^2"), parse_poly(ring, "X0*X2")])
    assert space.equals(other)
    with pytest.raises(DegreeOutOfRangeError):
        GradedSubspace.spanned_by(ring, 2, [parse_poly(ring, "X1")])
