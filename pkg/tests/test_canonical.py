"""Graded pieces of the canonical module and their annihilators."""

import pytest

from algebra.canonical import (
    adapted_basis,
    annihilator_in_degree,
    annihilator_is_zero,
    evaluate_functional,
    find_injective_functional,
    module_action,
    omega_piece,
    restriction_rank,
)
from algebra.errors import (
    ComponentsRequiredError,
    DegreeOutOfRangeError,
    FiniteFieldWarning,
    NotGorensteinError,
)
from algebra.polycore import AffinePoint, parse_poly
from algebra.scheme import SchemeComponent, scheme_from_components
from config.settings import CUBICS_X_FILE
from utils.data_manager import golden_path, parse_scheme_file


def test_adapted_basis_counts(X):
    basis = adapted_basis(X)
    assert len(basis) == X.degree
    assert basis.h_counts == [1, 2, 2]
    assert adapted_basis(X) is basis


def test_adapted_basis_expresses_forms(X):
    basis = adapted_basis(X)
    f = parse_poly(X.ring, "X0*X1 + 3*X2^2")
    coords = basis.express(f)
    rebuilt = sum((basis.padded(k, 2) * a for k, a in coords.items()), X.ring.constant(0))
    assert X.ideal.contains(rebuilt - f)


@pytest.mark.parametrize("d", [0, 1, 2])
def test_omega_piece_dimension(X, d):
    assert len(omega_piece(X, d)) == X.degree - X.hf(d)


def test_module_action_by_x0(X):
    x0 = X.ring.var(0)
    for phi in omega_piece(X, 1):
        moved = module_action(X, x0, phi)
        assert moved.d == 0
        assert moved.coeffs == phi.coeffs


def test_functionals_vanish_on_the_ideal(X):
    basis = adapted_basis(X)
    f = X.ideal.basis[0]
    for phi in omega_piece(X, 0):
        assert not evaluate_functional(basis, phi, f)


@pytest.mark.parametrize("d", [0, 1])
def test_annihilator_stable_above_regularity(X, collinear, d):
    for Z in (X, collinear):
        r = Z.regularity_index
        at_r = annihilator_in_degree(Z, d, r)
        above = annihilator_in_degree(Z, d, r + 1)
        assert at_r.is_zero == above.is_zero
        if at_r.is_zero:
            assert annihilator_in_degree(Z, d, r - 1).is_zero


def test_annihilator_witness(collinear):
    result = annihilator_is_zero(collinear, 1)
    assert not result.is_zero
    assert result.witness is not None
    assert result.dimension >= 1


@pytest.mark.parametrize("d", [0, 1])
def test_restriction_rank(X, d):
    assert restriction_rank(X, d).ok


def test_injective_functional_found(X, Xp):
    phi = find_injective_functional(X, 1, seed=0)
    assert phi is not None and phi.d == 1
    assert find_injective_functional(Xp, 1, seed=0) is not None


def test_no_injective_functional_without_cbp(collinear):
    assert find_injective_functional(collinear, 1, seed=0) is None


def test_finite_field_search_warns():
    X = parse_scheme_file(golden_path(CUBICS_X_FILE), field_override="Fp:32003")
    with pytest.warns(FiniteFieldWarning):
        phi = find_injective_functional(X, 1, seed=0)
    assert phi is not None


def test_preconditions(W, X, ring):
    with pytest.raises(DegreeOutOfRangeError):
        omega_piece(X, -1)
    with pytest.raises(DegreeOutOfRangeError):
        annihilator_is_zero(X, 2)
    with pytest.raises(ComponentsRequiredError):
        find_injective_functional(W, 1, seed=0)
    fat = scheme_from_components(ring, [
        SchemeComponent(AffinePoint.from_projective(ring.field, (1, 0, 0)),
                        tuple(parse_poly(ring, g) for g in ("X1^2", "X1*X2", "X2^2"))),
    ])
    assert fat.hf_table(1) == [1, 3]
    with pytest.raises(NotGorensteinError):
        find_injective_functional(fat, 0, seed=0)
