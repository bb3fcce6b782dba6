"""Cayley-Bacharach verdicts by every method, and their agreement."""

import pytest

from algebra.cbp import (
    FALSE,
    INCONCLUSIVE,
    TRUE,
    CbpMethod,
    applicable_methods,
    cbp_check,
    cbp_degree,
    cbp_profile,
    is_cayley_bacharach,
)
from algebra.errors import DegreeOutOfRangeError, MissingContextError
from algebra.liaison import link
from factories import enveloped, instances, points_scheme, random_scheme


@pytest.mark.parametrize("method", list(CbpMethod))
def test_every_method_on_golden_scheme(X, triple, method):
    for d in (0, 1):
        assert cbp_check(X, d, method, triple).verdict == TRUE


def test_golden_profile(X, triple):
    profile = cbp_profile(X, triple)
    assert profile.holds == {0: True, 1: True}
    assert profile.max_d == 1
    assert set(profile.table()[1]) == {m.value for m in CbpMethod}
    assert is_cayley_bacharach(X, triple)


def test_piece_witnesses(X, triple):
    verdict = cbp_check(X, 1, "piece", triple)
    witnesses = verdict.evidence["witnesses"]
    assert set(witnesses) == {"p1", "p3", "p4", "p5"}
    assert all(w is not None for w in witnesses.values())


def test_shared_point_leaves_annihilator_inconclusive(Xp, triple_p):
    verdict = cbp_check(Xp, 1, "annihilator", triple_p)
    assert verdict.verdict == INCONCLUSIVE
    assert verdict.holds is None
    assert "witness" in verdict.evidence
    assert cbp_check(Xp, 1, "canonical").verdict == TRUE
    profile = cbp_profile(Xp, triple_p)
    assert profile.holds == {0: True, 1: True}


def test_collinear_points(collinear):
    assert cbp_check(collinear, 0, "separators").verdict == TRUE
    separators = cbp_check(collinear, 1, "separators")
    assert separators.verdict == FALSE
    assert separators.evidence["failing"] == ["p4"]
    assert cbp_check(collinear, 1, "canonical").verdict == FALSE
    profile = cbp_profile(collinear)
    assert profile.holds == {0: True, 1: False}
    assert profile.max_d == 0
    assert not is_cayley_bacharach(collinear)


def test_collinear_points_over_a_prime_field(collinear_fp):
    assert cbp_check(collinear_fp, 0, "separators").verdict == TRUE
    separators = cbp_check(collinear_fp, 1, "separators")
    assert separators.verdict == FALSE
    assert separators.evidence["failing"] == ["p4"]
    assert cbp_profile(collinear_fp).max_d == 0


def test_one_degree_agreement(X, triple, collinear):
    row, holds = cbp_degree(X, 1, triple)
    assert holds is True
    assert {v.method for v in row} == set(CbpMethod)
    row, holds = cbp_degree(collinear, 1)
    assert holds is False
    assert [v.method for v in row] == [CbpMethod.CANONICAL, CbpMethod.SEPARATORS]
    _, holds = cbp_degree(X, 1, methods=["canonical"])
    assert holds is True


def test_one_degree_without_a_conclusive_method(Xp, triple_p):
    row, holds = cbp_degree(Xp, 1, triple_p, methods=["annihilator"])
    assert holds is None
    assert row[0].verdict == INCONCLUSIVE


def test_two_points(ring):
    Z = points_scheme(ring, [(1, 0, 0), (1, 1, 1)])
    assert Z.regularity_index == 1
    profile = cbp_profile(Z)
    assert profile.max_d == 0
    assert is_cayley_bacharach(Z)


def test_single_point_is_vacuous(ring):
    Z = points_scheme(ring, [(1, 3, 4)])
    profile = cbp_profile(Z)
    assert profile.max_d is None
    assert "vacuously" in profile.note
    assert is_cayley_bacharach(Z)


def test_quartic_on_the_line(quartic):
    profile = cbp_profile(quartic)
    assert profile.max_d == 2
    assert applicable_methods(quartic) == [CbpMethod.CANONICAL]


def test_raw_scheme_separators_inconclusive(W):
    verdict = cbp_check(W, 0, "separators")
    assert verdict.verdict == INCONCLUSIVE
    assert is_cayley_bacharach(W)


def test_context_is_required(X, Xp, triple):
    with pytest.raises(MissingContextError):
        cbp_check(X, 1, "colon")
    with pytest.raises(MissingContextError):
        cbp_check(Xp, 1, "piece", triple)


def test_degree_range(X):
    with pytest.raises(DegreeOutOfRangeError):
        cbp_check(X, 2, "canonical")
    with pytest.raises(DegreeOutOfRangeError):
        cbp_check(X, -1, "separators")


def test_unknown_method(X):
    with pytest.raises(ValueError):
        cbp_check(X, 0, "resultant")


@pytest.mark.slow
@pytest.mark.parametrize("seed,field,double", instances(50, start=200))
def test_methods_agree_on_random_points(seed, field, double):
    X = random_scheme(seed, field, double)
    W = enveloped(X, seed)
    profile = cbp_profile(X, link(W, X))
    assert set(profile.holds) == set(range(X.regularity_index))
    assert all(flag is not None for flag in profile.holds.values())
