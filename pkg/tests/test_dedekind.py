"""Trace maps, the complementary module and the Dedekind different."""

import random

import pytest

from algebra.dedekind import (
    QuotientAlgebra,
    complementary_module,
    dedekind_checks,
    dedekind_different,
    draw_trace,
    local_trace,
)
from algebra.errors import FiniteFieldWarning, NotGorensteinError
from algebra.polycore import AffinePoint, parse_poly
from algebra.scheme import SchemeComponent, empty_scheme, scheme_from_components
from config.settings import QUADRICS_X_FILE
from factories import instances, random_scheme
from utils.data_manager import golden_path, parse_scheme_file


def test_reduced_points(Xp):
    report = dedekind_different(Xp, seed=0)
    assert report.hf_delta == [0, 0, 1, 3, 4]
    assert report.ri_delta == 4
    assert report.alpha_delta == 2
    assert report.trace_mode == "components"
    assert all(report.flags.values()), report.flags
    assert report.hf_c == report.hf_c_expected


def test_quartic_uses_a_global_trace(quartic):
    report = dedekind_different(quartic, seed=0)
    assert report.hf_delta == [0, 0, 0, 1, 2, 3, 4]
    assert report.ri_delta == 6
    assert report.trace_mode == "global"
    assert all(report.flags.values()), report.flags


def test_double_point(X):
    report = dedekind_different(X, seed=1)
    assert report.hf_delta[-1] == X.degree
    assert report.flags["c_dimensions"]
    assert report.flags["ideal"]
    assert report.flags["x0_power_in_delta"]


def test_checks_for_cayley_bacharach_schemes(Xp, quartic):
    for Z, d in ((Xp, 1), (quartic, 2)):
        report = dedekind_different(Z, seed=0)
        checks = dedekind_checks(Z, report, d)
        assert checks["applicable"]
        assert all(v for k, v in checks.items() if k != "d"), checks
        assert checks["shifted_equality"]
        assert report.i0 == report.alpha_delta


def test_checks_not_applicable(Xp):
    report = dedekind_different(Xp, seed=0)
    assert dedekind_checks(Xp, report, None) == {"applicable": False}
    assert report.to_dict()["checks"] == {"applicable": False}


def test_given_trace_map(Xp):
    algebra = QuotientAlgebra(Xp)
    sigma = draw_trace(Xp, algebra, random.Random(3), seed=3)
    assert sigma.gram_rank == algebra.dim
    pieces = complementary_module(Xp, sigma, algebra)
    assert len(pieces[0]) == Xp.degree - Xp.hf(-1)
    assert dedekind_different(Xp, sigma=sigma).hf_delta == [0, 0, 1, 3, 4]


def test_local_trace_is_nondegenerate(X):
    trace = local_trace(X.local_algebras[3], seed=0)
    assert trace.gram_rank == 2


def test_report_keys_are_strings(Xp):
    data = dedekind_different(Xp, seed=0).to_dict()
    assert set(data["hf_c"]) == {"-3", "-2", "-1", "0", "1"}


def test_finite_field_checks_warn():
    Xp = parse_scheme_file(golden_path(QUADRICS_X_FILE), field_override="Fp:32003")
    report = dedekind_different(Xp, seed=0)
    assert report.hf_delta == [0, 0, 1, 3, 4]
    with pytest.warns(FiniteFieldWarning):
        dedekind_checks(Xp, report, 1)


def test_needs_gorenstein_points(ring):
    fat = scheme_from_components(ring, [
        SchemeComponent(AffinePoint.from_projective(ring.field, (1, 0, 0)),
                        tuple(parse_poly(ring, g) for g in ("X1^2", "X1*X2", "X2^2"))),
        SchemeComponent(AffinePoint.from_projective(ring.field, (1, 1, 1))),
    ])
    with pytest.raises(NotGorensteinError):
        dedekind_different(fat, seed=0)
    with pytest.raises(NotGorensteinError):
        dedekind_different(empty_scheme(ring), seed=0)


@pytest.mark.slow
@pytest.mark.parametrize("seed,field,double", instances(12, start=300))
def test_flags_on_random_points(seed, field, double):
    X = random_scheme(seed, field, double)
    report = dedekind_different(X, seed=seed)
    assert all(report.flags.values()), report.flags
