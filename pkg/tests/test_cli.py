"""The command-line entry point: verbs, output formats and exit codes."""

import json

import pytest

from config import settings
from config.settings import (
    CUBICS_W_FILE,
    CUBICS_X_FILE,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_VALIDATION,
    P1_QUARTIC_FILE,
    QUADRICS_X_FILE,
)
from main import build_parser, main
from utils.data_manager import golden_path, parse_scheme_file


def _json(capsys, argv):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_analyze_text(capsys):
    assert main(["analyze", golden_path(CUBICS_W_FILE)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "deg: 9" in out
    assert "HF: 0:1 1:3 2:6 3:8 4:9" in out
    assert "r: 4" in out


def test_analyze_json_is_deterministic(capsys):
    argv = ["analyze", golden_path(CUBICS_X_FILE), "--format", "json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    assert json.loads(first)["scheme"]["degree"] == 5


def test_analyze_nonzerodivisor_forms(capsys):
    code, data = _json(capsys, ["analyze", golden_path(CUBICS_X_FILE),
                                "--form", "X0", "--form", "X1 - 2*X0"])
    assert code == EXIT_OK
    assert [r["nonzerodivisor"] for r in data["nonzerodivisors"]] == [True, False]


def test_residual(capsys):
    code, data = _json(capsys, ["residual", "-w", golden_path(CUBICS_W_FILE),
                                golden_path(CUBICS_X_FILE)])
    assert code == EXIT_OK
    assert data["Y"]["degree"] == 4
    assert data["linkage"]["all_pass"] is True


def test_link_report_with_point(capsys):
    code, data = _json(capsys, ["link-report", "-w", golden_path(CUBICS_W_FILE),
                                golden_path(CUBICS_X_FILE), "--point", "4"])
    assert code == EXIT_OK
    assert data["all_pass"] is True
    assert data["maximal_subscheme"]["point"] == "p5"
    assert data["maximal_subscheme"]["degree_Yprime"] == 5


def test_cbp_single_degree(capsys):
    code, data = _json(capsys, ["cbp", "-w", golden_path(CUBICS_W_FILE),
                                golden_path(CUBICS_X_FILE), "--d", "1"])
    assert code == EXIT_OK
    assert data["verdict"] == "true"
    assert {v["method"] for v in data["verdicts"]} == set(settings.CBP_METHODS)


def test_cbp_profile_text(capsys):
    assert main(["cbp", golden_path(P1_QUARTIC_FILE)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "canonical" in out
    assert "cayley_bacharach: true" in out


def test_separators_and_point_degrees(capsys):
    code, data = _json(capsys, ["separators", golden_path(QUADRICS_X_FILE), "--point", "4"])
    assert code == EXIT_OK
    assert [row["mu"] for row in data["separators"]] == [2]
    code, data = _json(capsys, ["point-degrees", golden_path(CUBICS_X_FILE)])
    assert [row["degree"] for row in data["point_degrees"]] == [2, 2, 2, 2]
    assert data["max_cbp_degree"] == 1


def test_dedekind(capsys):
    code, data = _json(capsys, ["dedekind", golden_path(QUADRICS_X_FILE), "--seed", "0"])
    assert code == EXIT_OK
    assert data["dedekind"]["hf_delta"] == [0, 0, 1, 3, 4]
    assert data["dedekind"]["checks"]["applicable"] is True


def test_ci_envelope_written(capsys, tmp_path):
    target = tmp_path / "envelope.json"
    code, data = _json(capsys, ["ci-envelope", golden_path(QUADRICS_X_FILE),
                                "--degrees", "3,3", "--output", str(target)])
    assert code == EXIT_OK
    assert data["degrees"] == [3, 3]
    assert data["geometric"] is True
    W = parse_scheme_file(str(target))
    assert W.degree == 9


@pytest.mark.parametrize("argv,code", [
    (["residual", "-w", golden_path(CUBICS_X_FILE), golden_path(CUBICS_X_FILE)], EXIT_PRECONDITION),
    (["separators", golden_path(CUBICS_W_FILE)], EXIT_PRECONDITION),
    (["separators", golden_path(CUBICS_X_FILE), "--point", "9"], EXIT_VALIDATION),
    (["cbp", golden_path(CUBICS_X_FILE), "--d", "1", "--method", "colon"], EXIT_PRECONDITION),
    (["ci-envelope", golden_path(CUBICS_X_FILE), "--degrees", "3,x"], EXIT_VALIDATION),
    (["analyze", "no/such/file.json"], EXIT_VALIDATION),
    (["analyze", golden_path(CUBICS_W_FILE), "--cap", "0"], EXIT_VALIDATION),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert capsys.readouterr().err.startswith("error: ")


def test_bad_file_reports_its_location(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vars": 3, "gens": ["X1^2 +"]}), encoding="utf-8")
    assert main(["analyze", str(bad)]) == EXIT_VALIDATION
    assert "gens[0]" in capsys.readouterr().err


def test_cap_is_restored(capsys):
    saved = settings.DEGREE_SAFETY_BOUND
    assert main(["analyze", golden_path(QUADRICS_X_FILE), "--cap", "30"]) == EXIT_OK
    assert settings.DEGREE_SAFETY_BOUND == saved


def test_parser_requires_a_verb():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_selftest(capsys):
    code, data = _json(capsys, ["selftest"])
    assert code == EXIT_OK
    assert data["all_pass"] is True
    assert all(row["ok"] for row in data["checks"])


def test_selftest_over_a_prime_field(capsys, monkeypatch):
    import commands.selftest as selftest

    fields = []

    def recording(path, field=None):
        fields.append(field)
        return parse_scheme_file(path, field)

    monkeypatch.setattr(selftest, "parse_scheme_file", recording)
    code, data = _json(capsys, ["selftest", "--field", "Fp:32003"])
    assert code == EXIT_OK
    assert fields and set(fields) == {"Fp:32003"}
    assert data["all_pass"] is True
