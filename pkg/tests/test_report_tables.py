"""Text and JSON rendering of reports."""

import json
from fractions import Fraction

import pytest

from algebra.cbp import CbpMethod
from algebra.errors import ParseError
from algebra.polycore import Field, parse_poly
from utils.report_tables import agreement_table, emit, format_hf, jsonable, render_text


def test_jsonable_scalars(ring):
    assert jsonable(Fraction(-1, 2)) == "-1/2"
    assert jsonable(Field.prime(7)(10)) == "3"
    assert jsonable(parse_poly(ring, "X1 + X0")) == "X1 + X0"
    assert jsonable(CbpMethod.COLON) == "colon"
    assert jsonable({1: (True, None)}) == {"1": [True, None]}


def test_format_hf():
    assert format_hf([1, 3, 6, 8, 9]) == "0:1 1:3 2:6 3:8 4:9"
    assert format_hf({"0": 4, "-1": 3}) == "-1:3 0:4"
    assert format_hf([2, 3], start=-1) == "-1:2 0:3"


def test_agreement_table():
    verdicts = [
        {"d": 0, "method": "canonical", "verdict": "true"},
        {"d": 0, "method": "separators", "verdict": "true"},
        {"d": 1, "method": "canonical", "verdict": "false"},
    ]
    table = agreement_table(verdicts)
    assert list(table.columns) == ["canonical", "separators"]
    assert table.at[1, "canonical"] == "false"
    assert table.at[1, "separators"] == ""


def test_scheme_summary_lines():
    report = {"title": "analyze W",
              "scheme": {"degree": 9, "hilbert_function": [1, 3, 6, 8, 9, 9],
                         "regularity_index": 4, "locally_gorenstein": None}}
    lines = render_text(report).splitlines()
    assert lines[:2] == ["analyze W", "---------"]
    assert "  deg: 9" in lines
    assert "  HF: 0:1 1:3 2:6 3:8 4:9 5:9" in lines
    assert "  r: 4" in lines
    assert "  locally_gorenstein: -" in lines


def test_empty_scheme_marker():
    text = render_text({"Y": {"degree": 0, "hilbert_function": [], "regularity_index": None}})
    assert "deg: 0 (empty scheme)" in text


def test_records_render_as_table():
    text = render_text({"rows": [{"point": "p1", "degree": 2}, {"point": "p2", "degree": 1}]})
    assert "point" in text and "degree" in text
    assert "p2" in text


def test_json_is_stable():
    report = {"b": Fraction(1, 3), "a": [Fraction(2)]}
    first = emit(report, "json")
    assert first == emit(dict(reversed(report.items())), "json")
    assert json.loads(first) == {"a": ["2"], "b": "1/3"}


def test_unknown_format():
    with pytest.raises(ParseError):
        emit({}, "yaml")
