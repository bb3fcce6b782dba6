"""
Text and JSON rendering of command reports.

Reports are plain dicts. Hilbert function tables print as ``i:HF(i)`` pairs,
lists of records as pandas tables, and CBP verdict lists as an agreement
table with one row per degree and one column per method.
"""

import json
from dataclasses import is_dataclass
from enum import Enum
from fractions import Fraction

import pandas as pd

from config.settings import EMPTY_SCHEME_MARKER, JSON_INDENT, OUTPUT_FORMATS
from algebra.errors import ParseError
from algebra.polycore import ModP, Poly, format_poly

HF_KEYS = {"hilbert_function", "linked_hf", "hf_delta", "hf_c", "hf_c_expected", "h_vector"}
INDENT = "  "


def jsonable(value):
    """
    Convert a report value into JSON-ready data.

    Exact scalars become strings, polynomials their canonical text form and
    dict keys strings.
    """
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (Fraction, ModP)):
        return str(value)
    if isinstance(value, Poly):
        return format_poly(value)
    if isinstance(value, Enum):
        return value.value
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    if is_dataclass(value):
        return jsonable(dict(value.__dict__))
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in value]
    return str(value)


def format_hf(values, start=0):
    """
    Format a Hilbert function table as ``i:HF(i)`` pairs.

    Args:
        values (list | dict): Values from degree ``start`` on, or {degree: value}.
        start (int): First degree of a list.

    Returns:
        str: e.g. "0:1 1:3 2:6 3:8 4:9".
    """
    if isinstance(values, dict):
        pairs = sorted((int(k), v) for k, v in values.items())
    else:
        pairs = list(enumerate(values, start))
    return " ".join(f"{i}:{v}" for i, v in pairs)


def _scalar(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ", ".join(_scalar(v) for v in value) if value else "[]"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_scalar(v)}" for k, v in value.items())
    return str(value)


def _indented(text, indent):
    return [indent + line for line in text.splitlines()]


def agreement_table(verdicts):
    """
    One row per degree d, one column per method.

    Args:
        verdicts (list[dict]): Records with keys d, method and verdict.

    Returns:
        pandas.DataFrame: Verdict strings, "" where a method was not run.
    """
    degrees = sorted({v["d"] for v in verdicts})
    methods = []
    for v in verdicts:
        if v["method"] not in methods:
            methods.append(v["method"])
    table = pd.DataFrame("", index=pd.Index(degrees, name="d"), columns=methods)
    for v in verdicts:
        table.at[v["d"], v["method"]] = v["verdict"]
    return table


def records_table(records):
    """A DataFrame of flat records; nested values are shown inline."""
    rows = [{k: _scalar(v) for k, v in record.items()} for record in records]
    return pd.DataFrame(rows)


def _is_scheme_summary(value):
    return isinstance(value, dict) and "degree" in value and "hilbert_function" in value


def _render_scheme(key, summary, indent):
    lines = [f"{indent}{key}:"] if key else []
    inner = indent + INDENT if key else indent
    if summary["degree"] == 0:
        lines.append(f"{inner}deg: 0 {EMPTY_SCHEME_MARKER}")
        return lines
    lines.append(f"{inner}deg: {summary['degree']}")
    lines.append(f"{inner}HF: {format_hf(summary['hilbert_function'])}")
    lines.append(f"{inner}r: {_scalar(summary.get('regularity_index'))}")
    for k, v in summary.items():
        if k not in ("degree", "hilbert_function", "regularity_index"):
            lines.extend(_render(k, v, inner))
    return lines


def _render(key, value, indent=""):
    if _is_scheme_summary(value):
        return _render_scheme(key, value, indent)
    if key in HF_KEYS and isinstance(value, (list, dict)):
        return [f"{indent}{key}: {format_hf(value)}"]
    if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        if key == "verdicts" and all("method" in v for v in value):
            table = agreement_table(value)
            return [f"{indent}{key}:"] + _indented(table.to_string(), indent + INDENT)
        table = records_table(value)
        return [f"{indent}{key}:"] + _indented(table.to_string(index=False), indent + INDENT)
    if isinstance(value, dict) and value:
        lines = [f"{indent}{key}:"]
        for k, v in value.items():
            lines.extend(_render(str(k), v, indent + INDENT))
        return lines
    return [f"{indent}{key}: {_scalar(value)}"]


def render_text(report):
    """
    Render a report dict as aligned text.

    Args:
        report (dict): Command report; an optional "title" becomes the header.

    Returns:
        str: The text block.
    """
    data = jsonable(report)
    lines = []
    title = data.get("title")
    if title:
        lines += [title, "-" * len(title)]
    for key, value in data.items():
        if key != "title":
            lines.extend(_render(key, value))
    return "\n".join(lines)


def render_json(report):
    """Stable JSON: exact scalars as strings, sorted keys."""
    return json.dumps(jsonable(report), sort_keys=True, indent=JSON_INDENT, ensure_ascii=False)


def emit(report, output_format="text"):
    """
    Serialize a report in one of the supported formats.

    Args:
        report (dict): Command report.
        output_format (str): "text" or "json".

    Returns:
        str: Serialized output.
    """
    if output_format not in OUTPUT_FORMATS:
        raise ParseError(f"unknown output format {output_format!r}", position="--format")
    if output_format == "json":
        return render_json(report)
    return render_text(report)
