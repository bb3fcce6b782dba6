"""
Data management utilities for loading scheme files and saving reports.
"""

import os
import json
import logging

from config import runtime_setting
from config.settings import DATA_DIR, REPORTS_DIR, JSON_INDENT
from algebra.errors import ParseError, SchemeError
from algebra.polycore import AffinePoint, Field, PolyRing, parse_poly
from algebra.scheme import SchemeComponent, scheme_from_components, scheme_from_ideal

logger = logging.getLogger(__name__)

SCHEME_MODES = ("components", "raw")


def data_directory():
    """
    Directory holding scheme files, honouring CBLINK_DATA_DIR.

    Returns:
        str: Path of the data directory.
    """
    return runtime_setting("DATA_DIR", DATA_DIR)


def ensure_data_directory(directory=None):
    """
    Create a directory if it doesn't exist.

    Args:
        directory (str, optional): Directory to create; defaults to the data directory.
    """
    directory = directory or data_directory()
    if not os.path.exists(directory):
        os.makedirs(directory)


def golden_path(name):
    """
    Path of a scheme file shipped in the data directory.

    Args:
        name (str): File name, e.g. "cubics_W.json".

    Returns:
        str: Path below the data directory.
    """
    return os.path.join(data_directory(), name)


def load_data(filename):
    """
    Load data from a JSON file.

    Args:
        filename (str): Path of the file to load.

    Returns:
        dict: The loaded data.

    Raises:
        ParseError: The file is missing or is not valid JSON; the position
            names the line and column of the first syntax error.
    """
    if not os.path.exists(filename):
        raise ParseError(f"no such file: {filename}")
    with open(filename, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as exc:
            position = f"line {exc.lineno} column {exc.colno}"
            raise ParseError(f"{filename}: malformed JSON ({exc.msg})", position=position) from exc


def save_report(report, filename):
    """
    Save a report dict as JSON below the reports directory.

    Args:
        report (dict): JSON-ready report.
        filename (str): File name, or a path with a directory part.

    Returns:
        str: Path of the written file.
    """
    if os.path.dirname(filename):
        path = filename
        ensure_data_directory(os.path.dirname(filename))
    else:
        directory = runtime_setting("REPORTS_DIR", REPORTS_DIR)
        ensure_data_directory(directory)
        path = os.path.join(directory, filename)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(report, f, indent=JSON_INDENT, sort_keys=True)
        f.write("\n")
    logger.info("report written to %s", path)
    return path


# ---------------------------------------------------------------------------
# Scheme files
# ---------------------------------------------------------------------------

def _located(exc, location):
    """Re-raise a validation error with its JSON location in front."""
    if isinstance(exc, ParseError):
        return ParseError(f"{exc}", position=location)
    return type(exc)(f"{location}: {exc}")


def _require(data, key, kind, location):
    if key not in data:
        raise ParseError(f"missing key {key!r}", position=location)
    value = data[key]
    if not isinstance(value, kind):
        raise ParseError(f"expected {kind.__name__}", position=f"{location}.{key}")
    return value


def _parse_coordinate(field, value, location):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError("coordinates are integers or strings like \"1/2\"",
                         position=location)
    try:
        return field(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad coordinate {value!r}", position=location) from exc


def _parse_polys(ring, texts, location):
    if not isinstance(texts, list):
        raise ParseError("expected a list of polynomials", position=location)
    polys = []
    for k, text in enumerate(texts):
        try:
            polys.append(parse_poly(ring, text))
        except ParseError as exc:
            raise _located(exc, f"{location}[{k}]") from exc
    return polys


def scheme_from_data(data, field_override=None, name=""):
    """
    Build a scheme from the decoded contents of a scheme file.

    Args:
        data (dict): {"field", "vars", "mode", "components" | "gens", ...}.
        field_override (str | Field, optional): Replaces the file's field.
        name (str): Scheme name used in reports.

    Returns:
        Scheme: components-mode or raw-mode scheme.
    """
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", position="$")
    try:
        field = Field.parse(field_override if field_override is not None else data.get("field", "Q"))
    except ParseError as exc:
        raise _located(exc, "field") from exc
    nvars = _require(data, "vars", int, "$")
    if nvars < 2:
        raise ParseError("need at least X0 and X1", position="vars")
    mode = data.get("mode", "components" if "components" in data else "raw")
    if mode not in SCHEME_MODES:
        raise ParseError(f"expected one of {SCHEME_MODES}, got {mode!r}", position="mode")
    ring = PolyRing(nvars, field)
    name = data.get("name", name)

    if mode == "raw":
        gens = _parse_polys(ring, _require(data, "gens", list, "$"), "gens")
        return scheme_from_ideal(gens, ring=ring, auto_saturate=bool(data.get("auto_saturate")),
                                 name=name)

    components = []
    for k, entry in enumerate(_require(data, "components", list, "$")):
        location = f"components[{k}]"
        if not isinstance(entry, dict):
            raise ParseError("expected an object", position=location)
        values = _require(entry, "point", list, location)
        if len(values) != nvars:
            raise ParseError(f"expected {nvars} coordinates",
                             position=f"{location}.point")
        coords = [_parse_coordinate(field, v, f"{location}.point[{i}]")
                  for i, v in enumerate(values)]
        try:
            point = AffinePoint.from_projective(field, coords)
        except SchemeError as exc:
            raise _located(exc, f"{location}.point") from exc
        local = _parse_polys(ring, entry.get("local_gens", []), f"{location}.local_gens")
        components.append(SchemeComponent(point, tuple(local), str(entry.get("label", ""))))
    return scheme_from_components(ring, components, name)


def parse_scheme_file(path, field_override=None):
    """
    Load and validate a scheme file.

    Args:
        path (str): Path to the JSON file.
        field_override (str | Field, optional): Field given on the command line.

    Returns:
        Scheme: The constructed scheme, named after the file.
    """
    data = load_data(path)
    name = os.path.splitext(os.path.basename(path))[0]
    logger.info("parsing scheme file %s", path)
    return scheme_from_data(data, field_override, name)


def scheme_to_data(X):
    """
    Raw-mode scheme file contents for a scheme, e.g. an envelope W.

    Args:
        X (Scheme): The scheme.

    Returns:
        dict: Data accepted by scheme_from_data.
    """
    field = X.field
    return {
        "field": "Q" if not field.is_prime_field else {"Fp": field.characteristic},
        "vars": X.ring.nvars,
        "mode": "raw",
        "gens": [str(g) for g in X.ideal.basis],
    }
