"""
Point-level commands: ``separators`` and ``point-degrees``.
"""

import logging

from algebra.errors import ParseError
from algebra.polycore import format_poly
from algebra.scheme import point_degrees, separators_of
from utils.data_manager import parse_scheme_file

logger = logging.getLogger(__name__)


def point_index(X, j):
    """
    Component index of the point p_j, counted from 1 as in the labels p1, p2, ...

    Raises:
        ParseError: j does not name a point of X.
    """
    X.require_components("point operations")
    count = len(X.components)
    if not 1 <= j <= count:
        raise ParseError(f"point {j} out of range 1..{count}", position="--point")
    return j - 1


def run_separators(args):
    """
    Minimal and standard separators of the maximal subschemes of X.

    Points whose local ring is not Gorenstein have no distinguished maximal
    subscheme and are listed with their socle dimension only.

    Returns:
        dict: {"title", "regularity_index", "separators"}.
    """
    X = parse_scheme_file(args.file, args.field)
    X.require_components("separators")
    if args.point is not None:
        indices = [point_index(X, args.point)]
    else:
        indices = range(len(X.components))
    labels = X.labels()
    rows = []
    for j in indices:
        A = X.local_algebras[j]
        row = {"point": labels[j], "coords": str(X.points[j]), "multiplicity": A.dim}
        if not A.is_gorenstein:
            row.update(mu=None, minimal_separator=None, socle_dimension=A.socle_dimension)
            rows.append(row)
            continue
        separators = separators_of(X, j)
        row.update(mu=separators.mu,
                   minimal_separator=format_poly(separators.minimal_separator, monic=True),
                   standard_separator=format_poly(separators.standard_separator, monic=True))
        rows.append(row)
    return {"title": f"separators of {X.name}",
            "regularity_index": X.regularity_index,
            "separators": rows}


def run_point_degrees(args):
    """
    deg_X(p_j) for every point and the largest d with CBP(d).

    Returns:
        dict: {"title", "regularity_index", "point_degrees", "max_cbp_degree"}.
    """
    X = parse_scheme_file(args.file, args.field)
    degrees = point_degrees(X)
    rows = [{"point": label, "coords": str(p), "multiplicity": A.dim, "degree": value}
            for label, p, A, value in zip(X.labels(), X.points, X.local_algebras, degrees)]
    lowest = min(degrees, default=None)
    return {
        "title": f"point degrees of {X.name}",
        "regularity_index": X.regularity_index,
        "point_degrees": rows,
        "max_cbp_degree": None if not lowest else lowest - 1,
    }
