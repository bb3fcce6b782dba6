"""Shared fixtures: golden schemes, their linkage triples and small rings."""

import os
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
os.environ.setdefault("CBLINK_DATA_DIR", str(ROOT / "data"))

from config.settings import (  # noqa: E402
    CUBICS_W_FILE,
    CUBICS_X_FILE,
    P1_QUARTIC_FILE,
    QUADRICS_X_FILE,
    QUADRICS_Y_FILE,
)
from algebra.liaison import link  # noqa: E402
from algebra.polycore import Field, PolyRing  # noqa: E402
from utils.data_manager import golden_path, parse_scheme_file  # noqa: E402
from factories import COLLINEAR, points_scheme  # noqa: E402


@pytest.fixture(scope="session")
def ring():
    return PolyRing(3)


@pytest.fixture(scope="session")
def ring_fp():
    return PolyRing(3, Field.prime(32003))


@pytest.fixture(scope="session")
def W():
    return parse_scheme_file(golden_path(CUBICS_W_FILE))


@pytest.fixture(scope="session")
def X():
    return parse_scheme_file(golden_path(CUBICS_X_FILE))


@pytest.fixture(scope="session")
def Xp():
    return parse_scheme_file(golden_path(QUADRICS_X_FILE))


@pytest.fixture(scope="session")
def Yp():
    return parse_scheme_file(golden_path(QUADRICS_Y_FILE))


@pytest.fixture(scope="session")
def quartic():
    return parse_scheme_file(golden_path(P1_QUARTIC_FILE))


@pytest.fixture(scope="session")
def triple(W, X):
    return link(W, X)


@pytest.fixture(scope="session")
def triple_p(W, Xp):
    return link(W, Xp)


@pytest.fixture
def golden_file():
    return golden_path


@pytest.fixture(scope="session")
def collinear(ring):
    """Three points on X2 = 0 and one off the line."""
    return points_scheme(ring, COLLINEAR, "collinear")


@pytest.fixture(scope="session")
def collinear_fp(ring_fp):
    return points_scheme(ring_fp, COLLINEAR, "collinear")
