from __future__ import annotations

from pathlib import Path

import pytest

from knotmosaics.catalog import bootstrap_fingerprints, default_catalog_path, load_catalog
from knotmosaics.tiles import parse_matrix

FIG_TREFOIL_TEXT = "0 2 1 0 / 2 10 9 1 / 3 9 8 4 / 0 3 4 0"

# Hand-traced oracle for the trefoil matrix above (see test_tracing for the
# full derivation): 16 cell visits, crossings met in this cell order with
# these under/over flags.
TREFOIL_CROSSING_ORDER = [
    ((1, 2), False),
    ((2, 1), True),
    ((1, 1), False),
    ((1, 2), True),
    ((2, 1), False),
    ((1, 1), True),
]


@pytest.fixture(scope="session")
def trefoil_grid():
    return parse_matrix(FIG_TREFOIL_TEXT)


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(default_catalog_path())


@pytest.fixture(scope="session")
def fingerprint_cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("fingerprint-cache")


@pytest.fixture(scope="session")
def index(catalog, fingerprint_cache_dir):
    return bootstrap_fingerprints(catalog, cache_dir=fingerprint_cache_dir)


@pytest.fixture()
def data_dir() -> Path:
    return Path(__file__).parent / "data"
