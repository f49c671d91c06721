from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from knotmosaics.catalog import default_catalog_path
from knotmosaics.pipeline import RunConfig, run_pipeline
from knotmosaics.service import create_app, identify_matrix_text, tile_metadata

from conftest import FIG_TREFOIL_TEXT


@pytest.fixture(scope="module")
def store_path(tmp_path_factory, request):
    index = request.getfixturevalue("index")
    path = tmp_path_factory.mktemp("svc") / "hits.store"
    layout = tmp_path_factory.mktemp("svc-layouts") / "shell4.layout"
    layout.write_text("0 2 1 0\n2 * * 1\n3 * * 4\n0 3 4 0\n")
    run_pipeline(
        RunConfig(layout_path=layout, min_crossings=0, store_path=path), index=index
    )
    return path


@pytest.fixture(scope="module")
def client(store_path, request):
    cache_dir = request.getfixturevalue("fingerprint_cache_dir")
    app = create_app(
        catalog_path=default_catalog_path(),
        store_path=store_path,
        max_n=12,
        cache_dir=cache_dir,
    )
    return TestClient(app)


def _trefoil_cells():
    return [[0, 2, 1, 0], [2, 10, 9, 1], [3, 9, 8, 4], [0, 3, 4, 0]]


def test_identify_trefoil(client):
    response = client.post("/api/identify", json={"n": 4, "cells": _trefoil_cells()})
    assert response.status_code == 200
    body = response.json()
    assert body["valid"] is True
    assert body["kind"] == "knot"
    assert body["nonblank"] == 12
    assert body["crossings"] == 3
    assert body["knot"] == "3_1"
    assert sorted(abs(x) for x in body["dt"]) == [2, 4, 6]
    assert body["invariants"]["determinant"] == 3


def test_identify_blank(client):
    response = client.post("/api/identify", json={"cells": [[0] * 4 for _ in range(4)]})
    assert response.status_code == 200
    body = response.json()
    assert body["valid"] is True
    assert body["kind"] == "invalid"
    assert body["errors"] == ["no strand"]


def test_identify_link(client):
    cells = [[2, 1, 0, 0], [3, 4, 0, 0], [0, 0, 2, 1], [0, 0, 3, 4]]
    body = client.post("/api/identify", json={"cells": cells}).json()
    assert body["kind"] == "link"
    assert body["knot"] is None


def test_identify_unknot(client):
    body = client.post("/api/identify", json={"cells": [[2, 1], [3, 4]]}).json()
    assert body["kind"] == "knot"
    assert body["knot"] == "unknot"
    assert body["dt"] is None
    assert body["invariants"]["determinant"] == 1


def test_identify_not_connected(client):
    body = client.post("/api/identify", json={"cells": [[5, 5], [0, 0]]}).json()
    assert body["valid"] is False
    assert body["kind"] == "invalid"
    assert body["errors"]


def test_identify_malformed_body(client):
    response = client.post("/api/identify", json={"cells": [[0, 99], [1, 2]]})
    assert response.status_code == 400
    assert "row" in response.json()["detail"]
    response = client.post("/api/identify", json={"cells": [[0, 1], [2]]})
    assert response.status_code == 400
    response = client.post("/api/identify", json={"n": 3, "cells": [[0, 0], [0, 0]]})
    assert response.status_code == 400
    response = client.post("/api/identify", json={"bogus": 1})
    assert response.status_code == 422  # schema-level rejection


def test_identify_oversized(client):
    n = 13
    cells = [[0] * n for _ in range(n)]
    response = client.post("/api/identify", json={"cells": cells})
    assert response.status_code == 413


def test_identify_agrees_with_cli_helper(client, index):
    via_api = client.post("/api/identify", json={"cells": _trefoil_cells()}).json()
    via_text = identify_matrix_text(FIG_TREFOIL_TEXT, index)
    assert via_api == via_text


def test_identify_is_stateless(client):
    first = client.post("/api/identify", json={"cells": _trefoil_cells()}).json()
    second = client.post("/api/identify", json={"cells": _trefoil_cells()}).json()
    assert first == second


def test_tiles_endpoint(client):
    response = client.get("/api/tiles")
    assert response.status_code == 200
    tiles = response.json()
    assert len(tiles) == 11
    t2 = next(t for t in tiles if t["kind"] == 2)
    assert t2["connections"] == ["bottom", "right"]
    t9 = next(t for t in tiles if t["kind"] == 9)
    assert t9["over"] == "vertical"
    assert t9["pairs"] == [["bottom", "top"], ["left", "right"]]
    assert response.content == client.get("/api/tiles").content


def test_tile_metadata_matches_engine():
    from knotmosaics.tiles import Side, connection_points

    for tile in tile_metadata():
        expected = sorted(s.value for s in connection_points(tile["kind"]))
        assert tile["connections"] == expected
    assert [t["kind"] for t in tile_metadata()] == list(range(11))


def test_catalog_endpoint(client):
    response = client.get("/api/catalog", params={"knot": "3_1"})
    assert response.status_code == 200
    body = response.json()
    assert body["knot"] == "3_1"
    assert body["mosaics"]
    best = body["mosaics"][0]
    assert best["n"] == 4 and best["nonblank"] == 12
    assert best["realized"]["mosaic"] and best["realized"]["tile"]


def test_catalog_realize_crossing(client):
    body = client.get("/api/catalog", params={"knot": "3_1", "realize": "crossing"}).json()
    assert len(body["mosaics"]) == 1
    assert body["mosaics"][0]["crossings"] == 3
    assert body["mosaics"][0]["realized"]["crossing"]


def test_catalog_unknown(client):
    assert client.get("/api/catalog", params={"knot": "99_1"}).status_code == 404
    # Known name but nothing stored from the tiny run.
    assert client.get("/api/catalog", params={"knot": "9_35"}).status_code == 404
    assert client.get(
        "/api/catalog", params={"knot": "3_1", "realize": "bogus"}
    ).status_code == 400
