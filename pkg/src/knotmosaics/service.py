"""HTTP facade: mosaic identification and catalog browsing for the UI.

All endpoints are read-only; requests never mutate server state, so any
number of them may run concurrently against the shared catalog index and
store snapshot.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .catalog import FingerprintIndex, bootstrap_fingerprints, identify, load_catalog
from .invariants import UNKNOT_FINGERPRINT, fingerprint
from .pipeline import best_per_knot, load_store
from .polynomials import format_poly
from .tiles import (
    MatrixParseError,
    MosaicGrid,
    Side,
    Tile,
    connection_faults,
    connection_points,
    crossing_count,
    exit_side,
    grid_from_json,
    nonblank_count,
    parse_matrix,
    serialize_matrix_line,
)
from .tracing import TraceKind, dt_code, gauss_pairs, to_pd, trace


def identify_grid_response(grid: MosaicGrid, index: FingerprintIndex) -> dict[str, Any]:
    """The identification payload shared by the API and the CLI."""
    base: dict[str, Any] = {
        "valid": True,
        "kind": "invalid",
        "nonblank": nonblank_count(grid),
        "crossings": crossing_count(grid),
        "dt": None,
        "knot": None,
        "invariants": None,
        "errors": [],
    }
    if base["nonblank"] == 0:
        base["errors"] = ["no strand"]
        return base
    faults = connection_faults(grid)
    if faults:
        base["valid"] = False
        base["errors"] = [
            f"cell ({r},{c}) side {side.value} is not suitably connected"
            for (r, c), side in faults
        ]
        return base
    result = trace(grid)
    if result.kind is TraceKind.LINK:
        base["kind"] = "link"
        return base
    base["kind"] = "knot"
    pd = to_pd(result)
    if result.kind is TraceKind.KNOT:
        base["dt"] = list(dt_code(gauss_pairs(result)))
        fp = fingerprint(pd)
    else:
        fp = UNKNOT_FINGERPRINT
    base["invariants"] = {
        "jones": format_poly(fp.jones),
        "alexander": format_poly(fp.alexander),
        "determinant": fp.determinant,
    }
    base["knot"] = identify(pd, index).label
    return base


def identify_matrix_text(text: str, index: FingerprintIndex) -> dict[str, Any]:
    grid = parse_matrix(text)
    return identify_grid_response(grid, index)


def tile_metadata() -> list[dict[str, Any]]:
    tiles = []
    for tile in Tile:
        over = None
        if tile is Tile.T9:
            over = "vertical"
        elif tile is Tile.T10:
            over = "horizontal"
        pairs = []
        seen = set()
        for side in Side:
            if side in connection_points(tile) and side not in seen:
                other = exit_side(tile, side)
                seen.update({side, other})
                pairs.append(sorted([side.value, other.value]))
        tiles.append(
            {
                "kind": int(tile),
                "connections": sorted(s.value for s in connection_points(tile)),
                "pairs": sorted(pairs),
                "over": over,
            }
        )
    return tiles


class IdentifyRequest(BaseModel):
    n: int | None = Field(default=None, description="grid size (optional, checked)")
    cells: list[list[int]]


def create_app(
    catalog_path: str | Path,
    store_path: str | Path | None = None,
    max_n: int = 12,
    cache_dir: str | Path | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    catalog = load_catalog(catalog_path)
    index = bootstrap_fingerprints(catalog, cache_dir=cache_dir)
    known_names = {entry.name for entry in catalog.entries}
    app = FastAPI(title="knotmosaics", version="0.1.0")

    @app.post("/api/identify")
    def api_identify(request: IdentifyRequest):
        try:
            grid = grid_from_json({"n": request.n, "cells": request.cells}
                                  if request.n is not None else {"cells": request.cells})
        except MatrixParseError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        if grid.n > max_n:
            raise HTTPException(
                status_code=413, detail=f"grid size {grid.n} exceeds limit {max_n}"
            )
        return identify_grid_response(grid, index)

    @app.get("/api/tiles")
    def api_tiles():
        return tile_metadata()

    @app.get("/api/catalog")
    def api_catalog(knot: str, realize: str | None = None):
        if knot not in known_names:
            raise HTTPException(status_code=404, detail=f"unknown knot {knot!r}")
        hits = [h for h in load_store(store_path)] if store_path else []
        records = [r for r in best_per_knot(hits) if r.name == knot]
        if not records:
            raise HTTPException(status_code=404, detail=f"no stored mosaics for {knot!r}")
        record = records[0]
        mine = [h for h in hits if h.name == knot]
        best_tile = min(mine, key=lambda h: (h.nonblank, h.grid_text))
        best_crossing = min(mine, key=lambda h: (h.crossings, h.grid_text))
        best_mosaic = min(mine, key=lambda h: (h.mosaic_size, h.nonblank, h.grid_text))
        wanted = {
            "tile": [best_tile],
            "crossing": [best_crossing],
            "mosaic": [best_mosaic],
            None: [best_mosaic, best_tile, best_crossing],
        }.get(realize)
        if wanted is None:
            raise HTTPException(status_code=400, detail=f"bad realize filter {realize!r}")
        seen: set[str] = set()
        mosaics = []
        for hit in wanted:
            if hit.grid_text in seen:
                continue
            seen.add(hit.grid_text)
            mosaics.append(
                {
                    "matrix": hit.grid_text,
                    "n": hit.mosaic_size,
                    "nonblank": hit.nonblank,
                    "crossings": hit.crossings,
                    "realized": {
                        "mosaic": hit.mosaic_size == record.min_mosaic_size,
                        "tile": hit.nonblank == record.min_nonblank,
                        "crossing": record.crossing_realized
                        and hit.crossings == record.min_crossings,
                    },
                }
            )
        return {"knot": knot, "mosaics": mosaics}

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
