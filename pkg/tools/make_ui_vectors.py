#!/usr/bin/env python3
"""Generate the shared UI test-vector file.

Each vector carries a mosaic matrix, the edge marks the engine's
connectivity validation produces, the full identification response, and the
headline the UI should display.  The frontend test harness replays these to
keep editor semantics and service behavior in lockstep with the engine.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from knotmosaics.catalog import bootstrap_fingerprints, default_catalog_path, load_catalog
from knotmosaics.service import identify_grid_response
from knotmosaics.tiles import connection_faults, parse_matrix

CASES = [
    ("fig-trefoil", "0 2 1 0 / 2 10 9 1 / 3 9 8 4 / 0 3 4 0", "3_1"),
    ("figure-eight", "0 2 1 0 0 / 2 8 7 1 0 / 3 9 10 7 1 / 0 3 9 10 4 / 0 0 3 4 0", "4_1"),
    ("crossingless-unknot", "2 1 / 3 4", "unknot"),
    ("kinked-unknot", "0 2 1 / 2 9 4 / 3 4 0", "unknot"),
    ("two-component-link", "2 1 0 0 / 3 4 0 0 / 0 0 2 1 / 0 0 3 4", "link (not a knot)"),
    ("all-blank", "0 0 0 / 0 0 0 / 0 0 0", "no strand"),
    ("boundary-fault", "5 5 0 / 0 0 0 / 0 0 0", "not suitably connected"),
    ("mismatched-edge", "0 2 1 0 / 2 9 9 1 / 3 9 0 4 / 0 3 4 0", "not suitably connected"),
]


def main() -> None:
    catalog = load_catalog(default_catalog_path())
    index = bootstrap_fingerprints(catalog)
    vectors = []
    for name, matrix, display in CASES:
        grid = parse_matrix(matrix)
        marks = [
            {"row": r, "col": c, "side": side.value}
            for (r, c), side in connection_faults(grid)
        ]
        response = identify_grid_response(grid, index)
        vectors.append(
            {
                "name": name,
                "matrix": matrix,
                "cells": [list(row) for row in grid.cells],
                "marks": marks,
                "response": response,
                "display": display,
            }
        )
    out = Path(__file__).resolve().parent.parent / "frontend" / "test-vectors.json"
    out.write_text(json.dumps(vectors, indent=1) + "\n")
    print(f"wrote {out} ({len(vectors)} vectors)")


if __name__ == "__main__":
    main()
