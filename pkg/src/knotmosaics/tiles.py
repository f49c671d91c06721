"""Mosaic tiles, grids, the integer-matrix codec, and connectivity validation.

A mosaic is an n x n array of the eleven standard tiles: the blank tile T0,
four quarter-arcs T1-T4, two straight lines T5-T6, two double arcs T7-T8,
and two crossings T9-T10.  Each tile is identified by its integer kind, so a
mosaic is stored and shipped as a plain integer matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterator


class Side(Enum):
    """One of the four sides of a tile cell."""

    TOP = "top"
    RIGHT = "right"
    BOTTOM = "bottom"
    LEFT = "left"

    @property
    def opposite(self) -> "Side":
        return _OPPOSITE[self]

    def step(self, row: int, col: int) -> tuple[int, int]:
        """Cell coordinate reached by leaving (row, col) through this side."""
        dr, dc = _STEP[self]
        return row + dr, col + dc


_OPPOSITE = {
    Side.TOP: Side.BOTTOM,
    Side.BOTTOM: Side.TOP,
    Side.LEFT: Side.RIGHT,
    Side.RIGHT: Side.LEFT,
}

_STEP = {
    Side.TOP: (-1, 0),
    Side.BOTTOM: (1, 0),
    Side.LEFT: (0, -1),
    Side.RIGHT: (0, 1),
}


class Tile(IntEnum):
    """Tile kinds.  The integer value is the matrix entry for the tile."""

    T0 = 0
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4
    T5 = 5
    T6 = 6
    T7 = 7
    T8 = 8
    T9 = 9
    T10 = 10


# Strand pairings: for each tile, which sides are joined by a strand.
# T7 joins Top-Right and Bottom-Left; T8 joins Top-Left and Bottom-Right.
# The crossings T9/T10 both pass straight through; they differ only in
# which strand is drawn on top (T9: vertical over, T10: horizontal over).
_PAIRINGS: dict[Tile, tuple[tuple[Side, Side], ...]] = {
    Tile.T0: (),
    Tile.T1: ((Side.LEFT, Side.BOTTOM),),
    Tile.T2: ((Side.BOTTOM, Side.RIGHT),),
    Tile.T3: ((Side.TOP, Side.RIGHT),),
    Tile.T4: ((Side.TOP, Side.LEFT),),
    Tile.T5: ((Side.LEFT, Side.RIGHT),),
    Tile.T6: ((Side.TOP, Side.BOTTOM),),
    Tile.T7: ((Side.TOP, Side.RIGHT), (Side.BOTTOM, Side.LEFT)),
    Tile.T8: ((Side.TOP, Side.LEFT), (Side.BOTTOM, Side.RIGHT)),
    Tile.T9: ((Side.TOP, Side.BOTTOM), (Side.LEFT, Side.RIGHT)),
    Tile.T10: ((Side.TOP, Side.BOTTOM), (Side.LEFT, Side.RIGHT)),
}

_CONNECTIONS: dict[Tile, frozenset[Side]] = {
    tile: frozenset(side for pair in pairs for side in pair)
    for tile, pairs in _PAIRINGS.items()
}

_EXITS: dict[Tile, dict[Side, Side]] = {
    tile: {s: t for a, b in pairs for s, t in ((a, b), (b, a))}
    for tile, pairs in _PAIRINGS.items()
}

CROSSING_TILES = frozenset({Tile.T9, Tile.T10})
FOUR_POINT_TILES = frozenset({Tile.T7, Tile.T8, Tile.T9, Tile.T10})


class MosaicError(Exception):
    """Base class for mosaic construction and validation errors."""


class MatrixParseError(MosaicError):
    """Raised when matrix text cannot be parsed into a grid.

    Carries the 0-based (row, col) position of the offending token when one
    can be pinpointed; col is None for row-level problems.
    """

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        self.row = row
        self.col = col
        if row is not None:
            where = f" at row {row}" + (f", col {col}" if col is not None else "")
            message += where
        super().__init__(message)


class NoStrandError(MosaicError):
    """Raised when a strand is followed into a side the tile does not use."""


def connection_points(tile: Tile | int) -> frozenset[Side]:
    """Set of sides on which the tile's strands end."""
    return _CONNECTIONS[Tile(tile)]


def exit_side(tile: Tile | int, entry: Side) -> Side:
    """Side through which a strand entering at `entry` leaves the tile.

    Crossing tiles pass straight through.  Raises NoStrandError if the tile
    has no connection point on `entry`.
    """
    try:
        return _EXITS[Tile(tile)][entry]
    except KeyError:
        raise NoStrandError(f"tile T{int(tile)} has no strand at {entry.value}") from None


@dataclass(frozen=True)
class MosaicGrid:
    """Immutable n x n mosaic, stored row-major as tuples of tile kinds."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.cells)
        if n == 0:
            raise MosaicError("grid must have at least one row")
        for r, row in enumerate(self.cells):
            if len(row) != n:
                raise MosaicError(f"grid is not square: row {r} has {len(row)} cells, expected {n}")
            for c, kind in enumerate(row):
                if not 0 <= kind <= 10:
                    raise MosaicError(f"invalid tile kind {kind} at ({r}, {c})")

    @property
    def n(self) -> int:
        return len(self.cells)

    def __getitem__(self, coord: tuple[int, int]) -> int:
        return self.cells[coord[0]][coord[1]]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.cells)

    @staticmethod
    def from_rows(rows) -> "MosaicGrid":
        return MosaicGrid(tuple(tuple(int(x) for x in row) for row in rows))


def parse_matrix(text: str) -> MosaicGrid:
    """Parse matrix text into a grid.

    Rows are separated by newlines or "/"; entries within a row by
    whitespace or commas.  The matrix must be square with entries 0-10.
    """
    rows: list[tuple[int, ...]] = []
    raw_rows = [seg for line in text.splitlines() for seg in line.split("/")]
    for raw in raw_rows:
        tokens = raw.replace(",", " ").split()
        if not tokens:
            continue
        r = len(rows)
        entries = []
        for c, tok in enumerate(tokens):
            try:
                value = int(tok)
            except ValueError:
                raise MatrixParseError(f"non-integer entry {tok!r}", row=r, col=c) from None
            if not 0 <= value <= 10:
                raise MatrixParseError(f"tile kind {value} out of range 0-10", row=r, col=c)
            entries.append(value)
        rows.append(tuple(entries))
    if not rows:
        raise MatrixParseError("empty matrix text")
    n = len(rows)
    for r, row in enumerate(rows):
        if len(row) != n:
            raise MatrixParseError(f"row has {len(row)} entries, expected {n}", row=r)
    return MosaicGrid(tuple(rows))


def serialize_matrix(grid: MosaicGrid) -> str:
    """Render a grid as matrix text, one row per line, space separated."""
    return "\n".join(" ".join(str(k) for k in row) for row in grid.cells)


def serialize_matrix_line(grid: MosaicGrid) -> str:
    """One-line matrix form with "/" between rows (store/report friendly)."""
    return " / ".join(" ".join(str(k) for k in row) for row in grid.cells)


def grid_to_json(grid: MosaicGrid) -> dict:
    """JSON object form used on the wire: {"n": n, "cells": [[...], ...]}."""
    return {"n": grid.n, "cells": [list(row) for row in grid.cells]}


def grid_from_json(obj: dict) -> MosaicGrid:
    if not isinstance(obj, dict) or "cells" not in obj:
        raise MatrixParseError("expected an object with a 'cells' field")
    cells = obj["cells"]
    if not isinstance(cells, list) or not all(isinstance(r, list) for r in cells):
        raise MatrixParseError("'cells' must be a list of rows")
    grid = MosaicGrid.from_rows(cells)
    if "n" in obj and obj["n"] != grid.n:
        raise MatrixParseError(f"'n' field is {obj['n']} but grid has {grid.n} rows")
    return grid


def connection_faults(grid: MosaicGrid) -> list[tuple[tuple[int, int], Side]]:
    """All places where the grid fails to be suitably connected.

    Each fault is ((row, col), side): the cell has a connection point facing
    a boundary or a neighbor without the matching point, or lacks a point its
    neighbor expects.  Interior edges are reported once, from the row-major
    first cell of the pair (its RIGHT or BOTTOM side).
    """
    faults: list[tuple[tuple[int, int], Side]] = []
    n = grid.n
    for r in range(n):
        for c in range(n):
            points = connection_points(grid[r, c])
            for side in (Side.RIGHT, Side.BOTTOM):
                rr, cc = side.step(r, c)
                if rr < n and cc < n:
                    theirs = connection_points(grid[rr, cc])
                    if (side in points) != (side.opposite in theirs):
                        faults.append(((r, c), side))
            for side in Side:
                rr, cc = side.step(r, c)
                if not (0 <= rr < n and 0 <= cc < n) and side in points:
                    faults.append(((r, c), side))
    return faults


def is_suitably_connected(grid: MosaicGrid) -> bool:
    """True iff every connection point meets a matching one on the shared
    edge and none faces the mosaic boundary."""
    return not connection_faults(grid)


def nonblank_count(grid: MosaicGrid) -> int:
    return sum(1 for row in grid.cells for k in row if k != 0)


def crossing_count(grid: MosaicGrid) -> int:
    return sum(1 for row in grid.cells for k in row if k in (9, 10))


# Whole-grid symmetries.  Used by tests and by callers that normalize
# mosaics; the tile maps say how each kind transforms under the symmetry.

ROTATE180_TILE_MAP = {0: 0, 1: 3, 2: 4, 3: 1, 4: 2, 5: 5, 6: 6, 7: 7, 8: 8, 9: 9, 10: 10}
ROTATE90_CW_TILE_MAP = {0: 0, 1: 4, 2: 1, 3: 2, 4: 3, 5: 6, 6: 5, 7: 8, 8: 7, 9: 10, 10: 9}
MIRROR_LR_TILE_MAP = {0: 0, 1: 2, 2: 1, 3: 4, 4: 3, 5: 5, 6: 6, 7: 8, 8: 7, 9: 10, 10: 9}


def rotate180(grid: MosaicGrid) -> MosaicGrid:
    return MosaicGrid(
        tuple(tuple(ROTATE180_TILE_MAP[k] for k in reversed(row)) for row in reversed(grid.cells))
    )


def rotate90_cw(grid: MosaicGrid) -> MosaicGrid:
    n = grid.n
    return MosaicGrid(
        tuple(
            tuple(ROTATE90_CW_TILE_MAP[grid[n - 1 - c, r]] for c in range(n)) for r in range(n)
        )
    )


def mirror_left_right(grid: MosaicGrid) -> MosaicGrid:
    """Left-right reflection; swaps crossing handedness (T9 <-> T10)."""
    return MosaicGrid(
        tuple(tuple(MIRROR_LR_TILE_MAP[k] for k in reversed(row)) for row in grid.cells)
    )
