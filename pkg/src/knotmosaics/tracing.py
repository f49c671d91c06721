"""Strand tracing: walk a mosaic, classify it, and emit Gauss/DT/PD codes.

The walk starts at the first non-blank cell in row-major order (always a
T2 tile on a suitably connected mosaic), leaves through its Right side, and
repeatedly applies each tile's strand pairing until it re-enters the start
cell.  A single-component diagram visits every strand tile once and every
double-arc or crossing tile twice, so the component is closed exactly when
the number of cell visits reaches

    nonblank_count + (number of T7..T10 tiles).

Returning early means the mosaic holds more than one component (a link).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .pdcodes import PDCode, PDCrossing, UNKNOT_PD
from .tiles import (
    FOUR_POINT_TILES,
    MosaicError,
    MosaicGrid,
    Side,
    Tile,
    exit_side,
    nonblank_count,
)


class MalformedMosaicError(MosaicError):
    """Raised when tracing preconditions fail (not a traceable mosaic)."""


class NotAKnotError(MosaicError):
    """Raised when a knot-only operation is applied to a link or to a
    crossing-free diagram."""


class TraceKind(Enum):
    KNOT = "knot"
    LINK = "link"
    UNKNOT_NO_CROSSINGS = "unknot-no-crossings"


@dataclass(frozen=True)
class CrossingVisit:
    cell: tuple[int, int]
    label: int
    passed_under: bool
    entry: Side


@dataclass(frozen=True)
class TraceResult:
    kind: TraceKind
    visit_sequence: tuple[tuple[tuple[int, int], Side], ...]
    crossing_visits: tuple[CrossingVisit, ...]

    @property
    def crossing_cell_count(self) -> int:
        return len(self.crossing_visits) // 2


def _passes_under(tile: int, entry: Side) -> bool:
    # T9 draws the vertical strand on top, T10 the horizontal one.
    horizontal = entry in (Side.LEFT, Side.RIGHT)
    return horizontal if tile == Tile.T9 else not horizontal


def trace(grid: MosaicGrid) -> TraceResult:
    """Trace the component through the first non-blank cell.

    The grid must be suitably connected (not re-checked here); the walk is
    bounds-checked defensively and reports a MalformedMosaicError rather
    than escaping the grid on bad input.
    """
    n = grid.n
    start = next(
        ((r, c) for r in range(n) for c in range(n) if grid[r, c] != 0),
        None,
    )
    if start is None:
        raise MalformedMosaicError("mosaic has no strand (all tiles blank)")
    if grid[start] != Tile.T2:
        raise MalformedMosaicError(
            f"first non-blank tile at {start} is T{grid[start]}, expected T2"
        )

    expected_visits = nonblank_count(grid) + sum(
        1 for row in grid.cells for k in row if k in FOUR_POINT_TILES
    )

    visits: list[tuple[tuple[int, int], Side]] = []
    crossing_visits: list[CrossingVisit] = []
    # The start tile is entered "from Bottom" so that the first exit is
    # through its Right side, matching the canonical walk.
    cell, entry = start, Side.BOTTOM
    label = 0
    while True:
        visits.append((cell, entry))
        tile = grid[cell]
        if tile in (Tile.T9, Tile.T10):
            label += 1
            crossing_visits.append(
                CrossingVisit(cell, label, _passes_under(tile, entry), entry)
            )
        out = exit_side(tile, entry)
        nxt = out.step(*cell)
        if not (0 <= nxt[0] < n and 0 <= nxt[1] < n):
            raise MalformedMosaicError(f"strand leaves the grid at {cell} via {out.value}")
        cell, entry = nxt, out.opposite
        if cell == start:
            break
        if len(visits) > expected_visits:
            raise MalformedMosaicError("walk failed to close; grid is not suitably connected")

    if len(visits) < expected_visits:
        kind = TraceKind.LINK
    elif crossing_visits:
        kind = TraceKind.KNOT
    else:
        kind = TraceKind.UNKNOT_NO_CROSSINGS
    return TraceResult(kind, tuple(visits), tuple(crossing_visits))


@dataclass(frozen=True)
class GaussPairs:
    """One (odd label, signed even label) pair per crossing, odd ascending.

    The even label is negated when that visit passed under the crossing.
    """

    pairs: tuple[tuple[int, int], ...]


def gauss_pairs(result: TraceResult) -> GaussPairs:
    if result.kind is TraceKind.LINK:
        raise NotAKnotError("mosaic is a link, not a knot")
    if not result.crossing_visits:
        raise NotAKnotError("diagram has no crossings")
    by_cell: dict[tuple[int, int], list[CrossingVisit]] = {}
    for visit in result.crossing_visits:
        by_cell.setdefault(visit.cell, []).append(visit)
    pairs = []
    for cell, cell_visits in by_cell.items():
        if len(cell_visits) != 2:
            raise MalformedMosaicError(f"crossing {cell} visited {len(cell_visits)} times")
        first, second = cell_visits
        if first.label % 2 == second.label % 2:
            raise MalformedMosaicError(f"crossing {cell} labels have equal parity")
        odd, even = (first, second) if first.label % 2 else (second, first)
        signed_even = -even.label if even.passed_under else even.label
        pairs.append((odd.label, signed_even))
    pairs.sort()
    return GaussPairs(tuple(pairs))


def dt_code(pairs: GaussPairs) -> tuple[int, ...]:
    """The signed even labels in ascending odd-label order."""
    return tuple(even for _, even in pairs.pairs)


def format_dt(code: tuple[int, ...]) -> str:
    return " ".join(str(x) for x in code)


def format_gauss_pairs(pairs: GaussPairs) -> str:
    return ",".join(f"({odd},{even})" for odd, even in pairs.pairs)


# Counterclockwise successor of each side, in the plane as drawn (row 0 at
# the top of the picture).
_CCW_NEXT = {
    Side.TOP: Side.LEFT,
    Side.LEFT: Side.BOTTOM,
    Side.BOTTOM: Side.RIGHT,
    Side.RIGHT: Side.TOP,
}

# Clockwise successor of each compass heading; "heading" of a visit is the
# side it exits through (opposite of the entry side).
_CW_HEADING = {
    Side.TOP: Side.RIGHT,
    Side.RIGHT: Side.BOTTOM,
    Side.BOTTOM: Side.LEFT,
    Side.LEFT: Side.TOP,
}


def to_pd(result: TraceResult) -> PDCode:
    """PD code of a knot trace; arcs numbered 1..2c along the walk.

    Arc k enters the k-th crossing visit and arc k+1 (cyclically) leaves it.
    Crossing-free traces give the distinguished unknot PD.
    """
    if result.kind is TraceKind.LINK:
        raise NotAKnotError("mosaic is a link, not a knot")
    if not result.crossing_visits:
        return UNKNOT_PD

    m = len(result.crossing_visits)
    by_cell: dict[tuple[int, int], list[tuple[int, CrossingVisit]]] = {}
    for k, visit in enumerate(result.crossing_visits, start=1):
        by_cell.setdefault(visit.cell, []).append((k, visit))

    crossings = []
    for cell, cell_visits in by_cell.items():
        (k1, v1), (k2, v2) = cell_visits
        (ku, vu), (ko, vo) = ((k1, v1), (k2, v2)) if v1.passed_under else ((k2, v2), (k1, v1))
        # Each side of the crossing cell carries exactly one arc.
        arc_at = {
            vu.entry: ku,
            vu.entry.opposite: ku % m + 1,
            vo.entry: ko,
            vo.entry.opposite: ko % m + 1,
        }
        s = vu.entry
        quad = []
        for _ in range(4):
            quad.append(arc_at[s])
            s = _CCW_NEXT[s]
        under_heading = vu.entry.opposite
        over_heading = vo.entry.opposite
        sign = 1 if _CW_HEADING[under_heading] is over_heading else -1
        crossings.append(PDCrossing(quad[0], quad[1], quad[2], quad[3], sign))

    pd = PDCode(tuple(crossings))
    pd.validate()
    return pd
