from __future__ import annotations

import pytest

from knotmosaics.layouts import builtin_layout, enumerate_fills
from knotmosaics.pdcodes import PDError
from knotmosaics.tiles import Side, Tile, mirror_left_right, parse_matrix
from knotmosaics.tracing import (
    GaussPairs,
    MalformedMosaicError,
    NotAKnotError,
    TraceKind,
    dt_code,
    format_dt,
    format_gauss_pairs,
    gauss_pairs,
    to_pd,
    trace,
)

from conftest import TREFOIL_CROSSING_ORDER

# Hand-trace of the trefoil matrix: start at (0,1), the first non-blank
# cell in row-major order (a T2), exit Right, and follow the strand:
#
#   (0,1)R -> (0,2)T1 -> down -> (1,2)T9 over -> (2,2)T8 -> left ->
#   (2,1)T9 under -> (2,0)T3 -> up -> (1,0)T2 -> (1,1)T10 over ->
#   (1,2)T9 under -> (1,3)T1 -> (2,3)T4 -> (2,2)T8 -> (3,2)T4 ->
#   (3,1)T3 -> (2,1)T9 over -> (1,1)T10 under -> back to (0,1).
#
# 16 cell visits = 12 non-blank + 4 double-visited tiles; crossings in the
# order listed in conftest.TREFOIL_CROSSING_ORDER.


def test_trace_trefoil(trefoil_grid):
    result = trace(trefoil_grid)
    assert result.kind is TraceKind.KNOT
    assert len(result.visit_sequence) == 16
    assert result.visit_sequence[0] == ((0, 1), Side.BOTTOM)
    assert result.visit_sequence[1] == ((0, 2), Side.LEFT)
    assert [(v.cell, v.passed_under) for v in result.crossing_visits] == TREFOIL_CROSSING_ORDER
    assert [v.label for v in result.crossing_visits] == [1, 2, 3, 4, 5, 6]


def test_trace_link():
    # Two disjoint unknot squares.
    grid = parse_matrix("2 1 0 0 / 3 4 0 0 / 0 0 2 1 / 0 0 3 4")
    assert trace(grid).kind is TraceKind.LINK


def test_trace_crossingless_unknot():
    grid = parse_matrix("2 1 / 3 4")
    result = trace(grid)
    assert result.kind is TraceKind.UNKNOT_NO_CROSSINGS
    assert len(result.visit_sequence) == 4


def test_trace_requires_strand():
    with pytest.raises(MalformedMosaicError):
        trace(parse_matrix("0 0 / 0 0"))


def test_trace_rejects_bad_start():
    # First non-blank is a T5: not a valid mosaic start (and indeed the
    # grid is not suitably connected).
    with pytest.raises(MalformedMosaicError):
        trace(parse_matrix("5 5 / 0 0"))


def test_start_tile_theorem():
    # On every suitably connected enumeration output, the first non-blank
    # tile in row-major order is a T2.
    layout = builtin_layout("shell4")
    for grid in enumerate_fills(layout, 2):
        first = next(k for row in grid.cells for k in row if k != 0)
        assert first == Tile.T2


def test_double_traversal_property():
    layout = builtin_layout("shell4")
    for grid in enumerate_fills(layout, 2):
        result = trace(grid)
        if result.kind is TraceKind.LINK:
            continue
        seen: dict[tuple[int, int], int] = {}
        for cell, _ in result.visit_sequence:
            seen[cell] = seen.get(cell, 0) + 1
        for cell, count in seen.items():
            expected = 2 if grid[cell] >= 7 else 1
            assert count == expected


def test_gauss_pairs_trefoil(trefoil_grid):
    pairs = gauss_pairs(trace(trefoil_grid))
    assert pairs.pairs == ((1, -4), (3, -6), (5, -2))
    assert dt_code(pairs) == (-4, -6, -2)
    # Alternating diagram: every even label carries the same sign.
    assert len({e > 0 for _, e in pairs.pairs}) == 1


def test_gauss_pairs_rejects_links():
    grid = parse_matrix("2 1 0 0 / 3 4 0 0 / 0 0 2 1 / 0 0 3 4")
    with pytest.raises(NotAKnotError):
        gauss_pairs(trace(grid))
    with pytest.raises(NotAKnotError):
        gauss_pairs(trace(parse_matrix("2 1 / 3 4")))


def test_dt_code_worked_example():
    # The classic worked example: pairs ((1,4),(3,-6),(5,2)) -> DT 4 -6 2.
    pairs = GaussPairs(((1, 4), (3, -6), (5, 2)))
    assert dt_code(pairs) == (4, -6, 2)
    assert format_dt(dt_code(pairs)) == "4 -6 2"
    assert format_gauss_pairs(pairs) == "(1,4),(3,-6),(5,2)"


def test_dt_code_single_kink():
    kink = parse_matrix("0 2 1 / 2 9 4 / 3 4 0")
    pairs = gauss_pairs(trace(kink))
    assert pairs.pairs == ((1, 2),)
    assert dt_code(pairs) == (2,)


def test_to_pd_trefoil(trefoil_grid):
    pd = to_pd(trace(trefoil_grid))
    pd.validate()
    pd.validate_traversal()
    assert pd.crossing_count == 3
    assert sorted(x.sign for x in pd.crossings) == [1, 1, 1]


def test_to_pd_crossingless():
    pd = to_pd(trace(parse_matrix("2 1 / 3 4")))
    assert pd.crossing_count == 0


def test_to_pd_rejects_link():
    grid = parse_matrix("2 1 0 0 / 3 4 0 0 / 0 0 2 1 / 0 0 3 4")
    with pytest.raises(NotAKnotError):
        to_pd(trace(grid))


def test_to_pd_valid_over_enumeration():
    layout = builtin_layout("shell4")
    for grid in enumerate_fills(layout, 0):
        result = trace(grid)
        if result.kind is not TraceKind.KNOT:
            continue
        pd = to_pd(result)
        pd.validate()
        pd.validate_traversal()


def test_mirror_preserves_dt_magnitudes():
    layout = builtin_layout("shell4")
    for grid in enumerate_fills(layout, 2):
        result = trace(grid)
        if result.kind is not TraceKind.KNOT:
            continue
        mirrored = mirror_left_right(grid)
        mirror_result = trace(mirrored)
        assert mirror_result.kind is TraceKind.KNOT
        dt = dt_code(gauss_pairs(result))
        dt_m = dt_code(gauss_pairs(mirror_result))
        assert sorted(abs(x) for x in dt) == sorted(abs(x) for x in dt_m)


def test_alternating_mosaics_have_uniform_dt_sign():
    layout = builtin_layout("shell4")
    for grid in enumerate_fills(layout, 0):
        result = trace(grid)
        if result.kind is not TraceKind.KNOT:
            continue
        flags = [v.passed_under for v in result.crossing_visits]
        if all(a != b for a, b in zip(flags, flags[1:])):
            signs = {e > 0 for e in dt_code(gauss_pairs(result))}
            assert len(signs) == 1
