from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from knotmosaics.tiles import (
    MatrixParseError,
    MosaicError,
    MosaicGrid,
    NoStrandError,
    Side,
    Tile,
    connection_points,
    crossing_count,
    exit_side,
    grid_from_json,
    grid_to_json,
    is_suitably_connected,
    mirror_left_right,
    nonblank_count,
    parse_matrix,
    rotate180,
    rotate90_cw,
    serialize_matrix,
    serialize_matrix_line,
)

T, R, B, L = Side.TOP, Side.RIGHT, Side.BOTTOM, Side.LEFT

EXPECTED_CONNECTIONS = {
    0: set(),
    1: {L, B},
    2: {B, R},
    3: {T, R},
    4: {T, L},
    5: {L, R},
    6: {T, B},
    7: {T, B, L, R},
    8: {T, B, L, R},
    9: {T, B, L, R},
    10: {T, B, L, R},
}


@pytest.mark.parametrize("kind,expected", EXPECTED_CONNECTIONS.items())
def test_connection_points(kind, expected):
    assert connection_points(kind) == expected


@pytest.mark.parametrize(
    "kind,entry,exit_",
    [
        (1, L, B),
        (1, B, L),
        (2, B, R),
        (3, T, R),
        (4, T, L),
        (5, L, R),
        (6, T, B),
        (7, T, R),
        (7, B, L),
        (8, T, L),
        (8, B, R),
        (9, T, B),
        (9, L, R),
        (10, B, T),
        (10, R, L),
    ],
)
def test_exit_side(kind, entry, exit_):
    assert exit_side(kind, entry) is exit_


def test_exit_side_involution():
    for kind in range(11):
        for entry in connection_points(kind):
            assert exit_side(kind, exit_side(kind, entry)) is entry


def test_exit_side_no_strand():
    with pytest.raises(NoStrandError):
        exit_side(Tile.T1, Side.TOP)
    with pytest.raises(NoStrandError):
        exit_side(Tile.T0, Side.LEFT)


def test_side_opposite_involution():
    for side in Side:
        assert side.opposite.opposite is side


def test_parse_trefoil(trefoil_grid):
    assert trefoil_grid.n == 4
    assert trefoil_grid.cells == ((0, 2, 1, 0), (2, 10, 9, 1), (3, 9, 8, 4), (0, 3, 4, 0))


def test_parse_single_blank():
    assert parse_matrix("0").cells == ((0,),)


def test_parse_accepts_commas_and_newlines():
    assert parse_matrix("0, 2\n2, 8") == parse_matrix("0 2 / 2 8")


def test_parse_out_of_range():
    with pytest.raises(MatrixParseError) as err:
        parse_matrix("0 2 / 2 11")
    assert err.value.row == 1 and err.value.col == 1


def test_parse_errors():
    with pytest.raises(MatrixParseError):
        parse_matrix("")
    with pytest.raises(MatrixParseError):
        parse_matrix("1 2 3 / 4 5")
    with pytest.raises(MatrixParseError):
        parse_matrix("1 x / 2 3")


def test_grid_validation():
    with pytest.raises(MosaicError):
        MosaicGrid(((0, 1), (2,)))
    with pytest.raises(MosaicError):
        MosaicGrid(((0, 11), (2, 3)))


grids = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 10), min_size=n, max_size=n), min_size=n, max_size=n
    )
).map(MosaicGrid.from_rows)


@given(grids)
def test_serialize_round_trip(grid):
    assert parse_matrix(serialize_matrix(grid)) == grid
    assert parse_matrix(serialize_matrix_line(grid)) == grid


@given(grids)
def test_json_round_trip(grid):
    assert grid_from_json(grid_to_json(grid)) == grid


def test_serialize_trefoil(trefoil_grid):
    assert serialize_matrix(trefoil_grid) == "0 2 1 0\n2 10 9 1\n3 9 8 4\n0 3 4 0"


def test_suitably_connected_trefoil(trefoil_grid):
    assert is_suitably_connected(trefoil_grid)


def test_suitably_connected_blank():
    assert is_suitably_connected(parse_matrix("0 0 / 0 0"))


def test_suitably_connected_boundary():
    assert not is_suitably_connected(parse_matrix("5"))
    # A lone strand tile in a 1x1 grid always faces the boundary.
    for kind in range(1, 11):
        assert not is_suitably_connected(MosaicGrid(((kind,),)))


def test_suitably_connected_mismatch():
    # T2 opens Bottom/Right; its right neighbor T1 opens Left/Bottom, but
    # both bottoms face the boundary.
    assert not is_suitably_connected(parse_matrix("2 1 / 0 0"))


@given(grids)
def test_rotation_invariance(grid):
    assert is_suitably_connected(grid) == is_suitably_connected(rotate180(grid))


@given(grids)
def test_rotate90_four_times_is_identity(grid):
    out = grid
    for _ in range(4):
        out = rotate90_cw(out)
    assert out == grid


@given(grids)
def test_mirror_involution(grid):
    assert mirror_left_right(mirror_left_right(grid)) == grid


@given(st.lists(st.sampled_from([7, 8, 9, 10]), min_size=4, max_size=4))
def test_four_point_tiles_interchangeable(fill):
    from knotmosaics.layouts import builtin_layout

    layout = builtin_layout("shell4")
    filled = layout.fill(tuple(fill))
    substituted = layout.substituted(9)
    assert is_suitably_connected(filled) == is_suitably_connected(substituted)


def test_counts(trefoil_grid):
    assert nonblank_count(trefoil_grid) == 12
    assert crossing_count(trefoil_grid) == 3
    blank = parse_matrix("0 0 / 0 0")
    assert nonblank_count(blank) == 0 and crossing_count(blank) == 0


@given(grids)
def test_crossing_count_bounded(grid):
    assert crossing_count(grid) <= nonblank_count(grid)
