from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from knotmosaics.layouts import (
    Layout,
    LayoutError,
    builtin_layout,
    builtin_layout_names,
    count_candidates,
    enumerate_fills,
    parse_layout,
    shard_fills,
)
from knotmosaics.tiles import crossing_count, is_suitably_connected, serialize_matrix_line

from oracles import brute_force_fill_counts

SHELL4_TEXT = "0 2 1 0 / 2 * * 1 / 3 * * 4 / 0 3 4 0"


def test_parse_shell_layout():
    layout = parse_layout(SHELL4_TEXT)
    assert layout.n == 4
    assert layout.wildcard_count == 4
    assert layout.wildcard_order == ((1, 1), (1, 2), (2, 1), (2, 2))


def test_builtin_layouts():
    names = builtin_layout_names()
    assert "shell4" in names and "staircase5" in names
    assert builtin_layout("shell4").wildcard_count == 4
    assert builtin_layout("staircase5").wildcard_count == 7
    with pytest.raises(LayoutError):
        builtin_layout("no-such-layout")


def test_boundary_wildcard_rejected():
    with pytest.raises(LayoutError):
        parse_layout("* 2 1 0 / 2 9 9 1 / 3 9 9 4 / 0 3 4 0")


def test_bad_neighborhood_rejected():
    # The wildcard's top neighbor is blank: no facing connection point.
    with pytest.raises(LayoutError):
        parse_layout("0 0 0 0 / 2 * 9 1 / 3 9 9 4 / 0 3 4 0")


def test_zero_wildcards(trefoil_grid):
    layout = parse_layout("0 2 1 0 / 2 10 9 1 / 3 9 8 4 / 0 3 4 0")
    assert layout.wildcard_count == 0
    grids = list(enumerate_fills(layout, 0))
    assert grids == [trefoil_grid]
    assert list(enumerate_fills(layout, 1)) == []


def test_count_candidates_trivial():
    assert count_candidates(4, 0) == 256
    assert count_candidates(4, 3) == 80
    assert count_candidates(0, 0) == 1
    assert count_candidates(3, 5) == 0  # empty sum, not an error


def test_count_candidates_paper_scale():
    assert count_candidates(13, 9) == 8_953_856
    # Same number as the term-by-term binomial sum.
    assert count_candidates(13, 9) == sum(
        __import__("math").comb(13, i) * 2**i * 2 ** (13 - i) for i in range(9, 14)
    )


@pytest.mark.parametrize("n", range(0, 8))
def test_count_candidates_brute_force(n):
    counts = brute_force_fill_counts(n)
    for m in range(n + 1):
        assert count_candidates(n, m) == counts[m]


def test_enumerate_matches_product_order():
    layout = builtin_layout("shell4")
    grids = list(enumerate_fills(layout, 0))
    assert len(grids) == 256
    vectors = [
        tuple(grid[coord] for coord in layout.wildcard_order) for grid in grids
    ]
    assert vectors == list(itertools.product((7, 8, 9, 10), repeat=4))


def test_enumerate_includes_trefoil(trefoil_grid):
    layout = builtin_layout("shell4")
    assert trefoil_grid in list(enumerate_fills(layout, 0))
    assert trefoil_grid in list(enumerate_fills(layout, 3))


def test_enumerate_pruned_counts():
    layout = builtin_layout("shell4")
    for m in range(5):
        grids = list(enumerate_fills(layout, m))
        assert len(grids) == count_candidates(4, m)
        for grid in grids:
            assert crossing_count(grid) >= m
            assert is_suitably_connected(grid)


@settings(deadline=None)
@given(st.integers(0, 7))
def test_enumerate_staircase_counts(m):
    layout = builtin_layout("staircase5")
    assert sum(1 for _ in enumerate_fills(layout, m)) == count_candidates(7, m)


def test_single_shard_equals_full():
    layout = builtin_layout("shell4")
    full = [serialize_matrix_line(g) for g in enumerate_fills(layout, 3)]
    sharded = [serialize_matrix_line(g) for g in shard_fills(layout, 3, 0, 1)]
    assert full == sharded


def test_shards_partition():
    layout = builtin_layout("shell4")
    full = sorted(serialize_matrix_line(g) for g in enumerate_fills(layout, 3))
    pieces = [
        [serialize_matrix_line(g) for g in shard_fills(layout, 3, i, 4)] for i in range(4)
    ]
    union = sorted(line for piece in pieces for line in piece)
    assert union == full
    for i, j in itertools.combinations(range(4), 2):
        assert not set(pieces[i]) & set(pieces[j])


def test_shard_bounds():
    layout = builtin_layout("shell4")
    with pytest.raises(ValueError):
        list(shard_fills(layout, 0, 4, 4))


def test_fill_length_checked():
    layout = builtin_layout("shell4")
    with pytest.raises(LayoutError):
        layout.fill((7, 8))
