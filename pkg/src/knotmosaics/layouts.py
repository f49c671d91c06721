"""Space-efficient layouts and exhaustive interior enumeration.

A layout is a mosaic whose interior cells are wildcards to be filled from
the four-connection-point tiles {T7, T8, T9, T10}.  Enumeration generates
every fill vector, pruned so that at least `m` of the filled cells are
crossing tiles (T9/T10): vectors are built as prefix/suffix halves and a
prefix is only joined to suffixes carrying enough crossings to reach `m`.
The pruned candidate count is

    2**n * sum(C(n, i) for i in range(m, n + 1))

for n wildcards, down from the unpruned 4**n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .tiles import (
    MatrixParseError,
    MosaicError,
    MosaicGrid,
    Side,
    connection_points,
    is_suitably_connected,
)

WILDCARD = -1

FILL_CHOICES = (7, 8, 9, 10)


class LayoutError(MosaicError):
    """Raised when layout text violates the wildcard placement rules."""


@dataclass(frozen=True)
class Layout:
    """A mosaic with wildcard cells, plus their canonical row-major order."""

    cells: tuple[tuple[int, ...], ...]
    name: str = "layout"

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def wildcard_order(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (r, c)
            for r in range(self.n)
            for c in range(self.n)
            if self.cells[r][c] == WILDCARD
        )

    @property
    def wildcard_count(self) -> int:
        return sum(1 for row in self.cells for k in row if k == WILDCARD)

    @property
    def fixed_crossing_count(self) -> int:
        return sum(1 for row in self.cells for k in row if k in (9, 10))

    def substituted(self, kind: int = 9) -> MosaicGrid:
        """The grid with every wildcard replaced by the given tile kind."""
        return MosaicGrid(
            tuple(tuple(kind if k == WILDCARD else k for k in row) for row in self.cells)
        )

    def fill(self, vector: tuple[int, ...]) -> MosaicGrid:
        """Replace wildcards, in row-major order, with the vector entries."""
        if len(vector) != self.wildcard_count:
            raise LayoutError(
                f"fill vector has {len(vector)} entries, layout has {self.wildcard_count} wildcards"
            )
        it = iter(vector)
        return MosaicGrid(
            tuple(tuple(next(it) if k == WILDCARD else k for k in row) for row in self.cells)
        )


def parse_layout(text: str, name: str = "layout") -> Layout:
    """Parse layout text: matrix entries 0-10 plus "*" for wildcards.

    The layout must be suitably connected once wildcards are substituted
    with a crossing tile (all four-point tiles are interchangeable for
    connectivity), which in particular forbids wildcards on the boundary.
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
            if tok == "*":
                entries.append(WILDCARD)
                continue
            try:
                value = int(tok)
            except ValueError:
                raise MatrixParseError(f"non-integer entry {tok!r}", row=r, col=c) from None
            if not 0 <= value <= 10:
                raise MatrixParseError(f"tile kind {value} out of range 0-10", row=r, col=c)
            entries.append(value)
        rows.append(tuple(entries))
    if not rows:
        raise MatrixParseError("empty layout text")
    n = len(rows)
    for r, row in enumerate(rows):
        if len(row) != n:
            raise MatrixParseError(f"row has {len(row)} entries, expected {n}", row=r)
    layout = Layout(tuple(rows), name=name)
    _validate_layout(layout)
    return layout


def _validate_layout(layout: Layout) -> None:
    n = layout.n
    for r, c in layout.wildcard_order:
        if r in (0, n - 1) or c in (0, n - 1):
            raise LayoutError(f"wildcard at ({r}, {c}) lies on the mosaic boundary")
        for side in Side:
            rr, cc = side.step(r, c)
            neighbor = layout.cells[rr][cc]
            if neighbor == WILDCARD:
                continue
            if side.opposite not in connection_points(neighbor):
                raise LayoutError(
                    f"wildcard at ({r}, {c}) faces tile T{neighbor} at ({rr}, {cc}), "
                    f"which has no {side.opposite.value} connection point"
                )
    if not is_suitably_connected(layout.substituted(9)):
        raise LayoutError("layout is not suitably connected once wildcards are filled")


def count_candidates(n_interior: int, m: int) -> int:
    """Pruned fill-vector count: 2^n * sum_{i=m}^{n} C(n, i).

    m greater than n_interior gives 0 (empty sum), not an error.
    """
    if n_interior < 0 or m < 0:
        raise ValueError("counts must be non-negative")
    return 2**n_interior * sum(
        math.comb(n_interior, i) for i in range(m, n_interior + 1)
    )


def _crossings(vector: tuple[int, ...]) -> int:
    return sum(1 for k in vector if k in (9, 10))


def _iter_vectors(
    n_interior: int,
    m: int,
    shard_index: int,
    shard_total: int,
    start_prefix: int = 0,
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (prefix_index, vector) in prefix-major lexicographic order.

    The vector is split at k = n // 2: prefixes of length k iterate in the
    outer loop, suffixes of length n - k in the inner.  Suffixes are grouped
    once by crossing count so each prefix only scans suffixes that can still
    reach m crossings in total; within a prefix the surviving suffixes stay
    in lexicographic order.
    """
    if n_interior == 0:
        if m <= 0 and shard_index == 0 and start_prefix == 0:
            yield 0, ()
        return
    k = n_interior // 2
    suffix_len = n_interior - k
    suffixes = list(itertools.product(FILL_CHOICES, repeat=suffix_len))
    # suffixes_with_at_least[t]: suffixes with >= t crossing entries, in order.
    suffixes_with_at_least: list[list[tuple[int, ...]]] = [suffixes]
    for t in range(1, suffix_len + 1):
        suffixes_with_at_least.append(
            [s for s in suffixes_with_at_least[t - 1] if _crossings(s) >= t]
        )
    empty: list[tuple[int, ...]] = []

    for prefix_index, prefix in enumerate(itertools.product(FILL_CHOICES, repeat=k)):
        if prefix_index < start_prefix or prefix_index % shard_total != shard_index:
            continue
        need = m - _crossings(prefix)
        if need <= 0:
            chosen = suffixes
        elif need <= suffix_len:
            chosen = suffixes_with_at_least[need]
        else:
            chosen = empty
        for suffix in chosen:
            yield prefix_index, prefix + suffix


def enumerate_fills(layout: Layout, m: int) -> Iterator[MosaicGrid]:
    """All fillings of the layout with at least m crossing tiles among the
    wildcards, in deterministic lexicographic order (7 < 8 < 9 < 10)."""
    for _, vector in _iter_vectors(layout.wildcard_count, m, 0, 1):
        yield layout.fill(vector)


def shard_fills(
    layout: Layout, m: int, shard_index: int, shard_total: int
) -> Iterator[MosaicGrid]:
    """The shard_index-th of shard_total disjoint slices of enumerate_fills.

    Partitioning is by prefix-vector index modulo shard_total, so the union
    of all shards is exactly the unsharded stream as a multiset.
    """
    if not 0 <= shard_index < shard_total:
        raise ValueError(f"shard index {shard_index} not in [0, {shard_total})")
    for _, vector in _iter_vectors(layout.wildcard_count, m, shard_index, shard_total):
        yield layout.fill(vector)


@lru_cache(maxsize=None)
def builtin_layout(name: str) -> Layout:
    """Layouts shipped with the package (see data/layouts)."""
    path = resources.files("knotmosaics").joinpath("data", "layouts", f"{name}.txt")
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise LayoutError(f"no built-in layout named {name!r}") from None
    return parse_layout(text, name=name)


def builtin_layout_names() -> list[str]:
    files = resources.files("knotmosaics").joinpath("data", "layouts")
    return sorted(
        p.name.removesuffix(".txt") for p in files.iterdir() if p.name.endswith(".txt")
    )
