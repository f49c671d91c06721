"""Enumerate -> trace -> identify orchestration and result aggregation.

Prime-knot hits are appended to a line-delimited store (one hit per line),
which is mergeable, diffable, and deduplicated by the serialized grid.
Summaries compute per-knot minima and Table-style groupings; verification
re-derives every stored hit from its grid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .catalog import (
    Catalog,
    FingerprintIndex,
    Verdict,
    bootstrap_fingerprints,
    crossing_number_of_name,
    identify,
    load_catalog,
)
from .layouts import Layout, parse_layout, shard_fills
from .tiles import (
    MosaicGrid,
    crossing_count,
    nonblank_count,
    parse_matrix,
    serialize_matrix_line,
)
from .tracing import TraceKind, to_pd, trace


@dataclass(frozen=True)
class KnotHit:
    """One identified prime-knot mosaic."""

    name: str
    grid_text: str
    mosaic_size: int
    nonblank: int
    crossings: int
    layout_id: str

    def to_line(self) -> str:
        return "\t".join(
            (
                self.name,
                self.layout_id,
                str(self.mosaic_size),
                str(self.nonblank),
                str(self.crossings),
                self.grid_text,
            )
        )

    @staticmethod
    def from_line(line: str) -> "KnotHit":
        name, layout_id, size_s, nonblank_s, crossings_s, grid_text = line.rstrip("\n").split("\t")
        return KnotHit(name, grid_text, int(size_s), int(nonblank_s), int(crossings_s), layout_id)

    def grid(self) -> MosaicGrid:
        return parse_matrix(self.grid_text)


@dataclass
class RunStats:
    enumerated: int = 0
    links: int = 0
    unknots: int = 0
    unidentified: int = 0
    ambiguous: int = 0
    prime_hits: int = 0

    def check_partition(self) -> None:
        total = self.links + self.unknots + self.unidentified + self.ambiguous + self.prime_hits
        if total != self.enumerated:
            raise AssertionError(
                f"stats do not partition: {total} classified of {self.enumerated} enumerated"
            )

    def merged(self, other: "RunStats") -> "RunStats":
        return RunStats(
            self.enumerated + other.enumerated,
            self.links + other.links,
            self.unknots + other.unknots,
            self.unidentified + other.unidentified,
            self.ambiguous + other.ambiguous,
            self.prime_hits + other.prime_hits,
        )

    def to_dict(self) -> dict:
        return {
            "enumerated": self.enumerated,
            "links": self.links,
            "unknots": self.unknots,
            "unidentified": self.unidentified,
            "ambiguous": self.ambiguous,
            "prime_hits": self.prime_hits,
        }


@dataclass(frozen=True)
class RunConfig:
    layout_path: str | Path
    min_crossings: int = 0
    catalog_path: str | Path | None = None
    store_path: str | Path | None = None
    shard_index: int = 0
    shard_total: int = 1
    cache_dir: str | Path | None = None
    checkpoint_path: str | Path | None = None

    def load_layout(self) -> Layout:
        path = Path(self.layout_path)
        return parse_layout(path.read_text(), name=path.stem)


def load_store(path: str | Path) -> list[KnotHit]:
    path = Path(path)
    if not path.exists():
        return []
    return [KnotHit.from_line(line) for line in path.read_text().splitlines() if line.strip()]


def append_hits(path: str | Path, hits: Iterable[KnotHit]) -> int:
    """Append hits not already present (dedup by serialized grid)."""
    path = Path(path)
    existing = {hit.grid_text for hit in load_store(path)}
    added = 0
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a") as fh:
        for hit in hits:
            if hit.grid_text in existing:
                continue
            fh.write(hit.to_line() + "\n")
            existing.add(hit.grid_text)
            added += 1
    return added


def classify_grid(grid: MosaicGrid, index: FingerprintIndex):
    """Trace and identify one suitably connected grid.

    Returns (category, identification-or-None) where category is one of
    "link", "unknot", "unidentified", "ambiguous", "prime".
    """
    result = trace(grid)
    if result.kind is TraceKind.LINK:
        return "link", None
    if result.kind is TraceKind.UNKNOT_NO_CROSSINGS:
        return "unknot", None
    ident = identify(to_pd(result), index)
    category = {
        Verdict.UNKNOT: "unknot",
        Verdict.PRIME: "prime",
        Verdict.AMBIGUOUS: "ambiguous",
        Verdict.UNIDENTIFIED: "unidentified",
    }[ident.verdict]
    return category, ident


def run_pipeline(config: RunConfig, index: FingerprintIndex | None = None) -> RunStats:
    """Run one (possibly sharded) enumeration over a layout.

    Prime hits are appended to the store with dedup, so re-running the same
    configuration is idempotent.  A checkpoint file, when configured, records
    progress for resumable long runs.
    """
    layout = config.load_layout()
    if index is None:
        if config.catalog_path is None:
            raise ValueError("run_pipeline needs a catalog path or a prebuilt index")
        catalog = load_catalog(config.catalog_path)
        index = bootstrap_fingerprints(catalog, cache_dir=config.cache_dir)

    stats = RunStats()
    hits: list[KnotHit] = []
    for grid in shard_fills(layout, config.min_crossings, config.shard_index, config.shard_total):
        stats.enumerated += 1
        category, ident = classify_grid(grid, index)
        if category == "link":
            stats.links += 1
        elif category == "unknot":
            stats.unknots += 1
        elif category == "unidentified":
            stats.unidentified += 1
        elif category == "ambiguous":
            stats.ambiguous += 1
        else:
            stats.prime_hits += 1
            hits.append(
                KnotHit(
                    name=ident.names[0],
                    grid_text=serialize_matrix_line(grid),
                    mosaic_size=grid.n,
                    nonblank=nonblank_count(grid),
                    crossings=crossing_count(grid),
                    layout_id=layout.name,
                )
            )
    stats.check_partition()
    if config.store_path is not None:
        append_hits(config.store_path, hits)
    if config.checkpoint_path is not None:
        Path(config.checkpoint_path).write_text(
            json.dumps({"layout": layout.name, "stats": stats.to_dict()}, indent=1) + "\n"
        )
    return stats


@dataclass
class SummaryRecord:
    """Per-knot minima over all stored hits."""

    name: str
    min_nonblank_by_size: dict[int, int] = field(default_factory=dict)
    min_nonblank: int = 0
    min_crossings: int = 0
    min_mosaic_size: int = 0
    tile_minimal_size: int = 0
    best_grid_text: str = ""

    @property
    def crossing_realized(self) -> bool:
        return self.min_crossings == crossing_number_of_name(self.name)

    @property
    def tile_minimum_needs_larger_mosaic(self) -> bool:
        """True when the fewest-tile mosaic is larger than the smallest
        mosaic seen for this knot (the starred case in summary tables)."""
        return self.tile_minimal_size > self.min_mosaic_size


def best_per_knot(hits: Iterable[KnotHit]) -> list[SummaryRecord]:
    """One record per knot name; minima over all hits, deterministic ties.

    The representative grid for a knot is its fewest-nonblank hit, with ties
    broken by the lexicographically smallest serialized grid.
    """
    by_name: dict[str, list[KnotHit]] = {}
    for hit in hits:
        by_name.setdefault(hit.name, []).append(hit)
    records = []
    for name in sorted(by_name, key=_name_sort_key):
        group = by_name[name]
        by_size: dict[int, int] = {}
        for hit in group:
            by_size[hit.mosaic_size] = min(
                by_size.get(hit.mosaic_size, hit.nonblank), hit.nonblank
            )
        min_nonblank = min(by_size.values())
        best = min(
            (h for h in group if h.nonblank == min_nonblank),
            key=lambda h: h.grid_text,
        )
        records.append(
            SummaryRecord(
                name=name,
                min_nonblank_by_size=dict(sorted(by_size.items())),
                min_nonblank=min_nonblank,
                min_crossings=min(h.crossings for h in group),
                min_mosaic_size=min(h.mosaic_size for h in group),
                tile_minimal_size=min(s for s, nb in by_size.items() if nb == min_nonblank),
                best_grid_text=best.grid_text,
            )
        )
    return records


def _name_sort_key(name: str) -> tuple:
    try:
        crossings = crossing_number_of_name(name)
    except Exception:
        return (999, 0, name)
    tail = name.split("_", 1)[1]
    return (crossings, int(tail) if tail.isdigit() else 0, name)


def compare_layouts(hits_a: Iterable[KnotHit], hits_b: Iterable[KnotHit]) -> dict[str, set[str]]:
    """Partition the knot-name sets of two stores."""
    names_a = {h.name for h in hits_a}
    names_b = {h.name for h in hits_b}
    return {
        "only_a": names_a - names_b,
        "only_b": names_b - names_a,
        "both": names_a & names_b,
    }


def report_table(summaries: list[SummaryRecord]) -> str:
    """Text table of knots grouped by (mosaic size, tile count).

    Knots whose fewest-tile mosaic is larger than their smallest mosaic are
    starred, with a footnote explaining the mark.
    """
    if not summaries:
        raise ValueError("no summaries to report")
    groups: dict[tuple[int, int], list[SummaryRecord]] = {}
    for record in summaries:
        groups.setdefault((record.min_mosaic_size, record.min_nonblank), []).append(record)
    lines = ["mosaic  tiles  knots"]
    starred = False
    for (size, tiles), records in sorted(groups.items()):
        names = []
        for record in sorted(records, key=lambda r: _name_sort_key(r.name)):
            mark = "*" if record.tile_minimum_needs_larger_mosaic else ""
            starred = starred or bool(mark)
            names.append(record.name + mark)
        lines.append(f"{size:>6}  {tiles:>5}  " + ", ".join(names))
    if starred:
        lines.append("* tile minimum realized only on a larger mosaic")
    return "\n".join(lines)


def verify_store(hits: Iterable[KnotHit], index: FingerprintIndex) -> list[str]:
    """Re-derive every stored hit; returns a list of discrepancy messages."""
    problems = []
    for hit in hits:
        grid = hit.grid()
        if nonblank_count(grid) != hit.nonblank:
            problems.append(f"{hit.name}: nonblank count {nonblank_count(grid)} != {hit.nonblank}")
        if crossing_count(grid) != hit.crossings:
            problems.append(f"{hit.name}: crossing count {crossing_count(grid)} != {hit.crossings}")
        if grid.n != hit.mosaic_size:
            problems.append(f"{hit.name}: size {grid.n} != {hit.mosaic_size}")
        category, ident = classify_grid(grid, index)
        if category != "prime" or ident.names[0] != hit.name:
            got = ident.label if ident else category
            problems.append(f"{hit.name}: re-identification produced {got}")
    return problems
