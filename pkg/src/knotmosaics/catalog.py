"""Knot catalog: reference diagrams, fingerprint bootstrap, identification.

The catalog is a text file of reference planar diagrams for the prime knot
table (one line per knot: name, crossing number, signed PD code).  Knots are
identified by exact fingerprint match, where a fingerprint and its mirror
image count as the same knot; chirality is never reported.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .invariants import UNKNOT_FINGERPRINT, Fingerprint, fingerprint
from .pdcodes import PDCode, PDError, format_pd, parse_pd

# Number of prime knots per crossing number in the modern (deduplicated)
# table; 249 knots in total for crossing numbers 3 through 10.
PRIME_KNOT_COUNTS = {3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 21, 9: 49, 10: 165}

MANDATORY_MAX_CROSSING = 10

_NAME_RE = re.compile(r"^(\d+)(?:[an]?)_(\d+)$")


class CatalogError(Exception):
    """Raised for unreadable, malformed, or incomplete catalog files."""


def crossing_number_of_name(name: str) -> int:
    """Crossing number encoded in a standard table name like "10_139"."""
    match = _NAME_RE.match(name)
    if not match:
        raise CatalogError(f"cannot parse crossing number from knot name {name!r}")
    return int(match.group(1))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    crossing_number: int
    reference_pd: PDCode


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, name: str) -> CatalogEntry | None:
        return next((e for e in self.entries if e.name == name), None)

    def restrict(self, max_crossing: int) -> "Catalog":
        return Catalog(tuple(e for e in self.entries if e.crossing_number <= max_crossing))

    def content_hash(self) -> str:
        """Hash of the canonical serialization (whitespace/comment neutral)."""
        canon = "\n".join(
            f"{e.name};{e.crossing_number};{format_pd(e.reference_pd)}" for e in self.entries
        )
        return hashlib.sha256(canon.encode()).hexdigest()


def parse_catalog_text(text: str, *, require_full_range: bool = True) -> Catalog:
    entries: list[CatalogEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(";")
        if len(parts) != 3:
            raise CatalogError(f"line {lineno}: expected 'name;crossings;PD[...]'")
        name, crossing_s, pd_text = (p.strip() for p in parts)
        if name in seen:
            raise CatalogError(f"line {lineno}: duplicate knot name {name!r}")
        seen.add(name)
        try:
            crossing_number = int(crossing_s)
        except ValueError:
            raise CatalogError(f"line {lineno}: bad crossing number {crossing_s!r}") from None
        try:
            pd = parse_pd(pd_text)
            pd.validate_traversal()
        except PDError as exc:
            raise CatalogError(f"line {lineno} ({name}): {exc}") from exc
        if pd.crossing_count != crossing_number:
            raise CatalogError(
                f"line {lineno} ({name}): reference diagram has {pd.crossing_count} "
                f"crossings, expected {crossing_number}"
            )
        entries.append(CatalogEntry(name, crossing_number, pd))
    if require_full_range:
        missing = [
            f"{c}_{i}"
            for c, count in PRIME_KNOT_COUNTS.items()
            if c <= MANDATORY_MAX_CROSSING
            for i in range(1, count + 1)
            if f"{c}_{i}" not in seen
        ]
        if missing:
            raise CatalogError(
                f"catalog is missing {len(missing)} mandatory entries "
                f"(crossing number <= {MANDATORY_MAX_CROSSING}), e.g. {missing[:5]}"
            )
    return Catalog(tuple(entries))


def load_catalog(path: str | Path, *, require_full_range: bool = True) -> Catalog:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from exc
    return parse_catalog_text(text, require_full_range=require_full_range)


def default_catalog_path() -> Path:
    from importlib import resources

    return Path(str(resources.files("knotmosaics").joinpath("data", "catalog_rolfsen_10.txt")))


@dataclass(frozen=True)
class FingerprintIndex:
    """Bootstrapped fingerprints, keyed so a knot equals its mirror image."""

    catalog_hash: str
    fingerprints: dict[str, Fingerprint]
    by_key: dict[str, tuple[str, ...]]

    @staticmethod
    def build(catalog: Catalog, fingerprints: dict[str, Fingerprint]) -> "FingerprintIndex":
        by_key: dict[str, list[str]] = {}
        for entry in catalog.entries:
            key = fingerprints[entry.name].canonical_key()
            by_key.setdefault(key, []).append(entry.name)
        return FingerprintIndex(
            catalog.content_hash(),
            dict(fingerprints),
            {k: tuple(sorted(v)) for k, v in by_key.items()},
        )


def bootstrap_fingerprints(catalog: Catalog, cache_dir: str | Path | None = None) -> FingerprintIndex:
    """Compute (or reload) the fingerprint of every catalog entry.

    When cache_dir is given, results are persisted to a JSON file named by
    the catalog content hash and reloaded on later runs; the file is written
    deterministically so rebuilds are byte-identical.
    """
    cache_path = None
    if cache_dir is not None:
        cache_path = Path(cache_dir) / f"fingerprints-{catalog.content_hash()[:16]}.json"
        if cache_path.exists():
            return _load_index_cache(cache_path, catalog)
    fingerprints: dict[str, Fingerprint] = {}
    for entry in catalog.entries:
        try:
            fingerprints[entry.name] = fingerprint(entry.reference_pd)
        except Exception as exc:
            raise CatalogError(f"fingerprint computation failed for {entry.name}: {exc}") from exc
    index = FingerprintIndex.build(catalog, fingerprints)
    if cache_path is not None:
        cache_path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "catalog_hash": index.catalog_hash,
            "fingerprints": {
                name: fp.serialize() for name, fp in sorted(index.fingerprints.items())
            },
        }
        cache_path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    return index


def _load_index_cache(cache_path: Path, catalog: Catalog) -> FingerprintIndex:
    payload = json.loads(cache_path.read_text())
    if payload.get("catalog_hash") != catalog.content_hash():
        raise CatalogError(f"cache {cache_path} does not match the catalog content hash")
    fingerprints = {
        name: Fingerprint.deserialize(text) for name, text in payload["fingerprints"].items()
    }
    if set(fingerprints) != {e.name for e in catalog.entries}:
        raise CatalogError(f"cache {cache_path} does not cover the catalog entries")
    return FingerprintIndex.build(catalog, fingerprints)


class Verdict(Enum):
    UNKNOT = "unknot"
    PRIME = "prime"
    AMBIGUOUS = "ambiguous"
    UNIDENTIFIED = "unidentified"


@dataclass(frozen=True)
class Identification:
    verdict: Verdict
    names: tuple[str, ...] = ()

    @property
    def label(self) -> str:
        if self.verdict is Verdict.UNKNOT:
            return "unknot"
        if self.verdict is Verdict.PRIME:
            return self.names[0]
        if self.verdict is Verdict.AMBIGUOUS:
            return "ambiguous:[" + ",".join(self.names) + "]"
        return "unknown"


def identify(pd: PDCode, index: FingerprintIndex) -> Identification:
    """Map a knot PD to a verdict by fingerprint lookup (mirror-blind)."""
    if not pd.crossings:
        return Identification(Verdict.UNKNOT)
    fp = fingerprint(pd)
    if fp.canonical_key() == UNKNOT_FINGERPRINT.canonical_key():
        return Identification(Verdict.UNKNOT)
    names = index.by_key.get(fp.canonical_key(), ())
    if not names:
        return Identification(Verdict.UNIDENTIFIED)
    if len(names) == 1:
        return Identification(Verdict.PRIME, names)
    return Identification(Verdict.AMBIGUOUS, names)


def collision_report(index: FingerprintIndex) -> list[tuple[str, ...]]:
    """Name groups (size >= 2) sharing a canonical fingerprint key, sorted."""
    return sorted(names for names in index.by_key.values() if len(names) > 1)
