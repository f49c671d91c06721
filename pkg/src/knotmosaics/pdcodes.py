"""Planar diagram (PD) codes: the bridge from traced diagrams to invariants.

A crossing is written (a, b, c, d) with a sign.  The four entries are the
arc labels around the crossing in counterclockwise order starting from the
incoming under-strand arc, so the under-strand runs a -> c and the over
strand occupies b and d.  The sign is the usual crossing sign: +1 when the
over direction is the under direction rotated a quarter turn clockwise
(right-handed crossing), -1 otherwise.  For a +1 crossing the over strand
runs d -> b; for -1 it runs b -> d.

Knot diagrams with c crossings use arc labels 1..2c, each appearing exactly
twice.  Diagrams produced by tracing number arcs consecutively along the
strand, so the under-strand of every crossing satisfies c = a + 1 (mod 2c);
catalog files are validated against that stronger property.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass


class PDError(Exception):
    """Raised for structurally invalid PD codes."""


@dataclass(frozen=True)
class PDCrossing:
    a: int
    b: int
    c: int
    d: int
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise PDError(f"crossing sign must be +1 or -1, got {self.sign}")

    @property
    def arcs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d

    def mirrored(self) -> "PDCrossing":
        # Switching the crossing makes the old over strand the new under
        # strand; the cyclic order in the plane is unchanged.
        if self.sign > 0:
            return PDCrossing(self.d, self.a, self.b, self.c, -1)
        return PDCrossing(self.b, self.c, self.d, self.a, +1)


@dataclass(frozen=True)
class PDCode:
    """An immutable PD code for a single-component diagram."""

    crossings: tuple[PDCrossing, ...]

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    def validate(self) -> None:
        """Check the arc multiset: labels 1..2c, each exactly twice."""
        counts = Counter(arc for x in self.crossings for arc in x.arcs)
        expected = set(range(1, self.arc_count + 1))
        if set(counts) != expected or any(v != 2 for v in counts.values()):
            bad = {k: v for k, v in counts.items() if k not in expected or v != 2}
            raise PDError(f"bad arc multiset: {bad or 'missing labels'}")

    def validate_traversal(self) -> None:
        """Check consecutive arc numbering along the strand.

        Under-strands must run a -> a+1 (mod 2c) and over strands must join
        two consecutive arcs; this holds for any PD produced by walking the
        diagram from a basepoint and catches most transcription errors.
        """
        self.validate()
        m = self.arc_count
        nxt = lambda x: x % m + 1
        for x in self.crossings:
            if x.c != nxt(x.a):
                raise PDError(f"under-strand of {x} does not advance the arc label")
            if x.over_out != nxt(x.over_in):
                raise PDError(f"over strand of {x} does not advance the arc label")

    def mirrored(self) -> "PDCode":
        return PDCode(tuple(x.mirrored() for x in self.crossings))


UNKNOT_PD = PDCode(())


_CROSSING_RE = re.compile(r"\((\d+),(\d+),(\d+),(\d+)\)([+-])")


def format_pd(pd: PDCode) -> str:
    """Render as "PD[(a,b,c,d)+,...]"; the empty diagram is "PD[]"."""
    body = ",".join(
        f"({x.a},{x.b},{x.c},{x.d}){'+' if x.sign > 0 else '-'}" for x in pd.crossings
    )
    return f"PD[{body}]"


def parse_pd(text: str) -> PDCode:
    text = text.strip()
    if not text.startswith("PD[") or not text.endswith("]"):
        raise PDError(f"expected PD[...], got {text[:30]!r}")
    body = text[3:-1].strip()
    if not body:
        return UNKNOT_PD
    crossings = []
    pos = 0
    for match in _CROSSING_RE.finditer(body):
        if body[pos:match.start()].strip(", ") != "":
            raise PDError(f"unexpected text in PD body near {body[pos:match.start()]!r}")
        a, b, c, d = (int(match.group(i)) for i in range(1, 5))
        sign = 1 if match.group(5) == "+" else -1
        crossings.append(PDCrossing(a, b, c, d, sign))
        pos = match.end()
    if body[pos:].strip(", ") != "":
        raise PDError(f"unexpected trailing text in PD body: {body[pos:]!r}")
    pd = PDCode(tuple(crossings))
    pd.validate()
    return pd


def from_unsigned_quadruples(quads: list[tuple[int, int, int, int]]) -> PDCode:
    """Build a PDCode from plain (a, b, c, d) quadruples without signs.

    Quadruples follow the widely published convention: counterclockwise from
    the incoming under-strand arc, arcs numbered consecutively along the
    knot.  The over direction is recovered from arc-label continuity, which
    determines the sign.
    """
    m = 2 * len(quads)
    nxt = lambda x: x % m + 1
    crossings = []
    for a, b, c, d in quads:
        if nxt(a) != c:
            raise PDError(f"under-strand of ({a},{b},{c},{d}) is not consecutive")
        if nxt(d) == b and nxt(b) == d:
            raise PDError(f"ambiguous over direction in ({a},{b},{c},{d})")
        if nxt(d) == b:
            sign = +1  # over runs d -> b
        elif nxt(b) == d:
            sign = -1  # over runs b -> d
        else:
            raise PDError(f"over strand of ({a},{b},{c},{d}) is not consecutive")
        crossings.append(PDCrossing(a, b, c, d, sign))
    pd = PDCode(tuple(crossings))
    pd.validate()
    return pd
