#!/usr/bin/env python3
"""Scratch tool: enumerate candidate diagram descriptions and report their
invariants, to match them against known table data while assembling the
catalog.  Not part of the package."""

from __future__ import annotations

import itertools
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from knotmosaics.diagrams import braid_closure_pd, montesinos_pd, rational_knot_pd
from knotmosaics.invariants import fingerprint
from knotmosaics.pdcodes import PDError


def twist_vectors(total: int):
    """All twist vectors (compositions) of `total` with first digit >= 2,
    or the single-digit vector (sub-tangle item strings like 2,1,1)."""
    if total < 1:
        return
    for k in range(1, total + 1):
        for comp in compositions(total, k):
            if k == 1 or comp[0] >= 2:
                yield list(comp)


def compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def montesinos_survey(total: int, n_items: int, allow_negative_last: bool = True):
    """All Montesinos forms with n_items tangles whose sizes sum to `total`."""
    seen = {}
    for sizes in compositions(total, n_items):
        if any(s < 2 for s in sizes):
            continue
        pools = [list(twist_vectors(s)) for s in sizes]
        for combo in itertools.product(*pools):
            variants = [list(map(list, combo))]
            if allow_negative_last:
                neg = [list(v) for v in combo]
                neg[-1] = [-d for d in neg[-1]]
                variants.append(neg)
            for groups in variants:
                try:
                    pd = montesinos_pd(groups)
                except (PDError, ValueError):
                    continue
                if pd.crossing_count != total:
                    continue
                fp = fingerprint(pd)
                key = fp.canonical_key()
                if key not in seen:
                    alt = fp.jones.span == 4 * total
                    seen[key] = (groups, fp.determinant, alt, fp.alexander)
    return seen


def braid_report(word):
    pd = braid_closure_pd(word)
    fp = fingerprint(pd)
    return {
        "crossings": pd.crossing_count,
        "det": fp.determinant,
        "span4c": fp.jones.span == 4 * pd.crossing_count,
        "span": fp.jones.span,
        "alexander": [c for _, c in fp.alexander.items()],
    }


if __name__ == "__main__":
    cmd = sys.argv[1]
    if cmd == "montesinos":
        total, items = int(sys.argv[2]), int(sys.argv[3])
        rows = montesinos_survey(total, items)
        for key, (groups, det, alt, alex) in sorted(rows.items(), key=lambda kv: kv[1][1]):
            print(f"det {det:4d} alt={alt} groups={groups} alex={[c for _, c in alex.items()]}")
        print(len(rows), "distinct knots")
    elif cmd == "braid":
        word = [int(x) for x in sys.argv[2].split(",")]
        print(braid_report(word))
    elif cmd == "rational":
        p, q = int(sys.argv[2]), int(sys.argv[3])
        pd = rational_knot_pd(p, q)
        fp = fingerprint(pd)
        print("crossings", pd.crossing_count, "det", fp.determinant,
              "alex", [c for _, c in fp.alexander.items()])
