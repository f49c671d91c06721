#!/usr/bin/env python3
"""Systematic enumeration of 10-crossing braid-closure shadows (4-strand,
plus structured 5-strand families), deduplicated at the shadow level before
computing invariants.  Collects alternating classes not in the known pools,
and non-alternating classes from small crossing-flip perturbations."""

from __future__ import annotations

import itertools
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from knotmosaics.diagrams import braid_shadow_knot_pd
from knotmosaics.invariants import Fingerprint, UNKNOT_FINGERPRINT, fingerprint
from knotmosaics.pdcodes import PDCode, PDError

from build_catalog import BRAIDS, MONTESINOS, POLYHEDRAL, RATIONAL, build_pd, cf_fraction
from knotmosaics.diagrams import rational_knot_pd

small_keys = {}
small_fps = {}
for name in list(RATIONAL) + list(MONTESINOS) + list(BRAIDS) + list(POLYHEDRAL):
    if name.startswith("10"):
        continue
    pd, _ = build_pd(name)
    fp = fingerprint(pd)
    small_keys[fp.canonical_key()] = name
    small_fps[name] = fp

names_by_c = {}
for n, fp in small_fps.items():
    names_by_c.setdefault(int(n.split("_")[0]), []).append(n)


def product_fp(f1, f2):
    return Fingerprint(f1.jones * f2.jones, f1.alexander * f2.alexander,
                       f1.determinant * f2.determinant)


composite_keys = set()
for c1 in range(3, 8):
    for c2 in range(c1, 8):
        if c1 + c2 > 10:
            continue
        for n1 in names_by_c.get(c1, []):
            for n2 in names_by_c.get(c2, []):
                for f1 in (small_fps[n1], small_fps[n1].mirrored()):
                    for f2 in (small_fps[n2], small_fps[n2].mirrored()):
                        pf = product_fp(f1, f2)
                        composite_keys.add(pf.canonical_key())
                        for c3 in range(3, 11 - c1 - c2):
                            for n3 in names_by_c.get(c3, []):
                                for f3 in (small_fps[n3], small_fps[n3].mirrored()):
                                    composite_keys.add(product_fp(pf, f3).canonical_key())

clean = json.load(open("/tmp/clean10.json"))
known_alt = set(clean["alt"])
known_na = set(clean["na"])
for name, vec in RATIONAL.items():
    if name.startswith("10"):
        fr = cf_fraction(vec)
        known_alt.add(fingerprint(rational_knot_pd(fr.numerator, fr.denominator)).canonical_key())
known_alt.add(fingerprint(build_pd("10_123")[0]).canonical_key())
known_na.add(fingerprint(build_pd("10_124")[0]).canonical_key())
UNKNOT_KEY = UNKNOT_FINGERPRINT.canonical_key()


def shadow_signature(pd: PDCode) -> tuple:
    """Canonical unoriented Gauss-sequence of the diagram's shadow."""
    m = pd.arc_count
    visits = [0] * m
    for idx, x in enumerate(pd.crossings):
        visits[x.a - 1] = idx
        visits[x.over_in - 1] = idx
    best = None
    for seq in (visits, visits[::-1]):
        for shift in range(m):
            rotated = seq[shift:] + seq[:shift]
            relabel, out = {}, []
            for v in rotated:
                if v not in relabel:
                    relabel[v] = len(relabel)
                out.append(relabel[v])
            key = tuple(out)
            if best is None or key < best:
                best = key
    return best


def flipped(pd: PDCode, flips: tuple[int, ...]) -> PDCode:
    return PDCode(tuple(
        x.mirrored() if i in flips else x for i, x in enumerate(pd.crossings)
    ))


new_alt, new_na, seen_shadows = {}, {}, set()
shadow_pds = []

words = [list(w) for w in itertools.product((1, 2, 3), repeat=10)]
five = []
base = [1, 2, 3, 4, 1, 2, 3, 4]
for i in range(8):
    for j in range(i, 8):
        w = []
        for k, letter in enumerate(base):
            w.append(letter)
            if k == i:
                w.append(letter)
            if k == j:
                w.append(letter)
        if len(w) == 10:
            five.append(w)
words += five

for word in words:
    try:
        pd = braid_shadow_knot_pd(word)
    except PDError:
        continue
    if pd.crossing_count != 10:
        continue
    sig = shadow_signature(pd)
    if sig in seen_shadows:
        continue
    seen_shadows.add(sig)
    fp = fingerprint(pd)
    key = fp.canonical_key()
    if key in small_keys or key in composite_keys or key == UNKNOT_KEY:
        continue
    if fp.jones.span == 40:
        shadow_pds.append(pd)
        if key not in known_alt and key not in new_alt:
            new_alt[key] = dict(word=word, det=fp.determinant,
                                alex=[fp.alexander.coefficient(e)
                                      for e in range(fp.alexander.max_exp + 1)])
            print("NEW ALT", fp.determinant, new_alt[key]["alex"], word, flush=True)
            json.dump({"alt": new_alt, "na": new_na}, open("/tmp/enum10.json", "w"))

print("distinct shadows:", len(seen_shadows), "alt diagrams kept:", len(shadow_pds),
      "new alt:", len(new_alt), flush=True)

# crossing-flip perturbations for non-alternating classes
for pd in shadow_pds:
    for k in (1, 2):
        for flips in itertools.combinations(range(10), k):
            cand = flipped(pd, flips)
            fp = fingerprint(cand)
            key = fp.canonical_key()
            if (key in small_keys or key in composite_keys or key == UNKNOT_KEY
                    or fp.jones.span == 40 or fp.determinant % 2 == 0):
                continue
            if key not in known_na and key not in new_na:
                new_na[key] = dict(flips=list(flips), det=fp.determinant,
                                   alex=[fp.alexander.coefficient(e)
                                         for e in range(fp.alexander.max_exp + 1)])
                print("NEW NA ", fp.determinant, new_na[key]["alex"], flush=True)
                json.dump({"alt": new_alt, "na": new_na}, open("/tmp/enum10.json", "w"))

print("done: new alt", len(new_alt), "new na", len(new_na), flush=True)
json.dump({"alt": new_alt, "na": new_na}, open("/tmp/enum10.json", "w"))
