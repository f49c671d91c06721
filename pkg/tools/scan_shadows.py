#!/usr/bin/env python3
"""Randomized scan over braid-closure shadows for 10-crossing knot classes
not yet covered by the algebraic and antiprism surveys."""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from knotmosaics.diagrams import braid_closure_pd, braid_shadow_knot_pd, rational_knot_pd
from knotmosaics.invariants import Fingerprint, UNKNOT_FINGERPRINT, fingerprint
from knotmosaics.pdcodes import PDError

from build_catalog import BRAIDS, MONTESINOS, POLYHEDRAL, RATIONAL, build_pd, cf_fraction

small_keys = {}
small_fps = {}
for name in list(RATIONAL) + list(MONTESINOS) + list(BRAIDS) + list(POLYHEDRAL):
    if name.startswith("10"):
        continue
    pd, _ = build_pd(name)
    fp = fingerprint(pd)
    small_keys[fp.canonical_key()] = name
    small_fps[name] = fp


def product_fp(f1, f2):
    return Fingerprint(f1.jones * f2.jones, f1.alexander * f2.alexander,
                       f1.determinant * f2.determinant)


composite_keys = set()
names_by_c = {}
for n, fp in small_fps.items():
    names_by_c.setdefault(int(n.split("_")[0]), []).append(n)
for c1, c2 in [(x, y) for x in range(3, 8) for y in range(x, 8) if x + y <= 10]:
    for n1 in names_by_c.get(c1, []):
        for n2 in names_by_c.get(c2, []):
            for f1 in (small_fps[n1], small_fps[n1].mirrored()):
                for f2 in (small_fps[n2], small_fps[n2].mirrored()):
                    pf = product_fp(f1, f2)
                    composite_keys.add(pf.canonical_key())
                    if c1 + c2 <= 7:
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
pd123, _ = build_pd("10_123")
known_alt.add(fingerprint(pd123).canonical_key())
pd124, _ = build_pd("10_124")
known_na.add(fingerprint(pd124).canonical_key())

rng = random.Random(7)
new_alt, new_na = {}, {}
tries = 0
while tries < 120_000 and (len(new_alt) < 6 or len(new_na) < 8):
    tries += 1
    strands = rng.choice([3, 4, 4, 5])
    word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(10)]
    use_shadow = rng.random() < 0.5
    try:
        pd = braid_shadow_knot_pd(word) if use_shadow else braid_closure_pd(word)
    except PDError:
        continue
    if pd.crossing_count != 10:
        continue
    fp = fingerprint(pd)
    key = fp.canonical_key()
    if key in small_keys or key in composite_keys or key == UNKNOT_FINGERPRINT.canonical_key():
        continue
    if fp.determinant % 2 == 0:
        continue
    alt = fp.jones.span == 40
    if alt and key not in known_alt and key not in new_alt:
        new_alt[key] = dict(word=word, shadow=use_shadow, det=fp.determinant,
                            alex=[c for _, c in fp.alexander.items()])
        print("NEW ALT", fp.determinant, new_alt[key]["alex"], word, "shadow" if use_shadow else "braid", flush=True)
    elif not alt and key not in known_na and key not in new_na:
        new_na[key] = dict(word=word, shadow=use_shadow, det=fp.determinant,
                           alex=[c for _, c in fp.alexander.items()])
        print("NEW NA ", fp.determinant, new_na[key]["alex"], word, "shadow" if use_shadow else "braid", flush=True)

print("tries", tries, "new alt", len(new_alt), "new na", len(new_na))
json.dump({"alt": new_alt, "na": new_na}, open("/tmp/scan10.json", "w"))
