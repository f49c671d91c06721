"""Layout enumeration and the crossing-count pruning arithmetic.

A space-efficient layout fixes an outer shell of arc tiles and leaves
wildcard cells to be filled from the four-connection-point tiles
{T7, T8, T9, T10}.  Keeping only fillings with at least m crossing tiles
cuts the candidate count from 4^n to 2^n * sum(C(n, i), i >= m).
"""

from collections import Counter

from knotmosaics.layouts import builtin_layout, count_candidates, enumerate_fills, shard_fills
from knotmosaics.tiles import crossing_count
from knotmosaics.tracing import TraceKind, trace

layout = builtin_layout("shell4")
print("layout shell4, wildcards:", layout.wildcard_count)
for m in range(5):
    print(f"  min crossings {m}: {count_candidates(layout.wildcard_count, m):4d} candidates")

print("paper-scale example: n=13 wildcards, m=9 ->", f"{count_candidates(13, 9):,}")

kinds = Counter()
for grid in enumerate_fills(layout, 0):
    kinds[trace(grid).kind] += 1
print("tracing all 256 fillings of the 4-shell:")
for kind, count in kinds.items():
    print(f"  {kind.value}: {count}")

print("shards of the m=3 stream:")
for i in range(4):
    shard = list(shard_fills(layout, 3, i, 4))
    print(f"  shard {i}/4: {len(shard)} grids, "
          f"crossing range {min(crossing_count(g) for g in shard)}-"
          f"{max(crossing_count(g) for g in shard)}")
