"""Walk a mosaic by hand: parse a matrix, trace the strand, read the codes.

A knot mosaic is stored as a plain integer matrix (tile kinds 0..10).  This
demo traces the classic 4x4 trefoil mosaic and prints everything the tracer
learns about it.
"""

from knotmosaics.tiles import crossing_count, is_suitably_connected, nonblank_count, parse_matrix
from knotmosaics.tracing import dt_code, format_dt, gauss_pairs, to_pd, trace

TREFOIL = """
0 2 1 0
2 10 9 1
3 9 8 4
0 3 4 0
"""

grid = parse_matrix(TREFOIL)
print("matrix:")
print(TREFOIL.strip())
print("suitably connected:", is_suitably_connected(grid))
print("non-blank tiles:", nonblank_count(grid), " crossing tiles:", crossing_count(grid))

result = trace(grid)
print("component kind:", result.kind.value)
print("cells visited:", len(result.visit_sequence))
print("crossing visits (cell, label, under?):")
for visit in result.crossing_visits:
    print("   ", visit.cell, visit.label, visit.passed_under)

pairs = gauss_pairs(result)
print("gauss pairs:", pairs.pairs)
print("DT code:", format_dt(dt_code(pairs)))

pd = to_pd(result)
print("PD code:", [(x.a, x.b, x.c, x.d, x.sign) for x in pd.crossings])
