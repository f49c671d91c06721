"""The invariant fingerprint: bracket, Jones, Alexander, determinant.

Jones polynomials are stored with exponents scaled by 4 so that quarter
powers of q stay integers; divide the printed exponents by 4 to read them
in the usual normalization.
"""

from knotmosaics.diagrams import braid_closure_pd, rational_knot_pd
from knotmosaics.invariants import alexander, determinant, fingerprint, jones, kauffman_bracket, writhe
from knotmosaics.tiles import parse_matrix
from knotmosaics.tracing import to_pd, trace

trefoil = to_pd(trace(parse_matrix("0 2 1 0 / 2 10 9 1 / 3 9 8 4 / 0 3 4 0")))
print("trefoil from the 4-mosaic:")
print("  writhe:", writhe(trefoil))
print("  bracket:", kauffman_bracket(trefoil))
print("  jones (x4 exponents):", jones(trefoil))
print("  alexander:", alexander(trefoil))
print("  determinant:", determinant(trefoil))

print("mirror image:")
print("  jones:", jones(trefoil.mirrored()), " (exponents negated)")

figure_eight = rational_knot_pd(5, 2)
fp = fingerprint(figure_eight)
print("figure-eight knot b(5,2):")
print("  fingerprint:", fp.serialize())
print("  amphichiral jones:", fp.jones == fp.jones.substitute_inverse())

torus_3_4 = braid_closure_pd([1, 2] * 4)
print("(3,4)-torus knot from the braid (s1 s2)^4:")
print("  alexander:", alexander(torus_3_4))
print("  determinant:", determinant(torus_3_4))
