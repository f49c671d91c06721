"""Polynomial invariants of a PD code: bracket, Jones, Alexander, determinant.

All arithmetic is exact over the integers.  Jones polynomials are stored
with exponents scaled by 4 (the bracket variable satisfies A = q^(-1/4), so
quarter powers of q become integer exponents); for knots the stored
exponents are always multiples of 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pdcodes import PDCode, PDError
from .polynomials import LaurentPoly, format_poly, normalize_alexander, parse_poly


def writhe(pd: PDCode) -> int:
    """Sum of crossing signs."""
    return sum(x.sign for x in pd.crossings)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        parent = self.parent
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        self.parent[self.find(i)] = self.find(j)


def _state_histogram(pd: PDCode) -> dict[tuple[int, int], int]:
    """Count smoothing states by (a_count - b_count, loop count).

    For each crossing (a, b, c, d) the A-smoothing joins arcs (a, b) and
    (c, d); the B-smoothing joins (a, d) and (b, c).
    """
    arcs = sorted({arc for x in pd.crossings for arc in x.arcs})
    index = {arc: i for i, arc in enumerate(arcs)}
    joins = [
        (
            ((index[x.a], index[x.b]), (index[x.c], index[x.d])),
            ((index[x.a], index[x.d]), (index[x.b], index[x.c])),
        )
        for x in pd.crossings
    ]
    c = len(joins)
    histogram: dict[tuple[int, int], int] = {}
    for state in range(1 << c):
        uf = _UnionFind(len(arcs))
        a_count = 0
        for i, (a_join, b_join) in enumerate(joins):
            if state >> i & 1:
                pairs = b_join
            else:
                pairs = a_join
                a_count += 1
            uf.union(*pairs[0])
            uf.union(*pairs[1])
        loops = len({uf.find(i) for i in range(len(arcs))})
        key = (2 * a_count - c, loops)
        histogram[key] = histogram.get(key, 0) + 1
    return histogram


def kauffman_bracket(pd: PDCode) -> LaurentPoly:
    """State-sum bracket polynomial in A; the empty diagram gives 1."""
    if not pd.crossings:
        return LaurentPoly.constant(1, "A")
    delta = LaurentPoly("A", {2: -1, -2: -1})
    max_loops = 2 * pd.crossing_count + 1
    delta_powers = [LaurentPoly.constant(1, "A")]
    for _ in range(max_loops):
        delta_powers.append(delta_powers[-1] * delta)
    total = LaurentPoly.zero("A")
    for (exp, loops), count in sorted(_state_histogram(pd).items()):
        total = total + delta_powers[loops - 1].shift(exp).scale(count)
    return total


def jones(pd: PDCode) -> LaurentPoly:
    """Jones polynomial in q, exponents stored times 4.

    (-A^3)^(-writhe) * bracket, then A = q^(-1/4): in the x4 representation
    an A-exponent e becomes the q-exponent -e.
    """
    w = writhe(pd)
    bracket = kauffman_bracket(pd)
    normalized = bracket.shift(-3 * w)
    if w % 2:
        normalized = -normalized
    return normalized.map_exponents(lambda e: -e).with_var("q")


# -- Alexander polynomial ---------------------------------------------------

# Dense polynomials over Z[t] represented as {exponent: coefficient} with
# non-negative exponents; enough machinery for a fraction-free determinant.


def _padd(p: dict, q: dict) -> dict:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pmul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _psub(p: dict, q: dict) -> dict:
    return _padd(p, {e: -c for e, c in q.items()})


def _pdivexact(p: dict, q: dict) -> dict:
    """Exact division in Z[t]; raises if the division leaves a remainder."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return {}
    out: dict = {}
    rem = dict(p)
    q_deg = max(q)
    q_lead = q[q_deg]
    while rem:
        deg = max(rem)
        if deg < q_deg:
            raise ArithmeticError("inexact polynomial division")
        coef, r = divmod(rem[deg], q_lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[deg - q_deg] = coef
        rem = _psub(rem, _pmul({deg - q_deg: coef}, q))
    return out


def _bareiss_det(matrix: list[list[dict]]) -> dict:
    """Fraction-free determinant of a matrix of Z[t] polynomials."""
    n = len(matrix)
    if n == 0:
        return {0: 1}
    m = [row[:] for row in matrix]
    sign = 1
    prev: dict = {0: 1}
    for k in range(n - 1):
        if not m[k][k]:
            pivot = next((r for r in range(k + 1, n) if m[r][k]), None)
            if pivot is None:
                return {}
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = _psub(_pmul(m[k][k], m[i][j]), _pmul(m[i][k], m[k][j]))
                m[i][j] = _pdivexact(numerator, prev)
            m[i][k] = {}
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else {e: -c for e, c in det.items()}


def _wirtinger_arcs(pd: PDCode) -> dict[int, int]:
    """Map each PD arc label to its over-arc class (0-based dense index).

    Over-arcs are the strand segments between consecutive under-passes:
    PD arcs joined through the top of a crossing belong to one over-arc.
    """
    arcs = sorted({arc for x in pd.crossings for arc in x.arcs})
    index = {arc: i for i, arc in enumerate(arcs)}
    uf = _UnionFind(len(arcs))
    for x in pd.crossings:
        uf.union(index[x.over_in], index[x.over_out])
    roots = sorted({uf.find(i) for i in range(len(arcs))})
    dense = {root: i for i, root in enumerate(roots)}
    return {arc: dense[uf.find(index[arc])] for arc in arcs}


def alexander(pd: PDCode) -> LaurentPoly:
    """Normalized Alexander polynomial (lowest exponent 0, positive lead).

    Built from the crossing relations of the diagram's over-arc labeling:
    each crossing contributes the abelianized relation row and the
    polynomial is any first minor of the resulting matrix, normalized.
    """
    c = pd.crossing_count
    if c == 0:
        return LaurentPoly.constant(1, "t")
    arc_class = _wirtinger_arcs(pd)
    n_classes = max(arc_class.values()) + 1
    if n_classes != c:
        raise PDError(f"diagram has {n_classes} over-arcs for {c} crossings; invalid PD")
    rows: list[list[dict]] = []
    for x in pd.crossings:
        row_map: dict[int, dict] = {}

        def add(col: int, poly: dict) -> None:
            row_map[col] = _padd(row_map.get(col, {}), poly)

        under_in, under_out, over = arc_class[x.a], arc_class[x.c], arc_class[x.over_in]
        if x.sign > 0:
            add(under_in, {1: 1})        # t * u_in
            add(over, {0: 1, 1: -1})     # (1 - t) * over
            add(under_out, {0: -1})      # - u_out
        else:
            add(under_in, {0: 1})        # u_in
            add(over, {1: 1, 0: -1})     # (t - 1) * over
            add(under_out, {1: -1})      # - t * u_out
        rows.append([row_map.get(col, {}) for col in range(c)])
    minor = [row[1:] for row in rows[1:]]
    det = _bareiss_det(minor)
    return normalize_alexander(LaurentPoly("t", det))


def determinant(pd: PDCode) -> int:
    """|Alexander at t = -1|."""
    return abs(alexander(pd).evaluate(-1))


# -- fingerprint ------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """(Jones, Alexander, determinant) triple keying knot identification."""

    jones: LaurentPoly
    alexander: LaurentPoly
    determinant: int

    def mirrored(self) -> "Fingerprint":
        return Fingerprint(self.jones.substitute_inverse(), self.alexander, self.determinant)

    def serialize(self) -> str:
        return f"jones={format_poly(self.jones)};alexander={format_poly(self.alexander)};det={self.determinant}"

    @staticmethod
    def deserialize(text: str) -> "Fingerprint":
        fields = dict(part.split("=", 1) for part in text.split(";"))
        return Fingerprint(
            parse_poly(fields["jones"], "q"),
            parse_poly(fields["alexander"], "t"),
            int(fields["det"]),
        )

    def canonical_key(self) -> str:
        """Identifies a fingerprint with its mirror image."""
        return min(self.serialize(), self.mirrored().serialize())


UNKNOT_FINGERPRINT = Fingerprint(
    LaurentPoly.constant(1, "q"), LaurentPoly.constant(1, "t"), 1
)


def fingerprint(pd: PDCode) -> Fingerprint:
    """Compute the invariant triple of a knot PD."""
    if not pd.crossings:
        return UNKNOT_FINGERPRINT
    alex = alexander(pd)
    return Fingerprint(jones(pd), alex, abs(alex.evaluate(-1)))
