"""Independent oracles used to freeze expected values.

These deliberately avoid the production code paths: the bracket oracle
enumerates smoothing states and counts loops by explicit cycle-walking
rather than union-find, and the fill-count oracle literally generates
vectors.  Slow on purpose; used only at small sizes.
"""

from __future__ import annotations

import itertools

from knotmosaics.pdcodes import PDCode, PDCrossing
from knotmosaics.polynomials import LaurentPoly


def naive_bracket(pd: PDCode) -> LaurentPoly:
    """Kauffman bracket by brute force over all 2^c states."""
    crossings = pd.crossings
    c = len(crossings)
    total: dict[int, int] = {}
    for state in itertools.product("AB", repeat=c):
        # Collect the pairings each smoothing induces on arc endpoints.
        # Each arc appears at exactly two crossing corners; a smoothing
        # joins corners pairwise, so loops are cycles of the pairing graph.
        joins: list[tuple[int, int]] = []
        for choice, x in zip(state, crossings):
            if choice == "A":
                joins.append((x.a, x.b))
                joins.append((x.c, x.d))
            else:
                joins.append((x.a, x.d))
                joins.append((x.b, x.c))
        loops = _count_loops(joins)
        exponent = sum(1 if s == "A" else -1 for s in state)
        for e, coef in _delta_power(loops - 1).items():
            key = exponent + e
            total[key] = total.get(key, 0) + coef
            if not total[key]:
                del total[key]
    return LaurentPoly("A", total)


def _count_loops(joins: list[tuple[int, int]]) -> int:
    """Count cycles in the multigraph whose edges are arc-end joins plus the
    arcs themselves (each arc connects its two occurrences)."""
    # Each arc label occurs in exactly two joins; walking alternately along
    # a join and along an arc traverses a loop.
    slots = list(range(len(joins)))
    occurrence: dict[int, list[int]] = {}
    for idx, (u, v) in enumerate(joins):
        occurrence.setdefault(u, []).append(idx)
        occurrence.setdefault(v, []).append(idx)
    unvisited = set(slots)
    loops = 0
    while unvisited:
        start = unvisited.pop()
        loops += 1
        # walk: from a join, cross each of its two arcs to neighbor joins
        frontier = [start]
        while frontier:
            idx = frontier.pop()
            for arc in joins[idx]:
                for other in occurrence[arc]:
                    if other in unvisited:
                        unvisited.remove(other)
                        frontier.append(other)
    return loops


def _delta_power(k: int) -> dict[int, int]:
    """(-A^2 - A^-2)^k as an exponent->coefficient map."""
    result = {0: 1}
    for _ in range(k):
        nxt: dict[int, int] = {}
        for e, c in result.items():
            for de, dc in ((2, -1), (-2, -1)):
                nxt[e + de] = nxt.get(e + de, 0) + c * dc
        result = {e: c for e, c in nxt.items() if c}
    return result


def brute_force_fill_counts(n: int) -> list[int]:
    """counts[m] = number of vectors over {7,8,9,10}^n with >= m crossing
    entries, by literally generating every vector."""
    histogram = [0] * (n + 1)
    for vector in itertools.product((7, 8, 9, 10), repeat=n):
        histogram[sum(1 for e in vector if e >= 9)] += 1
    return [sum(histogram[m:]) for m in range(n + 1)]


def connected_sum(pd1: PDCode, pd2: PDCode) -> PDCode:
    """Connected sum of two traversal-numbered knot PDs.

    Both diagrams are cut at their basepoint arc (arc 1, the segment closing
    the loop) and spliced end to end: the second diagram's arcs shift up by
    the first's arc count, and the two closure slots are rewired.
    """
    m1, m2 = pd1.arc_count, pd2.arc_count
    if not m1:
        return pd2
    if not m2:
        return pd1
    out = []
    for x in pd1.crossings:
        a, b, c, d = x.a, x.b, x.c, x.d
        if a == m1 and c == 1:
            c = m1 + 1  # under-strand closure of the first summand
        elif x.sign > 0 and d == m1 and b == 1:
            b = m1 + 1
        elif x.sign < 0 and b == m1 and d == 1:
            d = m1 + 1
        out.append(PDCrossing(a, b, c, d, x.sign))
    for x in pd2.crossings:
        closure_under = x.a == m2 and x.c == 1
        closure_over_pos = x.sign > 0 and x.d == m2 and x.b == 1
        closure_over_neg = x.sign < 0 and x.b == m2 and x.d == 1
        vals = []
        for slot, v in zip("abcd", x.arcs):
            keep = (
                (closure_under and slot == "c")
                or (closure_over_pos and slot == "b")
                or (closure_over_neg and slot == "d")
            )
            vals.append(1 if keep and v == 1 else v + m1)
        out.append(PDCrossing(vals[0], vals[1], vals[2], vals[3], x.sign))
    pd = PDCode(tuple(out))
    pd.validate_traversal()
    return pd


def smoothed(pd: PDCode, index: int, choice: str) -> tuple[PDCode, int]:
    """Remove crossing `index` by an A or B smoothing.

    Returns the smaller PD and the number of free loops created (loops no
    longer passing through any crossing).  Test helper for the skein check.
    """
    x = pd.crossings[index]
    rest = [c for i, c in enumerate(pd.crossings) if i != index]
    if choice == "A":
        pairs = [(x.a, x.b), (x.c, x.d)]
    else:
        pairs = [(x.a, x.d), (x.b, x.c)]
    # Merge arc labels along the two new joins.
    relabel = {}

    def root(a):
        while a in relabel:
            a = relabel[a]
        return a

    for u, v in pairs:
        ru, rv = root(u), root(v)
        if ru != rv:
            relabel[max(ru, rv)] = min(ru, rv)
    remaining_arcs = {arc for c in rest for arc in c.arcs}
    remaining_roots = {root(a) for a in remaining_arcs}
    free_loops = 0
    touched = {root(a) for pair in pairs for a in pair}
    for arc in touched:
        if arc not in remaining_roots:
            free_loops += 1
    if not rest:
        # The empty PD already stands for one circle.
        free_loops -= 1
    mapped = []
    for c in rest:
        mapped.append(type(c)(root(c.a), root(c.b), root(c.c), root(c.d), c.sign))
    return PDCode(tuple(mapped)), free_loops
