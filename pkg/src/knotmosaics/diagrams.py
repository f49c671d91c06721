"""Programmatic reference diagrams: braid closures and rational knots.

These builders produce traversal-numbered signed PD codes from compact,
independently checkable descriptions (a braid word, or a two-bridge
fraction p/q).  They are used to source and cross-validate catalog entries
and as an independent diagram supply in tests.

Internally a diagram under construction is a set of crossings whose four
slots are held in counterclockwise cyclic order with a marker saying which
diagonal is the over strand; orientations are assigned afterwards by
walking the closed strand, which also yields the consecutive arc numbering
the PD convention requires.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .pdcodes import PDCode, PDCrossing, PDError


class _Edges:
    """Union-find over edge ids; closure joins identify two edges."""

    def __init__(self) -> None:
        self.parent: list[int] = []

    def new(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def join(self, i: int, j: int) -> None:
        self.parent[self.find(i)] = self.find(j)


@dataclass
class _Builder:
    edges: _Edges = field(default_factory=_Edges)
    # Each crossing: ([e0, e1, e2, e3] slots in CCW order, over_parity)
    # where over_parity 0 means slots {0, 2} carry the over strand and None
    # leaves the choice to the alternation pass in to_pd.
    crossings: list[tuple[list[int], int | None]] = field(default_factory=list)

    def add_crossing(self, slots_ccw: list[int], over_parity: int | None) -> None:
        self.crossings.append((slots_ccw, over_parity))

    def to_pd(self, flip: set[int] = frozenset()) -> PDCode:
        """Walk the closed strand, number arcs 1..2c, and orient crossings.

        Crossings whose over_parity is None get it assigned so the diagram
        alternates along the strand (possible for any knot shadow; the two
        visits of a crossing always have opposite step parity).  Crossing
        indices in `flip` are switched afterwards.
        """
        c = len(self.crossings)
        if c == 0:
            return PDCode(())
        incidences: dict[int, list[tuple[int, int]]] = {}
        resolved = [
            [self.edges.find(e) for e in slots] for slots, _ in self.crossings
        ]
        for ci, slots in enumerate(resolved):
            for si, edge in enumerate(slots):
                incidences.setdefault(edge, []).append((ci, si))
        for edge, inc in incidences.items():
            if len(inc) != 2:
                raise PDError(f"edge {edge} has {len(inc)} incidences, expected 2")

        # Follow the strand: enter a crossing through one slot, leave through
        # the opposite slot, and continue on that edge's other incidence.
        start_edge = resolved[0][0]
        start_inc = incidences[start_edge][0]
        arc_of_edge: dict[int, int] = {}
        entry_slot: dict[tuple[int, int], int] = {}
        entry_step: dict[tuple[int, int], int] = {}
        edge, inc = start_edge, start_inc
        for step in range(1, 2 * c + 1):
            if edge in arc_of_edge:
                raise PDError("diagram is not a single closed strand")
            arc_of_edge[edge] = step
            ci, si = inc
            entry_slot[(ci, si % 2)] = si
            entry_step[(ci, si % 2)] = step
            out_si = (si + 2) % 4
            out_edge = resolved[ci][out_si]
            other = [x for x in incidences[out_edge] if x != (ci, out_si)]
            if not other:
                raise PDError("edge closes onto itself; free loop in diagram")
            edge, inc = out_edge, other[0]
        if (edge, inc) != (start_edge, start_inc):
            raise PDError("strand walk did not close up")
        if len(arc_of_edge) != 2 * c:
            raise PDError("diagram has more than one component")

        out = []
        for ci, (slots, over_parity) in enumerate(self.crossings):
            res = resolved[ci]
            if over_parity is None:
                # Alternate along the strand: even steps pass over.
                over_parity = 0 if entry_step[(ci, 0)] % 2 == 0 else 1
            if ci in flip:
                over_parity = 1 - over_parity
            under_in = entry_slot[(ci, 1 - over_parity)]
            over_in = entry_slot[(ci, over_parity)]
            quad = [arc_of_edge[res[(under_in + k) % 4]] for k in range(4)]
            sign = +1 if (over_in - under_in) % 4 == 3 else -1
            out.append(PDCrossing(quad[0], quad[1], quad[2], quad[3], sign))
        pd = PDCode(tuple(out))
        pd.validate_traversal()
        return pd


def braid_closure_pd(word: list[int], strands: int | None = None) -> PDCode:
    """PD code of the closure of a braid word.

    Letters are nonzero integers: k means the strands in positions k, k+1
    cross with the strand from position k on top; -k puts the other strand
    on top.  The closure must be a single component (a knot).
    """
    if not word:
        raise PDError("empty braid word")
    n = (strands if strands is not None else max(abs(x) for x in word) + 1)
    builder = _Builder()
    top = [builder.edges.new() for _ in range(n)]
    pos = list(top)
    for letter in word:
        k = abs(letter) - 1
        if not 0 <= k < n - 1:
            raise PDError(f"braid letter {letter} out of range for {n} strands")
        nw, ne = pos[k], pos[k + 1]
        sw, se = builder.edges.new(), builder.edges.new()
        # Slots in CCW order (NE, NW, SW, SE); the over diagonal is NW-SE
        # for a positive letter, NE-SW for a negative one.
        builder.add_crossing([ne, nw, sw, se], 1 if letter > 0 else 0)
        pos[k], pos[k + 1] = sw, se
    for p in range(n):
        builder.edges.join(pos[p], top[p])
    return builder.to_pd()


@dataclass
class _Tangle:
    """A 2-string tangle with four dangling ends and a tracked fraction."""

    builder: _Builder
    nw: int
    ne: int
    sw: int
    se: int
    fraction: Fraction | None  # None plays the role of infinity


def _zero_tangle(builder: _Builder) -> _Tangle:
    top = builder.edges.new()
    bottom = builder.edges.new()
    return _Tangle(builder, nw=top, ne=top, sw=bottom, se=bottom, fraction=Fraction(0))


def _infinity_tangle(builder: _Builder) -> _Tangle:
    left = builder.edges.new()
    right = builder.edges.new()
    return _Tangle(builder, nw=left, ne=right, sw=left, se=right, fraction=None)


def _twist_right(t: _Tangle, s: int, shadow: bool = False) -> None:
    """One crossing on the two east ends; adds s to the tangle fraction."""
    ne, se = t.builder.edges.new(), t.builder.edges.new()
    # New crossing east of the tangle: slots CCW (NE, NW, SW, SE) with the
    # old NE entering at NW and the old SE at SW.
    t.builder.add_crossing([ne, t.ne, t.se, se], None if shadow else (1 if s > 0 else 0))
    t.ne, t.se = ne, se
    t.fraction = None if t.fraction is None else t.fraction + s


def _twist_bottom(t: _Tangle, s: int, shadow: bool = False) -> None:
    """One crossing on the two south ends; sends fraction F to 1/(1/F + s)."""
    sw, se = t.builder.edges.new(), t.builder.edges.new()
    t.builder.add_crossing([t.se, t.sw, sw, se], None if shadow else (1 if s > 0 else 0))
    t.sw, t.se = sw, se
    if t.fraction is None:
        t.fraction = Fraction(1, s)
    elif t.fraction == 0:
        t.fraction = None
    else:
        t.fraction = 1 / (1 / t.fraction + s)


def continued_fraction(p: int, q: int) -> list[int]:
    """All-positive continued fraction [a1, ..., ak] with
    p/q = ak + 1/(a(k-1) + 1/(... + 1/a1)) and every ai >= 1."""
    if not 0 < q < p:
        raise ValueError("need 0 < q < p")
    terms = []
    while q:
        terms.append(p // q)
        p, q = q, p % q
    return list(reversed(terms))


def _twist_vector_tangle(builder: _Builder, digits: list[int], shadow: bool = False) -> _Tangle:
    """Rational tangle from a twist vector, ending with a vertical group.

    Digits are twist-group sizes; negative digits twist the other way.  The
    groups alternate between horizontal and vertical twisting and the last
    group is always vertical, so a single digit a gives the vertical twist
    tangle with fraction 1/a.  In shadow mode the crossings are left for the
    alternation pass to orient.
    """
    if not digits or any(d == 0 for d in digits):
        raise ValueError(f"bad twist vector {digits}")
    if len(digits) % 2:
        tangle = _infinity_tangle(builder)
        horizontal = False
    else:
        tangle = _zero_tangle(builder)
        horizontal = True
    for d in digits:
        step = 1 if d > 0 else -1
        for _ in range(abs(d)):
            if horizontal:
                _twist_right(tangle, step, shadow=shadow)
            else:
                _twist_bottom(tangle, step, shadow=shadow)
        horizontal = not horizontal
    return tangle


def _tangle_sum(t1: _Tangle, t2: _Tangle) -> _Tangle:
    """Horizontal concatenation; fractions add."""
    t1.builder.edges.join(t1.ne, t2.nw)
    t1.builder.edges.join(t1.se, t2.sw)
    fraction = None
    if t1.fraction is not None and t2.fraction is not None:
        fraction = t1.fraction + t2.fraction
    return _Tangle(t1.builder, nw=t1.nw, ne=t2.ne, sw=t1.sw, se=t2.se, fraction=fraction)


def montesinos_pd(groups: list[list[int]], extra_twists: int = 0) -> PDCode:
    """Knot from a sum of twist-vector tangles with the ends closed off.

    groups like [[3], [3], [2]] give the (3, 3, 2) pretzel; multi-digit
    groups like [2, 1] give the corresponding rational sub-tangle.
    extra_twists adds that many horizontal twists after the sum (the
    trailing "+"/"++" decoration of tangle calculus).  The closure must be
    a single component.
    """
    if len(groups) < 2:
        raise ValueError("need at least two tangles to sum")
    builder = _Builder()
    total = _twist_vector_tangle(builder, groups[0])
    for digits in groups[1:]:
        total = _tangle_sum(total, _twist_vector_tangle(builder, digits))
    for _ in range(abs(extra_twists)):
        _twist_right(total, 1 if extra_twists > 0 else -1)
    builder.edges.join(total.nw, total.ne)
    builder.edges.join(total.sw, total.se)
    return builder.to_pd()


def braid_shadow_knot_pd(
    word: list[int],
    subs: dict[int, tuple[list[int], int]] | None = None,
    negative_sites: set[int] | frozenset[int] = frozenset(),
    strands: int | None = None,
) -> PDCode:
    """Alternating knot on a braid-closure shadow, with tangle substitutions.

    Letter signs are ignored (the shadow alone matters); over/under is
    assigned by alternation along the strand, so the result is the
    alternating knot carried by the shadow.  subs maps a letter index to
    (twist_vector, rotation), replacing that crossing site with a rational
    tangle as in antiprism_knot_pd; sites in negative_sites have their
    crossings switched afterwards.
    """
    if not word:
        raise PDError("empty braid word")
    subs = subs or {}
    n = (strands if strands is not None else max(abs(x) for x in word) + 1)
    builder = _Builder()
    top = [builder.edges.new() for _ in range(n)]
    pos = list(top)
    flip: set[int] = set()
    for site, letter in enumerate(word):
        k = abs(letter) - 1
        if not 0 <= k < n - 1:
            raise PDError(f"braid letter {letter} out of range for {n} strands")
        nw, ne = pos[k], pos[k + 1]
        sw, se = builder.edges.new(), builder.edges.new()
        slots = [ne, nw, sw, se]
        first = len(builder.crossings)
        if site in subs:
            digits, rotation = subs[site]
            tangle = _twist_vector_tangle(builder, digits, shadow=True)
            corners = [tangle.ne, tangle.nw, tangle.sw, tangle.se]
            for i, edge in enumerate(slots):
                builder.edges.join(corners[(i + rotation) % 4], edge)
        else:
            builder.add_crossing(slots, None)
        if site in negative_sites:
            flip.update(range(first, len(builder.crossings)))
        pos[k], pos[k + 1] = sw, se
    for p in range(n):
        builder.edges.join(pos[p], top[p])
    return builder.to_pd(flip=flip)


def plat_shadow_knot_pd(word: list[int], strands: int = 6) -> PDCode:
    """Alternating knot on a plat-closure shadow.

    The strands are capped in adjacent pairs at top and bottom (a 2n-plat),
    which realizes bridge-position diagrams that braid closures cannot;
    letter signs are ignored and over/under is assigned by alternation.
    """
    if not word:
        raise PDError("empty plat word")
    if strands % 2:
        raise PDError("plat closures need an even strand count")
    builder = _Builder()
    pos = [builder.edges.new() for _ in range(strands)]
    for p in range(0, strands, 2):
        builder.edges.join(pos[p], pos[p + 1])
    for letter in word:
        k = abs(letter) - 1
        if not 0 <= k < strands - 1:
            raise PDError(f"plat letter {letter} out of range for {strands} strands")
        nw, ne = pos[k], pos[k + 1]
        sw, se = builder.edges.new(), builder.edges.new()
        builder.add_crossing([ne, nw, sw, se], None)
        pos[k], pos[k + 1] = sw, se
    for p in range(0, strands, 2):
        builder.edges.join(pos[p], pos[p + 1])
    return builder.to_pd()


def antiprism_knot_pd(
    n: int,
    subs: dict[int, tuple[list[int], int]] | None = None,
    negative_sites: set[int] | frozenset[int] = frozenset(),
) -> PDCode:
    """Alternating knot built on the n-antiprism shadow (2n vertices).

    The triangular, square, and pentagonal antiprisms are the 6-, 8-, and
    10-vertex basic 4-valent shadows.  Sites 0..n-1 are the inner-ring
    vertices, n..2n-1 the outer ring.  A plain site is one crossing; subs
    maps a site to (twist_vector, rotation 0..3) replacing that vertex with
    a rational tangle whose corners attach to the site's edges rotated by
    the given amount.  Over/under is assigned by alternation; crossings of
    sites in negative_sites are switched afterwards (non-alternating forms).
    """
    if n < 3:
        raise ValueError("antiprism needs n >= 3")
    subs = subs or {}
    builder = _Builder()
    top_ring = [builder.edges.new() for _ in range(n)]     # T_i -- T_(i+1)
    bottom_ring = [builder.edges.new() for _ in range(n)]  # B_i -- B_(i+1)
    cross_a = [builder.edges.new() for _ in range(n)]      # T_i -- B_i
    cross_b = [builder.edges.new() for _ in range(n)]      # T_i -- B_(i-1)

    def site_slots(site: int) -> list[int]:
        if site < n:
            i = site
            return [cross_a[i], top_ring[i], top_ring[(i - 1) % n], cross_b[i]]
        j = site - n
        return [bottom_ring[j], cross_b[(j + 1) % n], cross_a[j], bottom_ring[(j - 1) % n]]

    flip: set[int] = set()
    for site in range(2 * n):
        slots = site_slots(site)
        first = len(builder.crossings)
        if site in subs:
            digits, rotation = subs[site]
            tangle = _twist_vector_tangle(builder, digits, shadow=True)
            corners = [tangle.ne, tangle.nw, tangle.sw, tangle.se]
            for k, edge in enumerate(slots):
                builder.edges.join(corners[(k + rotation) % 4], edge)
        else:
            builder.add_crossing(slots, None)
        if site in negative_sites:
            flip.update(range(first, len(builder.crossings)))
    return builder.to_pd(flip=flip)


def rational_knot_pd(p: int, q: int) -> PDCode:
    """Standard alternating diagram of the two-bridge knot b(p, q).

    p must be odd (even p gives a two-component link) and 0 < q < p.  The
    diagram is built from the all-positive continued fraction of p/q by
    alternating twist regions and closing the tangle; the tracked tangle
    fraction is asserted to equal p/q before closure.
    """
    if p % 2 == 0:
        raise ValueError(f"b({p}, {q}) is a link, not a knot")
    terms = continued_fraction(p, q)
    builder = _Builder()
    # End with a rightward twist group so the closure is the numerator
    # closure of a fraction with numerator p: start on the zero tangle for
    # an odd number of groups, on the infinity tangle for an even number.
    if len(terms) % 2:
        tangle = _zero_tangle(builder)
        horizontal = True
    else:
        tangle = _infinity_tangle(builder)
        horizontal = False
    for a in terms:
        for _ in range(a):
            if horizontal:
                _twist_right(tangle, +1)
            else:
                _twist_bottom(tangle, +1)
        horizontal = not horizontal
    expected = Fraction(p, q)
    got = tangle.fraction
    if got is not None and abs(got) != expected and abs(1 / got) != expected:
        raise PDError(f"tangle fraction {got} does not realize {expected}")
    builder.edges.join(tangle.nw, tangle.ne)
    builder.edges.join(tangle.sw, tangle.se)
    return builder.to_pd()
