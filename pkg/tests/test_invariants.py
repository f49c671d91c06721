from __future__ import annotations

import random

import pytest

from knotmosaics.invariants import (
    UNKNOT_FINGERPRINT,
    Fingerprint,
    alexander,
    determinant,
    fingerprint,
    jones,
    kauffman_bracket,
    writhe,
)
from knotmosaics.pdcodes import UNKNOT_PD, PDCode, PDCrossing
from knotmosaics.polynomials import LaurentPoly
from knotmosaics.tiles import parse_matrix
from knotmosaics.tracing import to_pd, trace

from oracles import connected_sum, naive_bracket, smoothed

KINK_TEXT = "0 2 1 / 2 9 4 / 3 4 0"
KINK_NEG_TEXT = "0 2 1 / 2 10 4 / 3 4 0"


@pytest.fixture(scope="module")
def trefoil_pd(request):
    grid = parse_matrix("0 2 1 0 / 2 10 9 1 / 3 9 8 4 / 0 3 4 0")
    return to_pd(trace(grid))


def test_bracket_unknot():
    assert kauffman_bracket(UNKNOT_PD) == LaurentPoly.constant(1, "A")


def test_bracket_kinks():
    pos = to_pd(trace(parse_matrix(KINK_TEXT)))
    neg = to_pd(trace(parse_matrix(KINK_NEG_TEXT)))
    assert kauffman_bracket(pos) == LaurentPoly("A", {3: -1})
    assert kauffman_bracket(neg) == LaurentPoly("A", {-3: -1})


def test_bracket_trefoil_against_oracle(trefoil_pd):
    bracket = kauffman_bracket(trefoil_pd)
    assert bracket == naive_bracket(trefoil_pd)
    # The 8-state sum gives three terms spanning 12.
    assert len(bracket.items()) == 3
    assert bracket.span == 12


def test_jones_unknot():
    assert jones(UNKNOT_PD) == LaurentPoly.constant(1, "q")


def test_jones_kink_is_unknot():
    for text in (KINK_TEXT, KINK_NEG_TEXT):
        pd = to_pd(trace(parse_matrix(text)))
        assert jones(pd) == LaurentPoly.constant(1, "q")


def test_jones_trefoil(trefoil_pd):
    # Right-handed trefoil from the 4-mosaic: q + q^3 - q^4 in quarter-power
    # storage (exponents times 4); the mirror has inverted exponents.
    value = jones(trefoil_pd)
    mirror = jones(trefoil_pd.mirrored())
    expected = LaurentPoly("q", {4: 1, 12: 1, 16: -1})
    assert value in (expected, expected.substitute_inverse())
    assert mirror == value.substitute_inverse()


def test_writhe(trefoil_pd):
    assert writhe(UNKNOT_PD) == 0
    assert abs(writhe(trefoil_pd)) == 3
    assert writhe(trefoil_pd.mirrored()) == -writhe(trefoil_pd)


def test_kink_sum_shifts_writhe_not_jones(trefoil_pd):
    kink = to_pd(trace(parse_matrix(KINK_TEXT)))
    summed = connected_sum(trefoil_pd, kink)
    assert abs(writhe(summed) - writhe(trefoil_pd)) == 1
    assert jones(summed) == jones(trefoil_pd)
    assert alexander(summed) == alexander(trefoil_pd)


def test_alexander_small(trefoil_pd):
    assert alexander(UNKNOT_PD) == LaurentPoly.constant(1, "t")
    assert alexander(trefoil_pd) == LaurentPoly("t", {0: 1, 1: -1, 2: 1})
    assert alexander(trefoil_pd.mirrored()) == alexander(trefoil_pd)


def test_determinant_small(trefoil_pd):
    assert determinant(UNKNOT_PD) == 1
    assert determinant(trefoil_pd) == 3


def test_granny_knot(trefoil_pd):
    granny = connected_sum(trefoil_pd, trefoil_pd)
    assert determinant(granny) == 9
    assert alexander(granny) == LaurentPoly("t", {0: 1, 1: -2, 2: 3, 3: -2, 4: 1})
    assert jones(granny) == jones(trefoil_pd) * jones(trefoil_pd)


def test_fingerprint_unknot():
    assert fingerprint(UNKNOT_PD) == UNKNOT_FINGERPRINT
    assert UNKNOT_FINGERPRINT.determinant == 1


def test_fingerprint_serialization_round_trip(trefoil_pd):
    fp = fingerprint(trefoil_pd)
    assert Fingerprint.deserialize(fp.serialize()) == fp
    assert fp.mirrored().canonical_key() == fp.canonical_key()
    assert fp.mirrored() != fp  # chiral knot: jones differs


def test_fingerprint_mirror_changes_only_jones(trefoil_pd):
    fp = fingerprint(trefoil_pd)
    mirrored = fingerprint(trefoil_pd.mirrored())
    assert mirrored.alexander == fp.alexander
    assert mirrored.determinant == fp.determinant
    assert mirrored.jones == fp.jones.substitute_inverse()


# -- catalog-wide properties ------------------------------------------------


def test_catalog_4_1_and_5_x(catalog, index):
    assert index.fingerprints["4_1"].determinant == 5
    assert index.fingerprints["3_1"].determinant == 3
    assert index.fingerprints["5_1"].determinant == 5
    alex_4_1 = index.fingerprints["4_1"].alexander
    assert alex_4_1 == LaurentPoly("t", {0: 1, 1: -3, 2: 1})
    # 4_1 is amphichiral: its Jones polynomial is mirror-symmetric.
    j = index.fingerprints["4_1"].jones
    assert j == j.substitute_inverse()


def test_bracket_oracle_equivalence_small_catalog(catalog):
    for entry in catalog.entries:
        if entry.crossing_number > 6:
            continue
        pd = entry.reference_pd
        assert kauffman_bracket(pd) == naive_bracket(pd)


def test_skein_relation_on_small_catalog(catalog):
    a_term = LaurentPoly("A", {1: 1})
    b_term = LaurentPoly("A", {-1: 1})
    delta = LaurentPoly("A", {2: -1, -2: -1})
    for entry in catalog.entries:
        if entry.crossing_number > 6:
            continue
        pd = entry.reference_pd
        for i in range(pd.crossing_count):
            sm_a, free_a = smoothed(pd, i, "A")
            sm_b, free_b = smoothed(pd, i, "B")
            part_a = kauffman_bracket(sm_a)
            part_b = kauffman_bracket(sm_b)
            for _ in range(free_a):
                part_a = part_a * delta
            for _ in range(free_b):
                part_b = part_b * delta
            assert kauffman_bracket(pd) == a_term * part_a + b_term * part_b


def test_jones_mirror_on_random_catalog_entries(catalog):
    rng = random.Random(20260810)
    entries = rng.sample(list(catalog.entries), 20)
    for entry in entries:
        pd = entry.reference_pd
        assert jones(pd.mirrored()) == jones(pd).substitute_inverse()


def test_alexander_palindromic_and_odd_det_catalog(index):
    for name, fp in index.fingerprints.items():
        coeffs = [fp.alexander.coefficient(e) for e in range(fp.alexander.max_exp + 1)]
        assert coeffs == coeffs[::-1], name
        assert fp.determinant % 2 == 1, name
        assert abs(fp.alexander.evaluate(1)) == 1, name


def test_jones_at_one_is_one_catalog(index):
    for name, fp in index.fingerprints.items():
        assert sum(c for _, c in fp.jones.items()) == 1, name
        assert all(e % 4 == 0 for e, _ in fp.jones.items()), name


def test_determinant_equals_jones_at_minus_one_catalog(index):
    for name, fp in index.fingerprints.items():
        value = fp.jones.map_exponents(lambda e: e // 4).evaluate(-1)
        assert abs(value) == fp.determinant, name
