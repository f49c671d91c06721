from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from knotmosaics.polynomials import (
    LaurentPoly,
    format_poly,
    normalize_alexander,
    parse_poly,
)

polys = st.dictionaries(
    st.integers(-8, 8), st.integers(-50, 50), max_size=6
).map(lambda d: LaurentPoly("q", d))


def test_basic_arithmetic():
    p = LaurentPoly("q", {0: 1, 2: 3})
    q = LaurentPoly("q", {-1: 2, 2: -3})
    assert (p + q).items() == [(-1, 2), (0, 1)]
    assert (p - p).is_zero
    assert (p * LaurentPoly.constant(1, "q")) == p


def test_mul_shift_scale():
    p = LaurentPoly("q", {1: 2, -1: 1})
    assert p.shift(3) == LaurentPoly("q", {4: 2, 2: 1})
    assert p.scale(-2) == LaurentPoly("q", {1: -4, -1: -2})
    assert p * p == LaurentPoly("q", {2: 4, 0: 4, -2: 1})


def test_variable_mismatch():
    with pytest.raises(ValueError):
        LaurentPoly("q", {0: 1, 1: 1}) * LaurentPoly("t", {0: 1, 1: 1})


def test_zero_handling():
    zero = LaurentPoly.zero("q")
    assert zero.is_zero and not zero
    assert format_poly(zero) == "0"
    with pytest.raises(ValueError):
        zero.min_exp


def test_evaluate():
    p = LaurentPoly("t", {-2: 4, 1: 1})
    assert p.evaluate(2) == 3
    assert p.evaluate(-1) == 3
    with pytest.raises(ValueError):
        LaurentPoly("t", {-1: 1}).evaluate(2)


@given(polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p), "q") == p


@given(polys, polys)
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polys, polys)
def test_substitute_inverse_is_ring_map(p, q):
    assert (p * q).substitute_inverse() == p.substitute_inverse() * q.substitute_inverse()
    assert (p + q).substitute_inverse() == p.substitute_inverse() + q.substitute_inverse()


def test_normalize_alexander():
    p = LaurentPoly("t", {-3: -1, -2: 1, -1: -1})
    n = normalize_alexander(p)
    assert n == LaurentPoly("t", {0: 1, 1: -1, 2: 1})
    assert normalize_alexander(n) == n
    assert normalize_alexander(LaurentPoly.zero("t")).is_zero
