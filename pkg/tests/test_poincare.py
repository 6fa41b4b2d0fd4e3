import json

import pytest
from hypothesis import given, settings, strategies as st

from oracles import low_degree_count, subset_sum_polynomial
from qubitgroups.cartan import CartanClass, CartanGroup, catalog, dimension, parse_group
from qubitgroups.poincare import (
    IntPolynomial,
    betti,
    binomial_product,
    factor_degrees,
    poincare_polynomial,
    polynomials_equal,
)

A, B, C, D = CartanClass

# (1+t^3)(1+t^5)(1+t^7) expanded by hand
SO6 = [1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1]


def test_int_polynomial_canonical_form():
    assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert IntPolynomial((0, 0)).coefficients == ()
    assert IntPolynomial().degree == -1
    assert IntPolynomial((0, 0, 3)).degree == 2


def test_int_polynomial_ops():
    p = IntPolynomial((1, 1))
    assert (p * p).coefficients == (1, 2, 1)
    assert p.times_binomial(3).coefficients == (1, 1, 0, 1, 1)
    assert (p + IntPolynomial((0, 0, 5))).coefficients == (1, 1, 5)
    assert p(10) == 11
    assert p[7] == 0
    assert str(IntPolynomial((1, 0, 0, 2))) == "1 + 2*t^3"


def test_json_round_trip_with_big_coefficients():
    p = poincare_polynomial(CartanGroup(A, 63))
    data = json.loads(json.dumps(p.to_json()))
    assert all(isinstance(x, str) for x in data)
    assert IntPolynomial.from_json(data) == p
    assert max(p.coefficients) > 2**53


def test_examples():
    assert poincare_polynomial(CartanGroup(A, 1)).coefficients == (1, 0, 0, 1)
    assert list(poincare_polynomial(CartanGroup(D, 3)).coefficients) == SO6
    so91 = poincare_polynomial(parse_group("SO(91)"))
    assert factor_degrees(parse_group("SO(91)")) == list(range(3, 180, 4))
    assert so91.degree == 4095


def test_betti_examples():
    su64, so91 = parse_group("SU(64)"), parse_group("SO(91)")
    assert betti(su64, 0) == 1
    assert betti(su64, 5) == low_degree_count(factor_degrees(su64), 5) == 1
    assert betti(so91, 5) == low_degree_count(factor_degrees(so91), 5) == 0
    assert betti(CartanGroup(A, 3), 8) == 1
    assert betti(su64, 10**6) == 0
    with pytest.raises(ValueError):
        betti(su64, -1)


@pytest.mark.parametrize("q", range(0, 30))
def test_low_betti_against_enumeration(q):
    for g in (parse_group("SU(64)"), parse_group("SO(91)")):
        assert betti(g, q) == low_degree_count(factor_degrees(g), q)


def test_polynomials_equal():
    su4 = poincare_polynomial(CartanGroup(A, 3))
    assert polynomials_equal(su4, poincare_polynomial(CartanGroup(D, 3))).equal
    one = poincare_polynomial(CartanGroup(A, 1))
    assert polynomials_equal(one, one).equal
    r = polynomials_equal(poincare_polynomial(CartanGroup(A, 63)), poincare_polynomial(CartanGroup(B, 45)))
    assert (r.equal, r.degree, r.a, r.b) == (False, 5, 1, 0)


def test_polynomials_equal_different_lengths():
    r = polynomials_equal(IntPolynomial((1,)), IntPolynomial((1, 0, 2)))
    assert (r.equal, r.degree, r.a, r.b) == (False, 2, 0, 2)


@pytest.mark.parametrize("g", list(catalog(8)), ids=str)
def test_engine_matches_subset_oracle(g):
    assert list(poincare_polynomial(g).coefficients) == subset_sum_polynomial(factor_degrees(g))


@given(st.lists(st.integers(0, 40), max_size=9))
def test_packed_product_matches_schoolbook(degrees):
    expected = IntPolynomial.one()
    for m in degrees:
        expected = expected * IntPolynomial((1,) + (0,) * (m - 1) + (1,)) if m else expected * IntPolynomial((2,))
    assert binomial_product(degrees) == expected


@given(st.lists(st.integers(1, 60), max_size=12))
def test_packed_product_matches_shifted_adds(degrees):
    expected = IntPolynomial.one()
    for m in degrees:
        expected = expected.times_binomial(m)
    assert binomial_product(degrees) == expected


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(CartanClass)), st.integers(3, 120))
def test_polynomial_invariants(cls, rank):
    g = CartanGroup(cls, rank)
    p = poincare_polynomial(g)
    c = p.coefficients
    assert p.degree == dimension(g)
    assert p(1) == 2**rank
    assert p(-1) == 0
    assert c == c[::-1]
    assert c[1] == c[2] == 0
    assert min(c) >= 0
