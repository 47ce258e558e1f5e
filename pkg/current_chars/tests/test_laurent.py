""" Unit tests for laurent.py module """
import fractions

import pytest

from current_chars.exceptions import ArgumentError
from current_chars.laurent import (
    LaurentPolynomial,
    invariant_hilbert_series,
    q_factorial,
    q_integer,
)


POLY_STRS = [
    ({}, '0'),
    ({0: 1}, '1'),
    ({0: 1, 1: 1, 2: 2}, '1 + u + 2*u^2'),
    ({-1: -1, 0: 3}, '-u^-1 + 3'),
    ({3: -2}, '-2*u^3'),
]

Q_FACTORIALS = [
    (1, {0: 1}),
    (2, {0: 1, 1: 1}),
    (3, {0: 1, 1: 2, 2: 2, 3: 1}),
    (4, {0: 1, 1: 3, 2: 5, 3: 6, 4: 5, 5: 3, 6: 1}),
]

INVARIANT_SERIES = [
    (1, 3, {0: 1, 1: 1, 2: 1, 3: 1}),
    (2, 4, {0: 1, 1: 1, 2: 2, 3: 2, 4: 3}),
    (3, 6, {0: 1, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 7}),
    (4, 0, {0: 1}),
]


@pytest.mark.parametrize('terms, text', POLY_STRS)
def test_str(terms, text):
    assert text == str(LaurentPolynomial(terms))


def test_zero_coefficients_are_dropped():
    poly = LaurentPolynomial({1: 0, 2: 3}) + LaurentPolynomial({2: -3})
    assert poly.is_zero
    assert poly == LaurentPolynomial.zero()


def test_non_integer_coefficients_are_rejected():
    with pytest.raises(ArgumentError):
        LaurentPolynomial({0: 1.5})


def test_arithmetic():
    one_plus_u = LaurentPolynomial({0: 1, 1: 1})
    one_minus_u = LaurentPolynomial({0: 1, 1: -1})
    assert one_plus_u * one_minus_u == LaurentPolynomial({0: 1, 2: -1})
    assert one_plus_u ** 2 == LaurentPolynomial({0: 1, 1: 2, 2: 1})
    assert one_plus_u - 1 == LaurentPolynomial.monomial(1)
    assert 2 * one_plus_u == LaurentPolynomial({0: 2, 1: 2})


def test_shift_invert_truncate():
    poly = LaurentPolynomial({0: 1, 1: 2, 3: 1})
    assert poly.shift(-1) == LaurentPolynomial({-1: 1, 0: 2, 2: 1})
    assert poly.invert() == LaurentPolynomial({0: 1, -1: 2, -3: 1})
    assert poly.invert().invert() == poly
    assert poly.truncate(1) == LaurentPolynomial({0: 1, 1: 2})
    assert poly.degree == 3
    assert poly.low_degree == 0


def test_evaluate():
    assert 3 == LaurentPolynomial({0: 1, 1: 1}).evaluate(2)
    assert fractions.Fraction(1, 2) == LaurentPolynomial.monomial(-1).evaluate(2)


def test_json_round_trip():
    poly = LaurentPolynomial({-2: 5, 0: 1, 7: -3})
    assert {'-2': 5, '0': 1, '7': -3} == poly.to_json()
    assert poly == LaurentPolynomial.from_json(poly.to_json())


def test_from_json_rejects_garbage():
    with pytest.raises(ArgumentError):
        LaurentPolynomial.from_json({'x': 1})


def test_q_integer():
    assert q_integer(3) == LaurentPolynomial({0: 1, 1: 1, 2: 1})
    assert q_integer(0).is_zero


@pytest.mark.parametrize('m, terms', Q_FACTORIALS)
def test_q_factorial(m, terms):
    assert LaurentPolynomial(terms) == q_factorial(m)


@pytest.mark.parametrize('m, max_degree, terms', INVARIANT_SERIES)
def test_invariant_hilbert_series(m, max_degree, terms):
    assert LaurentPolynomial(terms) == invariant_hilbert_series(m, max_degree)


def test_invariant_series_inverts_product():
    # prod (1 - u^i) times its inverse is 1 up to the truncation degree
    m, max_degree = 3, 8
    product = LaurentPolynomial.one()
    for i in range(1, m + 1):
        product = product * LaurentPolynomial({0: 1, i: -1})
    assert (product * invariant_hilbert_series(m, max_degree)).truncate(max_degree) == LaurentPolynomial.one()


def test_invariant_series_negative_degree():
    with pytest.raises(ArgumentError):
        invariant_hilbert_series(2, -1)
