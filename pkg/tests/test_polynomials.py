from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from chromalie import QPolynomial, falling_binomial, interpolate
from chromalie.polynomials import ONE, ZERO, scaled_binomial


def test_trim_and_degree():
    p = QPolynomial.of([1, 2, 0, 0])
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert ZERO.degree == -1 and ZERO.is_zero


def test_arithmetic():
    p = QPolynomial.of([1, 1])
    q = QPolynomial.of([-1, 1])
    assert p * q == QPolynomial.of([-1, 0, 1])
    assert p + q == QPolynomial.of([0, 2])
    assert p - p == ZERO
    assert (-p).eval(2) == -3
    assert p.scale(Fraction(1, 2)).eval(3) == 2


def test_eval_horner():
    p = QPolynomial.of([2, 0, 1])
    assert p.eval(-3) == 11
    assert p.eval(Fraction(1, 2)) == Fraction(9, 4)


@given(st.integers(-20, 20), st.integers(0, 6), st.integers(-5, 5))
def test_falling_binomial_values(q, k, offset):
    assert falling_binomial(offset, k).eval(q) == \
        (comb(q + offset, k) if q + offset >= 0 else
         falling_binomial(offset, k).eval(q))
    # the polynomial identity C(x,k) = x(x-1)..(x-k+1)/k! holds everywhere
    x = Fraction(q + offset)
    prod = Fraction(1)
    for j in range(k):
        prod *= x - j
    from math import factorial
    assert falling_binomial(offset, k).eval(q) == prod / factorial(k)


def test_scaled_binomial():
    p = scaled_binomial(3, 2)
    for q in range(-3, 5):
        assert p.eval(q) == Fraction(3 * q * (3 * q - 1), 2)


def test_linear_coefficient():
    p = QPolynomial.of([5, 7, 9])
    assert p.linear_coefficient == 7
    assert ZERO.linear_coefficient == 0


def test_integer_coefficient_flag():
    assert QPolynomial.of([1, 2]).has_integer_coefficients
    assert not QPolynomial.of([Fraction(1, 2)]).has_integer_coefficients


def test_json_round_trip():
    p = QPolynomial.of([Fraction(1, 2), -3, 0, 5])
    assert QPolynomial.from_json_list(p.to_json_list()) == p


coeff_lists = st.lists(st.fractions(max_denominator=6), max_size=5)


@given(coeff_lists)
def test_interpolation_round_trip(coeffs):
    p = QPolynomial.of(coeffs)
    pts = [(x, p.eval(x)) for x in range(max(len(coeffs), 1))]
    assert interpolate(pts) == p


def test_interpolation_repeated_abscissa():
    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])


def test_one_is_multiplicative_identity():
    p = QPolynomial.of([3, 0, 2])
    assert p * ONE == p and ONE * p == p
    assert p * ZERO == ZERO
