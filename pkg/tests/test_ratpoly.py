from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from etaheat.ratpoly import RationalPoly

coeffs = st.dictionaries(st.integers(0, 6), st.fractions(max_denominator=20), max_size=5)


@given(coeffs, coeffs, st.fractions(max_denominator=10))
def test_ring_homomorphism(a, b, x):
    p, q = RationalPoly(a), RationalPoly(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(coeffs)
def test_integral_then_derivative(a):
    p = RationalPoly(a)
    assert p.integral().derivative() == p
    assert p.integral()(0) == 0


def test_reflect_and_degree():
    p = RationalPoly({1: Fraction(1, 8), 3: Fraction(-5, 24)})
    assert p.degree == 3
    assert p.reflect() == -p
    assert RationalPoly().degree == -1 or not RationalPoly()


def test_zero_coefficients_dropped():
    assert RationalPoly({2: 0, 0: 1}) == RationalPoly.constant(1)
    assert RationalPoly.monomial(3, 2).coeff(3) == 2
    assert RationalPoly.monomial(3, 2).coeff(1) == 0
