from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from scipy import special

from etaheat.ratpoly import RationalPoly
from etaheat.specfun import (
    beta_m, bessel_i, bessel_j, bessel_pair, bessel_zeros, uniform_bessel_i, uniform_variables, uv_tables,
)


@pytest.mark.parametrize("m, expected", [
    (2, 2 / sp.pi), (3, sp.Rational(1, 2)), (4, 4 / (3 * sp.pi)), (5, sp.Rational(3, 8)), (6, 16 / (15 * sp.pi)),
])
def test_beta_small(m, expected):
    b = beta_m(m)
    assert sp.simplify(b.sympy() - expected) == 0
    assert b.value == pytest.approx(float(sp.gamma(sp.Rational(m, 2)) / (sp.sqrt(sp.pi) * sp.gamma(sp.Rational(m + 1, 2)))))


@pytest.mark.parametrize("p", [0, 1, 2, 5, 20, 60, 150])
def test_bessel_pair_against_scipy(p):
    x = np.linspace(0.01, 200.0, 997)
    jp, jp1 = bessel_pair(p, x)
    assert np.max(np.abs(jp - special.jv(p, x))) < 1e-13
    assert np.max(np.abs(jp1 - special.jv(p + 1, x))) < 1e-13


def test_bessel_j_derivative():
    x = np.linspace(0.5, 50, 101)
    j, dj = bessel_j(3, x)
    assert np.allclose(dj, special.jvp(3, x), atol=1e-13)


def test_bessel_pair_rejects_huge_arguments():
    with pytest.raises(OverflowError):
        bessel_pair(3, np.array([2e4]))


@pytest.mark.parametrize("p", [0, 1, 3, 10, 40])
def test_bessel_zeros_against_scipy(p):
    ours = bessel_zeros(p, 20)
    ref = special.jn_zeros(p, 20)
    assert np.max(np.abs(ours - ref)) < 1e-11


def test_zeros_interlace():
    for p in range(8):
        a, b = bessel_zeros(p, 10), bessel_zeros(p + 1, 10)
        assert np.all(a[:-1] < b[:-1]) and np.all(b[:-1] < a[1:])


@pytest.mark.parametrize("nu, x", [(0.5, 0.3), (2, 1.0), (10, 10.0), (7.5, 25.0)])
def test_bessel_i_against_scipy(nu, x):
    v, d = bessel_i(nu, x)
    assert v == pytest.approx(special.iv(nu, x), rel=1e-13)
    assert d == pytest.approx(special.ivp(nu, x), rel=1e-12)


def test_uv_printed_polynomials():
    tab = uv_tables(2)
    assert tab.u[1] == RationalPoly({1: Fraction(1, 8), 3: Fraction(-5, 24)})
    assert tab.v[1] == RationalPoly({1: Fraction(-3, 8), 3: Fraction(7, 24)})
    assert tab.u[2] == RationalPoly({2: Fraction(9, 128), 4: Fraction(-77, 192), 6: Fraction(385, 1152)})


def test_uv_parity_and_degree():
    tab = uv_tables(10)
    for l in range(11):
        assert tab.u[l].degree == 3 * l
        assert tab.u[l].reflect() == tab.u[l] * (-1) ** l
        assert tab.v[l].reflect() == tab.v[l] * (-1) ** l


def test_uv_bounds():
    with pytest.raises(ValueError):
        uv_tables(13)


def test_uniform_expansion_converges():
    exact = special.iv(10, 10.0)
    errs = [abs(uniform_bessel_i(10, 1.0, L).value / exact - 1) for L in range(4)]
    assert all(b < a for a, b in zip(errs, errs[1:]))
    assert errs[2] < 1e-4


def test_uniform_derivative_and_proxy():
    r = uniform_bessel_i(20, 0.7, 3)
    assert r.derivative == pytest.approx(special.ivp(20, 14.0), rel=1e-6)
    assert abs(r.value - special.iv(20, 14.0)) < 10 * r.error_proxy


def test_uniform_variables():
    t, eta = uniform_variables(1.0)
    assert t == pytest.approx(2 ** -0.5)
    assert eta == pytest.approx(np.sqrt(2) + np.log(1 / (1 + np.sqrt(2))))
