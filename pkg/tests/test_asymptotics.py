import math
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from etaheat import asymptotics as asy
from etaheat.theorems import ball_predictions


def test_basis_exponents():
    assert asy.basis_exponent(0, 4, "zeta") == Fraction(-2)
    assert asy.basis_exponent(3, 4, "zeta") == Fraction(-1, 2)
    assert asy.basis_exponent(2, 4, "eta") == Fraction(-3, 2)


def test_fit_recovers_synthetic_series():
    t = asy.log_samples(0.01, 0.1, 30)
    coeffs = [0.3, -0.7, 1.1, 0.2, -0.05]
    y = sum(c * t ** ((n - 4) / 2) for n, c in enumerate(coeffs))
    fit = asy.fit_heat_expansion(t, y, 4, "zeta", 5)
    assert np.allclose(fit.coefficients, coeffs, rtol=1e-9, atol=1e-10)
    assert fit.residual < 1e-12
    assert fit.coefficient(1) == pytest.approx(-0.7)


def test_fit_with_log_term():
    t = asy.log_samples(0.002, 0.02, 40)
    y = 0.125 * t ** -2 - 0.25 * t ** -1.5 + 0.1 * t ** -1 + 0.02 * t ** -0.5 - 0.14 * np.log(t)
    fit = asy.fit_heat_expansion(t, y, 4, "zeta", 4, log_powers=(0.0,))
    assert fit.log_coefficients[0] == pytest.approx(-0.14, rel=1e-8)
    assert fit.as_dict()["basis"][-1] == "ln(t)"


def test_fit_errors():
    t = asy.log_samples(0.01, 0.1, 5)
    with pytest.raises(asy.FitError):
        asy.fit_heat_expansion(t, t, 4, "zeta", 7)
    with pytest.raises(asy.FitError):
        asy.fit_heat_expansion(t, t, 4, "zeta", 5)
    tt = asy.log_samples(0.01, 0.0101, 20)
    with pytest.raises(asy.FitError, match="condition"):
        asy.fit_heat_expansion(tt, tt ** -2, 4, "zeta", 6)


def test_mu_max_for_window_meets_tolerance():
    from etaheat.ball import BallConfig, heat_trace_tail_bound
    mu = asy.mu_max_for_window(0.01, 4)
    cfg = BallConfig(4, 0.0, mu)
    assert 2 * heat_trace_tail_bound(cfg, 0.01, 1) <= 1e-10


@pytest.mark.parametrize("m", [4, 6, 8])
def test_eta_residues_equal_closed_form(m):
    rep = asy.eta_residues(m)
    pred = ball_predictions(m)
    assert sp.simplify(rep.a2 - pred["a2"]) == 0
    assert sp.simplify(rep.a3 - pred["a3"]) == 0


def test_m4_residues():
    rep = asy.eta_residues(4)
    assert sp.simplify(rep.res_eta[2] - 4 / (3 * sp.pi)) == 0
    assert rep.res_eta[1] == sp.Rational(-1, 4)


def test_b_terms_against_direct_sum():
    bt = asy.b_terms(4, 4.0)
    assert bt.b0 == pytest.approx(asy.b0_direct(4, 4.0), abs=max(bt.tail_bound, 1e-12) * 10)


def test_b0_pole_strength_from_continuation():
    # B_0 = d_s/2 G(s) (zeta_B(s+1) - zeta_B(s+2)/2); symmetric sampling around s = m-2
    from etaheat.barnes import barnes_zeta, spinor_dim
    m, d, a = 4, 3, 1
    rep = asy.eta_residues(m)

    def b0(s):
        return 0.5 * spinor_dim(m) * asy.b_prefactor(s) * (barnes_zeta(d, a, s + 1) - 0.5 * barnes_zeta(d, a, s + 2))

    h = 1e-4
    est = h * (b0(m - 2 + h) - b0(m - 2 - h)) / 2
    assert est == pytest.approx(float(rep.res_b0[m - 2]), rel=1e-6)


def test_extrapolate_linear_in_eps_squared():
    eps = [0.02, 0.04]
    vals = [1 + 3 * e * e for e in eps]
    assert asy.extrapolate_to_zero(eps, vals) == pytest.approx(1.0)


def test_ball_eta_fit_small_window():
    res = asy.fit_ball_eta(4, 0.02, 152, 0.002, 0.02, 40)
    assert res.fit.coefficient(2) == pytest.approx(1 / (3 * math.sqrt(math.pi)), rel=1e-3)
    assert res.fit.coefficient(3) == pytest.approx(-0.125, rel=5e-3)
    assert res.tail_bound < 1e-8


def test_ball_eta_fit_requires_nonzero_eps():
    with pytest.raises(ValueError):
        asy.fit_ball_eta(4, 0.0, 40, 0.02, 0.2)


def test_eta_fit_at_eps_zero_vanishes():
    from etaheat.ball import BallConfig, enumerate_spectrum
    spec = enumerate_spectrum(BallConfig(4, 0.0, 60.0))
    t = asy.log_samples(0.02, 0.2, 40)
    vals, _ = asy.sample_traces(spec, t, "eta")
    fit = asy.fit_heat_expansion(t, vals, 4, "eta", 5)
    assert max(abs(c) for c in fit.coefficients) < 1e-10
