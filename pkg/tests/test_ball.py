import math

import numpy as np
import pytest
from scipy import special

from etaheat.ball import (
    BallConfig, TailBoundError, TruncationError, eigencondition, enumerate_spectrum, heat_trace,
    heat_trace_tail_bound, mode_family, required_n_max, spectral_sum,
)


def scipy_roots(p, kappa, branch, mu_max):
    """Independent root list from a dense scipy sign scan plus brentq."""
    from scipy.optimize import brentq
    f = lambda x: special.jv(p, x) - branch * kappa * special.jv(p + 1, x)
    x = np.linspace(1e-6, mu_max, 40001)
    v = f(x)
    idx = np.nonzero(np.sign(v[:-1]) != np.sign(v[1:]))[0]
    return np.array([brentq(f, x[i], x[i + 1], xtol=1e-14) for i in idx])


@pytest.mark.parametrize("m, n, eps", [(4, 0, 0.5), (4, 3, -0.8), (6, 2, 1.2), (8, 1, 0.3)])
def test_roots_match_dense_scan(m, n, eps):
    mu = 45.0
    spec = enumerate_spectrum(BallConfig(m, eps, mu))
    fam = spec.families[n]
    for branch, ours in ((1, spec.pos_roots[n]), (-1, spec.neg_roots[n])):
        ref = scipy_roots(fam.p, fam.kappa, branch, mu)
        assert ours.size == ref.size
        assert np.max(np.abs(ours - ref)) < 1e-10


def test_eps_zero_gives_bessel_zeros():
    spec = enumerate_spectrum(BallConfig(4, 0.0, 30.0))
    for f, pos, neg in zip(spec.families, spec.pos_roots, spec.neg_roots):
        if pos.size:
            assert np.allclose(pos, special.jn_zeros(f.p, pos.size), atol=1e-11)
        assert pos is neg or np.array_equal(pos, neg)


def test_eigencondition_vanishes(spec4):
    for f, pos, neg in zip(spec4.families, spec4.pos_roots, spec4.neg_roots):
        if pos.size:
            assert np.max(np.abs(eigencondition(f, 1, pos))) < 1e-12
        if neg.size:
            assert np.max(np.abs(eigencondition(f, -1, neg))) < 1e-12


def test_mode_family_data():
    f = mode_family(6, 2, 0.0)
    assert f.p == 4
    assert f.degeneracy == 4 * math.comb(6, 2)
    assert f.weight == 2 * f.degeneracy
    assert mode_family(4, 1, 0.3).kappa == -mode_family(4, 1, -0.3).kappa


@pytest.mark.parametrize("m, eps, msg", [(5, 0.1, "m must be even"), (2, 0.1, "m must be even"),
                                          (4, 2.0, "|epsilon| < (m-1)/2 required")])
def test_parameter_validation(m, eps, msg):
    with pytest.raises(ValueError, match=msg.replace("|", r"\|").replace("(", r"\(").replace(")", r"\)")):
        BallConfig(m, eps, 10.0)


def test_truncation_error():
    need = required_n_max(4, 20.0)
    with pytest.raises(TruncationError):
        enumerate_spectrum(BallConfig(4, 0.1, 20.0, n_max=need - 1))
    enumerate_spectrum(BallConfig(4, 0.1, 20.0, n_max=need))


def test_tail_bound_is_rigorous():
    small = enumerate_spectrum(BallConfig(4, 0.1, 25.0))
    big = enumerate_spectrum(BallConfig(4, 0.1, 60.0))
    t = 0.02
    for kind in ("zeta", "eta"):
        a = heat_trace(small, t, kind, tol=math.inf)
        b = heat_trace(big, t, kind)
        assert abs(a.value - b.value) <= a.tail_bound
        assert a.tail_bound > 0


def test_tail_bound_enforced(spec4):
    with pytest.raises(TailBoundError) as err:
        heat_trace(spec4, 1e-3, "zeta")
    assert err.value.bound > 1e-10


def test_tail_bound_decreasing_in_t():
    cfg = BallConfig(4, 0.1, 40.0)
    vals = [heat_trace_tail_bound(cfg, t, 0) for t in (0.02, 0.05, 0.1)]
    assert vals[0] > vals[1] > vals[2]


def test_weyl_leading_term():
    # zeta trace ~ a0 t^{-2} + a1 t^{-3/2} for m=4 at small t
    spec = enumerate_spectrum(BallConfig(4, 0.0, 120.0))
    t = 0.003
    val = heat_trace(spec, t, "zeta").value
    assert val * t * t == pytest.approx(0.125 - 0.25505026821046 * math.sqrt(t), rel=1e-3)


def test_count_and_rows(spec4):
    rows = list(spec4.rows())
    assert sum(r[2] for r in rows) == spec4.count()
    assert all(r[4] <= 40.0 for r in rows)
    mu, w = spec4.branch_arrays(1)
    assert np.all(np.diff(mu) >= 0)


def test_spectral_sum_converges():
    a = spectral_sum(enumerate_spectrum(BallConfig(4, 0.0, 30.0)), 4.0, "zeta")
    b = spectral_sum(enumerate_spectrum(BallConfig(4, 0.0, 60.0)), 4.0, "zeta")
    assert abs(a.value - b.value) < a.tail_bound
    with pytest.raises(ValueError):
        spectral_sum(enumerate_spectrum(BallConfig(4, 0.0, 10.0)), 1.5, "zeta")


def test_first_order_condition_consistency():
    # F_+^2 = J_p (J_p [1 - eps p/(mu lam)] + (eps/lam) J_p') + O(eps^2), lam = p + 1/2
    mu = np.linspace(2.0, 30.0, 57)
    for n in (0, 2, 5):
        diffs = []
        for eps in (1e-2, 5e-3):
            f = mode_family(4, n, eps)
            lam = f.p + 0.5
            jp, djp = special.jv(f.p, mu), special.jvp(f.p, mu)
            truncated = jp * (jp * (1 - eps * f.p / (mu * lam)) + eps / lam * djp)
            diffs.append(np.max(np.abs(eigencondition(f, 1, mu) ** 2 - truncated)))
        assert diffs[0] / diffs[1] == pytest.approx(4.0, rel=0.05)
