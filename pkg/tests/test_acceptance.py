"""Acceptance criteria, one test and one PASS/FAIL line each.

Run standalone with ``python tests/test_acceptance.py`` or through pytest,
where the lines appear in the "acceptance criteria" summary section.
"""

import math
import random
import sys
import time
from fractions import Fraction

import numpy as np
import sympy as sp
from scipy import special

from etaheat import asymptotics as asy
from etaheat import theorems as thm
from etaheat.ball import BallConfig, enumerate_spectrum, heat_trace
from etaheat.ratpoly import RationalPoly
from etaheat.specfun import beta_m, uniform_bessel_i, uv_tables
from etaheat.verify import VerifyOptions, shift_identity_error, suite_clifford

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # standalone run from another directory
    ACCEPTANCE_LINES = []


def report(number: int, ok: bool, elapsed: float, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  ({elapsed:.2f} s)  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def _is_rational_in_inverse_pi(expr) -> bool:
    x = sp.Symbol("x")
    e = sp.expand(sp.sympify(expr).subs(sp.pi, 1 / x))
    try:
        poly = sp.Poly(e, x)
    except sp.PolynomialError:
        return False
    return poly.degree() <= 1 and all(c.is_rational for c in poly.coeffs())


def test_criterion_1_exact_residues():
    start = time.perf_counter()
    ok = True
    details = []
    for m in (4, 6, 8):
        rep = asy.eta_residues(m)
        pred = thm.ball_predictions(m)
        for n, key in ((2, "a2"), (3, "a3")):
            via_mellin = thm.mellin_residue(m, n, pred[key])
            got = rep.res_eta[m - n]
            same = sp.simplify(got - via_mellin) == 0
            ok &= same and _is_rational_in_inverse_pi(got)
        details.append(f"m={m}: Res eta({m - 2})={rep.res_eta[m - 2]}, Res eta({m - 3})={rep.res_eta[m - 3]}")
    r4 = asy.eta_residues(4).res_eta
    ok &= sp.simplify(r4[2] - 4 / (3 * sp.pi)) == 0 and r4[1] == sp.Rational(-1, 4)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    report(1, ok, elapsed, "; ".join(details) + " (per unit eps)")
    assert ok


def test_criterion_2_constant_table():
    start = time.perf_counter()
    ok = True
    bad = []
    tables = [thm.coefficient_table(m) for m in (4, 6, 8, 10)]
    tables.append(thm.coefficient_table(sp.Symbol("m", positive=True)))
    for tab in tables:
        for name, res in thm.table_relations(tab).items():
            if sp.cancel(res) != 0:
                ok = False
                bad.append(f"m={tab.m}: {name}")
    for m in (4, 6, 8, 10):
        tab = thm.coefficient_table(m)
        b = beta_m(m).sympy()
        ok &= sp.simplify(tab[2] + b / 4) == 0
        ok &= sp.simplify(tab[16] - (1 - sp.pi * (m - 1) * b / 2) / (2 * (m - 2))) == 0
    t4 = thm.coefficient_table(4)
    ok &= sp.simplify(t4[2] + 1 / (3 * sp.pi)) == 0 and sp.simplify(t4[16] + sp.Rational(1, 4)) == 0
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    detail = "relations and c2, c16 exact for m=4,6,8,10 and symbolic m" if not bad else "violated: " + ", ".join(bad)
    report(2, ok, elapsed, detail)
    assert ok


def test_criterion_3_brute_force_eta():
    # Literal setting: m=4, mu_max=60, t in [0.02, 0.2], 5 basis terms.
    start = time.perf_counter()
    target2 = 1 / (3 * math.sqrt(math.pi))
    target3 = -0.125
    a2, a3 = [], []
    for eps in (0.02, 0.04):
        fit = asy.fit_ball_eta(4, eps, 60.0, 0.02, 0.2, samples=40, n_terms=5).fit
        a2.append(fit.coefficient(2))
        a3.append(fit.coefficient(3))
    e2 = [abs(v / target2 - 1) for v in a2]
    e3 = [abs(v / target3 - 1) for v in a3]
    x2 = asy.extrapolate_to_zero((0.02, 0.04), a2)
    x3 = asy.extrapolate_to_zero((0.02, 0.04), a3)
    agree = max(abs(a2[0] / a2[1] - 1), abs(a3[0] / a3[1] - 1))
    elapsed = time.perf_counter() - start
    ok = max(e2) < 0.03 and max(e3) < 0.05 and agree < 0.01 and elapsed < 60
    report(3, ok, elapsed,
           f"a2/eps={a2[0]:.6f},{a2[1]:.6f} (err {max(e2):.2%}, tol 3%); "
           f"a3/eps={a3[0]:.6f},{a3[1]:.6f} (err {max(e3):.2%}, tol 5%); "
           f"extrapolated {x2:.6f}, {x3:.6f}; eps agreement {agree:.2e}")
    assert ok


def test_criterion_4_zeta_side():
    start = time.perf_counter()
    fit = asy.fit_ball_zeta(4, 0.0, 60.0, 0.02, 0.2, samples=40).fit
    a0, a1 = fit.coefficient(0), fit.coefficient(1)
    t0 = 0.125
    t1 = (4 * math.pi) ** -1.5 * (beta_m(4).value - 1) * 2 * math.pi ** 2
    e0, e1 = abs(a0 / t0 - 1), abs(a1 / t1 - 1)
    elapsed = time.perf_counter() - start
    ok = e0 < 0.01 and e1 < 0.03 and elapsed < 60
    report(4, ok, elapsed, f"a0={a0:.6f} (err {e0:.2%}); a1={a1:.6f} vs {t1:.6f} (err {e1:.2%})")
    assert ok


def test_criterion_5_olver_polynomials():
    start = time.perf_counter()
    tab = uv_tables(3)
    exact = (tab.u[1] == RationalPoly({1: Fraction(1, 8), 3: Fraction(-5, 24)})
             and tab.v[1] == RationalPoly({1: Fraction(-3, 8), 3: Fraction(7, 24)})
             and tab.u[2] == RationalPoly({2: Fraction(9, 128), 4: Fraction(-77, 192), 6: Fraction(385, 1152)}))
    direct = special.iv(10, 10.0)
    errs = [abs(uniform_bessel_i(10, 1.0, L).value / direct - 1) for L in range(4)]
    mono = all(b < a for a, b in zip(errs, errs[1:]))
    elapsed = time.perf_counter() - start
    ok = exact and mono and errs[2] < 1e-4 and elapsed < 1.0
    report(5, ok, elapsed, "u1, v1, u2 exact; errors L=0..3: " + ", ".join(f"{e:.2e}" for e in errs))
    assert ok


def test_criterion_6_clifford_engine():
    start = time.perf_counter()
    results = suite_clifford(VerifyOptions(n_trace=1000, n_identity=50, seed=0))
    failed = [r.name for r in results if not r.passed]
    elapsed = time.perf_counter() - start
    ok = not failed and elapsed < 30
    report(6, ok, elapsed, f"{len(results)} checks" + ("" if not failed else "; failed: " + ", ".join(failed)))
    assert ok


def test_criterion_7_shift_identity():
    start = time.perf_counter()
    spec = enumerate_spectrum(BallConfig(4, 0.1, 60.0))
    errs = [shift_identity_error(spec, t) for t in (0.05, 0.1, 0.2)]
    elapsed = time.perf_counter() - start
    ok = max(errs) < 1e-4 and elapsed < 30
    report(7, ok, elapsed, "relative errors " + ", ".join(f"{e:.2e}" for e in errs))
    assert ok


def test_criterion_8_symmetry():
    start = time.perf_counter()
    zero = enumerate_spectrum(BallConfig(4, 0.0, 60.0))
    at_zero = [heat_trace(zero, t, "eta").value for t in (0.05, 0.1, 0.2)]
    plus = enumerate_spectrum(BallConfig(4, 0.1, 60.0))
    minus = enumerate_spectrum(BallConfig(4, -0.1, 60.0))
    odd = abs(heat_trace(plus, 0.1, "eta").value + heat_trace(minus, 0.1, "eta").value)
    elapsed = time.perf_counter() - start
    ok = all(v == 0.0 for v in at_zero) and odd < 1e-9 and elapsed < 30
    report(8, ok, elapsed, f"eta at eps=0: {at_zero}; odd residual {odd:.2e}")
    assert ok


def test_supplementary_brute_force_small_window():
    # Same pipeline on t in [0.002, 0.02] with the cutoff sized for a 1e-10 tail.
    start = time.perf_counter()
    mu = asy.mu_max_for_window(0.002, 4)
    a2, a3 = [], []
    for eps in (0.02, 0.04):
        fit = asy.fit_ball_eta(4, eps, mu, 0.002, 0.02, samples=40, n_terms=5).fit
        a2.append(fit.coefficient(2))
        a3.append(fit.coefficient(3))
    e2 = max(abs(v * 3 * math.sqrt(math.pi) - 1) for v in a2)
    e3 = max(abs(v / -0.125 - 1) for v in a3)
    agree = max(abs(a2[0] / a2[1] - 1), abs(a3[0] / a3[1] - 1))
    elapsed = time.perf_counter() - start
    ok = e2 < 0.03 and e3 < 0.05 and agree < 0.01
    line = (f"supplementary (window [0.002, 0.02], mu_max={mu:g}): {'PASS' if ok else 'FAIL'}  ({elapsed:.2f} s)  "
            f"a2 err {e2:.2e}, a3 err {e3:.2e}, eps agreement {agree:.2e}")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
