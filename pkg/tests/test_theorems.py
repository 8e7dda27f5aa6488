import math
from fractions import Fraction

import pytest
import sympy as sp

from etaheat import theorems as thm
from etaheat.specfun import beta_m


def test_relations_hold_symbolically_in_m():
    m = sp.Symbol("m", positive=True)
    tab = thm.coefficient_table(m)
    for name, res in thm.table_relations(tab).items():
        assert sp.simplify(res) == 0, name


@pytest.mark.parametrize("m", [4, 6, 8, 10])
def test_relations_hold_numeric_m(m):
    for name, res in thm.table_relations(thm.coefficient_table(m)).items():
        assert sp.simplify(res) == 0, name


def test_m4_examples():
    tab = thm.coefficient_table(4)
    assert sp.simplify(tab[2] + 1 / (3 * sp.pi)) == 0
    assert sp.simplify(tab[16] + sp.Rational(1, 4)) == 0
    assert tab[3] == 0


def test_c2_extraction():
    for m in (4, 6, 8):
        assert sp.simplify(thm.coefficient_table(m)[2] + beta_m(m).sympy() / 4) == 0


def test_table_rejects_small_m():
    with pytest.raises(ValueError):
        thm.coefficient_table(3)


def test_basis_coefficients():
    tab = thm.coefficient_table(6, symbolic_beta=True)
    b = thm.basis_coefficients(tab[11])
    assert set(b) == {"1", "beta", "pi*beta"}
    assert b["beta"] == 0
    with pytest.raises(ValueError):
        thm.basis_coefficients(thm.BETA ** 2)


@pytest.mark.parametrize("m", [4, 6, 8])
def test_ansatz_equals_theorem_on_ball(m):
    data = thm.ball_geometry(m, Fraction(1, 3))
    a2, a3 = thm.eval_ansatz_eta(data)
    t = thm.eval_theorem12(data, part="boundary")
    assert sp.simplify(a2 - t[2]) == 0
    assert sp.simplify(a3 - t[3]) == 0


@pytest.mark.parametrize("m", [4, 6, 8])
def test_theorem_matches_ball_predictions(m):
    data = thm.ball_geometry(m, Fraction(1))
    t = thm.eval_theorem12(data)
    pred = thm.ball_predictions(m)
    assert sp.simplify(t[2] - pred["a2"]) == 0
    assert sp.simplify(t[3] - pred["a3"]) == 0


def test_theorem11_ball_m4():
    a0, a1, a2 = thm.eval_theorem11(thm.ball_geometry(4))
    assert a0 == sp.Rational(1, 8)
    assert float(a1) == pytest.approx(-0.25505026821046, rel=1e-12)


def test_mellin_round_trip():
    r = thm.mellin_residue(4, 2, 1 / (3 * sp.sqrt(sp.pi)))
    assert sp.simplify(r - 4 / (3 * sp.pi)) == 0
    assert thm.mellin_residue(4, 2, 1 / (3 * math.sqrt(math.pi))) == pytest.approx(4 / (3 * math.pi))
    assert thm.mellin_residue(4, 0, sp.Rational(1, 8), "zeta") == sp.Rational(1, 8)
    with pytest.raises(ValueError):
        thm.mellin_residue(4, 4, 1.0)


def test_ball_boundary_condition_selfadjoint():
    assert thm.check_ball_selfadjoint(4)
