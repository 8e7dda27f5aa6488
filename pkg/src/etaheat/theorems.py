"""Closed-form heat-trace coefficients for operators of Dirac type.

Evaluates the zeta coefficients ``a_0..a_2``, the eta coefficients
``a_0..a_3`` and the universal-constant ansatz for the boundary parts of
``a_2`` and ``a_3`` of the eta trace.  Integrands are assumed constant along
the boundary and in the interior, so integrals reduce to volumes.  Traces use
``Tr{Id} = d_s``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import sympy as sp

from .barnes import spinor_dim
from .clifford import CliffordExpr, GaussianRational, is_selfadjoint_bc, tangential_gamma, trace
from .specfun import beta_m

__all__ = [
    "BETA",
    "CoefficientTable",
    "coefficient_table",
    "table_relations",
    "basis_coefficients",
    "GeometricData",
    "ball_geometry",
    "eval_ansatz_eta",
    "eval_theorem11",
    "eval_theorem12",
    "mellin_residue",
    "ball_predictions",
    "ansatz_terms",
    "check_ball_selfadjoint",
]

BETA = sp.Symbol("beta", positive=True)


@dataclass(frozen=True)
class CoefficientTable:
    """Universal constants ``c_m^1 .. c_m^17``.

    ``c[i]`` are sympy expressions in ``m`` (integer or symbol) and
    ``beta`` (the exact value of ``beta(m)`` or the symbol ``BETA``).
    """

    m: object
    beta: object
    c: dict

    def __getitem__(self, i: int) -> sp.Expr:
        return self.c[i]

    def value(self, i: int) -> float:
        return float(self.c[i])


def coefficient_table(m, symbolic_beta: bool = False) -> CoefficientTable:
    """Build the table of universal constants.

    Parameters
    ----------
    m : int or sympy.Symbol
        Dimension, ``m >= 4`` if numeric.
    symbolic_beta : bool
        Keep ``beta`` as the symbol ``BETA`` even for numeric ``m``.

    Examples
    --------
    >>> coefficient_table(4)[16]
    -1/4
    """
    if isinstance(m, sp.Symbol):
        b = BETA
        mm = m
    else:
        if int(m) != m or m < 4:
            raise ValueError("coefficient table requires m >= 4")
        mm = sp.Integer(int(m))
        b = BETA if symbolic_beta else beta_m(int(m)).sympy()
    pi = sp.pi
    c = {}
    c[1] = (2 - mm) * (b - 1) / 4
    c[2] = -b / 4
    c[3] = sp.Integer(0)
    c[4] = sp.Integer(0)
    c[5] = sp.Integer(0)
    c[6] = -(3 - mm) ** 2 / (4 * (mm - 2))
    c[7] = c[6]
    c[8] = -(3 - mm) / (4 * (mm - 2))
    c[9] = -c[8]
    c[10] = -2 * (3 - mm) / (4 * (mm - 2))
    c[13] = (mm - 3) * (mm - 1) * (1 - pi * b / 2) / (2 * (mm - 2))
    c[11] = c[13] - (mm - 1) / 6
    c[12] = (3 - mm) * (1 - sp.Rational(3, 4) * pi * b) / 3
    c[14] = sp.Integer(0)
    c[16] = (1 - pi * (mm - 1) * b / 2) / (2 * (mm - 2))
    c[15] = (mm - 3) / (1 - mm) * c[16]
    c[17] = sp.Integer(0)
    c = {k: sp.together(sp.expand(v)) for k, v in sorted(c.items())}
    return CoefficientTable(m, b, c)


def table_relations(table: CoefficientTable) -> dict[str, sp.Expr]:
    """Residuals of the linear relations between the constants (all should vanish)."""
    c, m = table.c, sp.sympify(table.m)
    return {
        "c3 = 0": c[3],
        "c6 - c7 + (m-1)c8 + (m-1)c9 = 0": c[6] - c[7] + (m - 1) * c[8] + (m - 1) * c[9],
        "c6 + c7 + (m-3)c8 - (m-3)c9 + 2(m-3)c4 = 0":
            c[6] + c[7] + (m - 3) * c[8] - (m - 3) * c[9] + 2 * (m - 3) * c[4],
        "c6 + c7 - (m-3)c8 + (m-3)c9 + 2(m-3)c10 = 0":
            c[6] + c[7] - (m - 3) * c[8] + (m - 3) * c[9] + 2 * (m - 3) * c[10],
        "c5 = 0": c[5],
        "c6 = c7": c[6] - c[7],
        "c8 = -c9": c[8] + c[9],
        "c6 - c7 - (m-1)c8 - (m-1)c9 = 0": c[6] - c[7] - (m - 1) * c[8] - (m - 1) * c[9],
        "c14 = 0": c[14],
        "c17 = 0": c[17],
        "c15 = (m-3)/(1-m) c16": c[15] - (m - 3) / (1 - m) * c[16],
    }


def basis_coefficients(expr, beta=BETA) -> dict[str, sp.Rational]:
    """Split an expression affine in ``beta`` and ``pi*beta`` into rational coefficients.

    Returns ``{"1": r0, "beta": r1, "pi*beta": r2}``; raises if other
    dependence remains.
    """
    e = sp.expand(sp.sympify(expr))
    poly = sp.Poly(e, beta, sp.pi)
    out = {"1": sp.Integer(0), "beta": sp.Integer(0), "pi*beta": sp.Integer(0)}
    keys = {(0, 0): "1", (1, 0): "beta", (1, 1): "pi*beta"}
    for monom, coeff in poly.terms():
        if monom not in keys or not coeff.is_rational:
            raise ValueError(f"expression {expr} is not a rational combination of 1, beta, pi*beta")
        out[keys[monom]] = coeff
    return out


def _tr(e: CliffordExpr) -> sp.Expr:
    """Matrix trace ``d_s * trace(e)`` as a sympy number."""
    g = trace(e) * spinor_dim(e.m)
    return sp.Rational(g.re.numerator, g.re.denominator) + sp.I * sp.Rational(g.im.numerator, g.im.denominator)


def _num(x) -> sp.Expr:
    if isinstance(x, GaussianRational):
        return sp.Rational(x.re.numerator, x.re.denominator) + sp.I * sp.Rational(x.im.numerator, x.im.denominator)
    if isinstance(x, Fraction):
        return sp.Rational(x.numerator, x.denominator)
    if isinstance(x, float):
        return sp.nsimplify(x) if x == int(x) else sp.Float(x)
    return sp.sympify(x)


@dataclass(frozen=True)
class GeometricData:
    """Position-independent geometric input.

    Attributes
    ----------
    psi_P, psi_A : CliffordExpr
        Zeroth-order parts of the interior and boundary operators.
    psi_P_normal : CliffordExpr
        Inward normal derivative of ``psi_P`` on the boundary.
    psi_P_derivs : tuple of CliffordExpr
        Interior covariant derivatives ``psi_P;i`` (zero for constant data).
    W : dict
        ``{(i, j): CliffordExpr}`` curvature endomorphisms, flat by default.
    """

    m: int
    psi_P: CliffordExpr
    psi_A: CliffordExpr
    L_trace: object = 0
    f: object = 1
    f_normal: object = 0
    tau: object = 0
    psi_P_normal: CliffordExpr | None = None
    psi_P_derivs: tuple = ()
    W: dict = field(default_factory=dict)
    vol_M: object = 1
    vol_boundary: object = 1

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("m must be >= 2")
        for e in (self.psi_P, self.psi_A, self.psi_P_normal, *self.psi_P_derivs, *self.W.values()):
            if e is not None and e.m != self.m:
                raise ValueError("dimension mismatch between data and expressions")
        if self.psi_P_normal is None:
            object.__setattr__(self, "psi_P_normal", CliffordExpr.zero(self.m))
        if self.psi_P_derivs and len(self.psi_P_derivs) != self.m:
            raise ValueError("psi_P_derivs needs one entry per direction")
        if not (sp.sympify(self.vol_M) > 0 and sp.sympify(self.vol_boundary) > 0):
            raise ValueError("volumes must be positive")


def ball_geometry(m: int, epsilon=Fraction(1)) -> GeometricData:
    """Unit ball with ``psi_P = 0``, ``psi_A = eps*g_m + (m-1)/2 Id``, ``f = 1``."""
    eps = Fraction(epsilon)
    L = m - 1
    psi_A = CliffordExpr.gamma(m, m, eps) + CliffordExpr.identity(m, Fraction(L, 2))
    half = sp.Rational(m, 2)
    vol_ball = sp.pi ** half / sp.gamma(half + 1)
    vol_sphere = 2 * sp.pi ** half / sp.gamma(half)
    return GeometricData(m, CliffordExpr.zero(m), psi_A, L_trace=L, vol_M=vol_ball, vol_boundary=vol_sphere)


def _tangential_sum(m, make):
    out = CliffordExpr.zero(m)
    for a in range(1, m):
        out = out + make(a)
    return out


def ansatz_terms(data: GeometricData) -> dict[int, CliffordExpr | None]:
    """Clifford integrands multiplying ``c_m^i`` in the boundary part of ``a_3``.

    Scalar factors (``f``, ``f_normal``, ``L_aa``) are applied separately;
    the tangential-divergence terms 14 and 17 vanish for constant data.
    """
    m = data.m
    P, A, gm = data.psi_P, data.psi_A, CliffordExpr.gamma(m, m)
    gT = lambda a: tangential_gamma(a, m)  # noqa: E731
    g = lambda a: CliffordExpr.gamma(a, m)  # noqa: E731
    return {
        3: gm * P * P,
        4: _tangential_sum(m, lambda a: gm * gT(a) * P * gT(a) * P),
        5: gm * A * A,
        6: P * A,
        7: gm * P * gm * A,
        8: _tangential_sum(m, lambda a: gT(a) * P * gT(a) * A),
        9: _tangential_sum(m, lambda a: g(a) * P * g(a) * A),
        10: _tangential_sum(m, lambda a: gm * gT(a) * A * gT(a) * A),
        11: data.psi_P_normal,
        12: P,
        13: P,
        14: None,
        15: gm * A,
        16: gm * A,
        17: None,
    }


def eval_ansatz_eta(data: GeometricData, table: CoefficientTable | None = None) -> tuple[sp.Expr, sp.Expr]:
    """Boundary parts of ``a_2`` and ``a_3`` of the eta trace from the universal ansatz."""
    m = data.m
    tab = coefficient_table(m) if table is None else table
    c = tab.c
    f, fn, L = _num(data.f), _num(data.f_normal), _num(data.L_trace)
    gm = CliffordExpr.gamma(m, m)
    a2 = (4 * sp.pi) ** (-sp.Rational(m - 1, 2)) * data.vol_boundary * f * (
        c[1] * _tr(data.psi_P) + c[2] * _tr(gm * data.psi_A))
    scalar = {3: f, 4: f, 5: f, 6: f, 7: f, 8: f, 9: f, 10: f, 11: f, 12: f * L,
              13: fn, 15: f * L, 16: fn}
    total = sp.Integer(0)
    for i, e in ansatz_terms(data).items():
        if e is None:
            continue
        total += c[i] * scalar[i] * _tr(e)
    a3 = (4 * sp.pi) ** (-sp.Rational(m, 2)) * data.vol_boundary * total
    return sp.simplify(a2), sp.simplify(a3)


def _E(data: GeometricData) -> CliffordExpr:
    m = data.m
    P = data.psi_P
    g = [CliffordExpr.gamma(i, m) for i in range(1, m + 1)]
    E = CliffordExpr.zero(m)
    if data.psi_P_derivs:
        for i in range(m):
            d = data.psi_P_derivs[i]
            E = E + Fraction(1, 2) * (d * g[i] - g[i] * d)
    E = E - P * P
    for i in range(m):
        s = P * g[i] + g[i] * P
        E = E - Fraction(1, 4) * (s * s)
    for (i, j), w in data.W.items():
        E = E - Fraction(1, 2) * (g[i - 1] * g[j - 1] * w)
    return E


def eval_theorem11(data: GeometricData) -> tuple[sp.Expr, sp.Expr, sp.Expr]:
    """Zeta coefficients ``a_0``, ``a_1``, ``a_2`` for scalar smearing ``f``."""
    m = data.m
    if m < 3:
        raise ValueError("a_2 formula requires m >= 3")
    ds = spinor_dim(m)
    b = beta_m(m).sympy()
    pi = sp.pi
    f, fn, L, tau = _num(data.f), _num(data.f_normal), _num(data.L_trace), _num(data.tau)
    a0 = (4 * pi) ** (-sp.Rational(m, 2)) * data.vol_M * f * ds
    a1 = (4 * pi) ** (-sp.Rational(m - 1, 2)) * sp.Rational(1, 4) * (b - 1) * data.vol_boundary * f * ds
    interior = f * (tau / 6 * ds - tau / 4 * ds + _tr(_E(data)))
    boundary = (sp.Rational(1, 3) * (1 - sp.Rational(3, 4) * pi * b) * L * f
                - sp.Rational(m - 1, 2 * (m - 2)) * (1 - pi * b / 2) * fn) * ds
    a2 = (4 * pi) ** (-sp.Rational(m, 2)) * (data.vol_M * interior + data.vol_boundary * boundary)
    return sp.simplify(a0), sp.simplify(a1), sp.simplify(a2)


def eval_theorem12(data: GeometricData, part: str = "full") -> tuple[sp.Expr, ...]:
    """Eta coefficients ``a_0 .. a_3`` for scalar smearing ``f``.

    ``part="boundary"`` returns only boundary contributions of ``a_2``, ``a_3``
    (``a_0``, ``a_1`` are then zero).  The interior ``a_3`` integrand assumes
    constant data, so its total-divergence bracket vanishes.
    """
    m = data.m
    if m < 4:
        raise ValueError("a_3 formula requires m >= 4")
    ds = spinor_dim(m)
    b = beta_m(m).sympy()
    pi = sp.pi
    M = sp.Integer(m)
    f, fn, L, tau = _num(data.f), _num(data.f_normal), _num(data.L_trace), _num(data.tau)
    P, A, Pn = data.psi_P, data.psi_A, data.psi_P_normal
    gm = CliffordExpr.gamma(m, m)
    g = [CliffordExpr.gamma(i, m) for i in range(1, m + 1)]
    gT = [tangential_gamma(a, m) for a in range(1, m)]
    k_m2 = (4 * pi) ** (-M / 2)
    a0 = sp.Integer(0)
    a1 = k_m2 * (1 - M) * data.vol_M * f * _tr(P)
    a2 = (4 * pi) ** (-(M - 1) / 2) * data.vol_boundary * f * (
        (2 - M) / 4 * (b - 1) * _tr(P) - b / 4 * _tr(gm * A))

    # interior integrand of a_3 (divergence bracket dropped for constant data)
    inner = tau * _tr(P)
    for (i, j), w in data.W.items():
        inner += 6 * _tr(g[i - 1] * g[j - 1] * w * P)
    if data.psi_P_derivs:
        for i in range(m):
            inner += -6 * _tr(P * data.psi_P_derivs[i] * g[i])
    inner += (4 - M) * _tr(P * P * P)
    for i in range(m):
        inner += 3 * _tr(P * P * g[i] * P * g[i])
    interior = -sp.Rational(1, 12) * k_m2 * data.vol_M * f * (3 - M) * inner

    tsum_PA = sum((_tr(gT[a] * P * gT[a] * A) for a in range(m - 1)), sp.Integer(0))
    gsum_PA = sum((_tr(g[a] * P * g[a] * A) for a in range(m - 1)), sp.Integer(0))
    tsum_AA = sum((_tr(gm * gT[a] * A * gT[a] * A) for a in range(m - 1)), sp.Integer(0))
    bnd = ((M - 3) * (M - 1) / (2 * (M - 2)) * (1 - pi * b / 2) * fn * _tr(P)
           - f * (3 - M) ** 2 / (4 * (M - 2)) * (_tr(P * A) + _tr(gm * P * gm * A))
           + f * (3 - M) / 3 * (1 - sp.Rational(3, 4) * pi * b) * L * _tr(P)
           + f * ((M - 3) * (M - 1) / (2 * (M - 2)) * (1 - pi * b / 2) - (M - 1) / 6) * _tr(Pn)
           - f * (3 - M) / (4 * (M - 2)) * (tsum_PA - gsum_PA + 2 * tsum_AA)
           + 1 / (2 * (M - 2)) * (1 - pi * (M - 1) * b / 2)
           * ((M - 3) / (1 - M) * f * L + fn) * _tr(gm * A))
    boundary3 = k_m2 * data.vol_boundary * bnd
    if part == "boundary":
        return sp.Integer(0), sp.Integer(0), sp.simplify(a2), sp.simplify(boundary3)
    if part != "full":
        raise ValueError("part must be 'full' or 'boundary'")
    return a0, sp.simplify(a1), sp.simplify(a2), sp.simplify(interior + boundary3)


def mellin_residue(m: int, n: int, a_n, kind: str = "eta"):
    """Residue of the eta function at ``m-n`` or the zeta function at ``(m-n)/2``.

    ``Res eta(m-n) = 2 a_n / Gamma((m-n+1)/2)`` and
    ``Res zeta((m-n)/2) = a_n / Gamma((m-n)/2)``.  Works on sympy expressions
    and on floats.
    """
    if n >= m:
        raise ValueError("Mellin relation used for n < m only")
    exact = isinstance(a_n, (sp.Basic, int, Fraction))
    if kind == "eta":
        if exact:
            return sp.simplify(2 * sp.sympify(a_n) / sp.gamma(sp.Rational(m - n + 1, 2)))
        return 2.0 * a_n / math.gamma((m - n + 1) / 2)
    if kind == "zeta":
        if exact:
            return sp.simplify(sp.sympify(a_n) / sp.gamma(sp.Rational(m - n, 2)))
        return a_n / math.gamma((m - n) / 2)
    raise ValueError("kind must be 'eta' or 'zeta'")


def ball_predictions(m: int) -> dict[str, sp.Expr]:
    """Closed-form ``a_2``, ``a_3`` of the ball eta trace per unit epsilon.

    ``a_2 = -c2 d_s sqrt(pi) / (2^(m-2) Gamma(m/2))`` and
    ``a_3 = c16 (m-3) d_s / (2^(m-1) Gamma(m/2))``.
    """
    if m % 2 or m < 4:
        raise ValueError("m must be even >= 4")
    tab = coefficient_table(m)
    ds = spinor_dim(m)
    g = sp.gamma(sp.Rational(m, 2))
    a2 = -tab[2] * ds * sp.sqrt(sp.pi) / (2 ** (m - 2) * g)
    a3 = tab[16] * (m - 3) * ds / (2 ** (m - 1) * g)
    return {"a2": sp.simplify(a2), "a3": sp.simplify(a3)}


def check_ball_selfadjoint(m: int, epsilon=Fraction(1)) -> bool:
    data = ball_geometry(m, epsilon)
    return is_selfadjoint_bc(data.psi_A, data.L_trace)
