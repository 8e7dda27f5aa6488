"""Small-t heat-trace coefficients: numerical extraction and the analytic residue route.

The zeta trace behaves like ``sum_n a_n t^{(n-m)/2}`` and the eta trace like
``sum_n a_n t^{(n-m-1)/2}``.  Coefficients are extracted by weighted least
squares on sampled traces; the analytic route evaluates the residues of the
two leading terms ``B_0``, ``B_{-1}`` of the ball eta function through Barnes
zeta residues and converts them with the Mellin relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np
import sympy as sp

from .ball import BallConfig, enumerate_spectrum, heat_trace, heat_trace_tail_bound
from .barnes import barnes_partial, barnes_residue, spinor_dim

__all__ = [
    "FitError",
    "AsymptoticFit",
    "basis_exponent",
    "fit_heat_expansion",
    "log_samples",
    "mu_max_for_window",
    "sample_traces",
    "EtaFitResult",
    "fit_ball_eta",
    "fit_ball_zeta",
    "extrapolate_to_zero",
    "BTerms",
    "b_prefactor",
    "b_terms",
    "b0_direct",
    "EtaResidueReport",
    "eta_residues",
]


class FitError(ValueError):
    """Raised for ill-conditioned or under-determined fits."""


def basis_exponent(n: int, m: int, kind: str) -> Fraction:
    """Exponent of ``t`` multiplying ``a_n``."""
    if kind == "zeta":
        return Fraction(n - m, 2)
    if kind == "eta":
        return Fraction(n - m - 1, 2)
    raise ValueError("kind must be 'zeta' or 'eta'")


@dataclass(frozen=True)
class AsymptoticFit:
    """Least-squares heat-trace coefficients.

    ``coefficients[k]`` multiplies ``t**powers[k]`` and is the coefficient
    ``a_{indices[k]}``.  ``log_coefficients[k]`` multiplies
    ``t**log_powers[k] * ln t``.
    """

    m: int
    kind: str
    indices: tuple
    powers: tuple
    coefficients: tuple
    window: tuple
    residual: float
    condition: float
    n_samples: int
    log_powers: tuple = ()
    log_coefficients: tuple = ()

    def coefficient(self, n: int) -> float:
        """``a_n``; zero for indices outside the fitted basis is not assumed."""
        try:
            return self.coefficients[self.indices.index(n)]
        except ValueError:
            raise KeyError(f"a_{n} not in the fitted basis {self.indices}") from None

    def scaled(self, factor: float) -> AsymptoticFit:
        return AsymptoticFit(self.m, self.kind, self.indices, self.powers,
                             tuple(c * factor for c in self.coefficients), self.window,
                             self.residual, self.condition, self.n_samples, self.log_powers,
                             tuple(c * factor for c in self.log_coefficients))

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "kind": self.kind,
            "basis": [f"t^({p})" for p in self.powers] + [("ln(t)" if p == 0 else f"t^({p:g})*ln(t)") for p in self.log_powers],
            "indices": list(self.indices),
            "coefficients": list(self.coefficients),
            "log_coefficients": list(self.log_coefficients),
            "window": list(self.window),
            "residual": self.residual,
            "condition": self.condition,
            "n_samples": self.n_samples,
        }


def fit_heat_expansion(t, values, m: int, kind: str, n_terms: int, first: int = 0,
                       log_powers: Sequence[float] = (), max_condition: float = 1e12,
                       weighting: str = "relative") -> AsymptoticFit:
    """Fit ``a_first .. a_{first+n_terms-1}`` to sampled traces.

    Parameters
    ----------
    t, values : array_like
        Sample times and trace values.
    m : int
        Dimension.
    kind : {"zeta", "eta"}
        Selects the exponents ``(n-m)/2`` or ``(n-m-1)/2``.
    n_terms : int
        Number of power terms, at most 6.
    first : int
        Index of the first coefficient; lower ones are taken as zero.
    log_powers : sequence of float
        Extra basis functions ``t**q * ln t``.
    max_condition : float
        Refuse fits whose column-equilibrated design matrix is worse conditioned.
    weighting : {"relative", "uniform"}
        Relative weights ``1/|value|`` balance the rapidly varying samples.

    Returns
    -------
    AsymptoticFit
    """
    t = np.asarray(t, dtype=float)
    y = np.asarray(values, dtype=float)
    if t.shape != y.shape or t.ndim != 1:
        raise FitError("t and values must be 1-d arrays of equal length")
    if not 1 <= n_terms <= 6:
        raise FitError("n_terms must lie in 1..6")
    n_cols = n_terms + len(log_powers)
    if t.size < n_cols + 1:
        raise FitError(f"need at least {n_cols + 1} samples for {n_cols} basis functions")
    if np.any(t <= 0):
        raise FitError("sample times must be positive")
    indices = tuple(range(first, first + n_terms))
    powers = tuple(basis_exponent(n, m, kind) for n in indices)
    cols = [t ** float(p) for p in powers] + [t ** float(q) * np.log(t) for q in log_powers]
    A = np.stack(cols, axis=1)
    if weighting == "relative" and np.any(y != 0):
        floor = np.max(np.abs(y)) * 1e-300
        w = 1.0 / np.maximum(np.abs(y), floor)
    elif weighting in ("relative", "uniform"):
        w = np.ones_like(y)
    else:
        raise FitError("weighting must be 'relative' or 'uniform'")
    Aw = A * w[:, None]
    yw = y * w
    scale = np.linalg.norm(Aw, axis=0)
    An = Aw / scale
    cond = float(np.linalg.cond(An))
    if not cond <= max_condition:
        raise FitError(f"design matrix condition {cond:.3g} exceeds {max_condition:.3g}")
    sol, *_ = np.linalg.lstsq(An, yw, rcond=None)
    coef = sol / scale
    fitted = A @ coef
    nz = y != 0
    if np.any(nz):
        residual = float(np.max(np.abs(fitted[nz] - y[nz]) / np.abs(y[nz])))
    else:
        residual = float(np.max(np.abs(fitted))) if fitted.size else 0.0
    return AsymptoticFit(m, kind, indices, powers, tuple(float(c) for c in coef[:n_terms]),
                         (float(t.min()), float(t.max())), residual, cond, int(t.size),
                         tuple(log_powers), tuple(float(c) for c in coef[n_terms:]))


def log_samples(t_min: float, t_max: float, count: int) -> np.ndarray:
    """Logarithmically spaced sample times."""
    if not 0 < t_min < t_max:
        raise ValueError("need 0 < t_min < t_max")
    if count < 2:
        raise ValueError("need at least two samples")
    return np.geomspace(t_min, t_max, count)


def mu_max_for_window(t_min: float, m: int = 4, tol: float = 1e-10) -> float:
    """Smallest integer cutoff whose heat-trace tail bounds at ``t_min`` are below ``tol``."""
    mu = math.ceil(math.sqrt(20.0 / t_min))
    while True:
        cfg = BallConfig(m, 0.0, mu)
        worst = max(heat_trace_tail_bound(cfg, t_min, 0), heat_trace_tail_bound(cfg, t_min, 1))
        if 2.0 * worst <= tol:
            return float(mu)
        mu = math.ceil(mu * 1.05)


def sample_traces(spectrum, ts, kind: str, tol: float = 1e-10) -> tuple[np.ndarray, float]:
    """Heat traces at every ``t``; returns values and the largest tail bound."""
    vals = []
    worst = 0.0
    for t in ts:
        tv = heat_trace(spectrum, float(t), kind, tol=tol)
        vals.append(tv.value)
        worst = max(worst, tv.tail_bound)
    return np.array(vals), worst


class EtaFitResult(NamedTuple):
    fit: AsymptoticFit      # coefficients per unit epsilon
    tail_bound: float


def fit_ball_eta(m: int, epsilon: float, mu_max: float, t_min: float, t_max: float,
                 samples: int = 40, n_terms: int = 5, first: int = 2,
                 weighting: str = "relative", tol: float = 1e-10) -> EtaFitResult:
    """Fit the antisymmetrized ball eta trace, per unit ``epsilon``.

    ``(T(eps) - T(-eps)) / (2 eps)`` removes every even-in-eps contribution.
    ``first=2`` uses that ``a_0`` and ``a_1`` vanish for the ball.
    """
    if epsilon == 0:
        raise ValueError("epsilon must be nonzero for the antisymmetrized fit")
    ts = log_samples(t_min, t_max, samples)
    plus = enumerate_spectrum(BallConfig(m, epsilon, mu_max))
    minus = enumerate_spectrum(BallConfig(m, -epsilon, mu_max))
    vp, bp = sample_traces(plus, ts, "eta", tol)
    vm, bm = sample_traces(minus, ts, "eta", tol)
    anti = (vp - vm) / (2.0 * epsilon)
    fit = fit_heat_expansion(ts, anti, m, "eta", n_terms, first=first, weighting=weighting)
    return EtaFitResult(fit, max(bp, bm) / abs(epsilon))


def fit_ball_zeta(m: int, epsilon: float, mu_max: float, t_min: float, t_max: float,
                  samples: int = 40, n_terms: int | None = None, log_powers=(0.0,),
                  weighting: str = "relative", tol: float = 1e-10) -> EtaFitResult:
    """Fit the ball zeta trace with ``a_0 .. a_{m-1}`` and a ``ln t`` term.

    The trace carries a logarithmic term beyond the ``a_{m-1}`` order; including
    it in the basis keeps it from leaking into the fitted power coefficients.
    """
    ts = log_samples(t_min, t_max, samples)
    spec = enumerate_spectrum(BallConfig(m, epsilon, mu_max))
    vals, bound = sample_traces(spec, ts, "zeta", tol)
    nt = m if n_terms is None else n_terms
    fit = fit_heat_expansion(ts, vals, m, "zeta", nt, log_powers=log_powers, weighting=weighting)
    return EtaFitResult(fit, bound)


def extrapolate_to_zero(eps_values: Sequence[float], coeffs: Sequence[float]) -> float:
    """Linear extrapolation in ``eps^2`` to ``eps = 0``.

    Per-unit-eps coefficients of the antisymmetrized trace are even in eps,
    so the leading correction is ``O(eps^2)``.
    """
    x = np.asarray(eps_values, dtype=float) ** 2
    y = np.asarray(coeffs, dtype=float)
    if x.size < 2:
        raise ValueError("need at least two epsilon values")
    slope, intercept = np.polyfit(x, y, 1)
    return float(intercept)


# ---------------------------------------------------------------------------
# analytic route

def b_prefactor(s: float) -> float:
    """``Gamma(1 + s/2) / (sqrt(pi) Gamma((3 + s)/2))``."""
    return math.exp(math.lgamma(1 + s / 2) - math.lgamma((3 + s) / 2)) / math.sqrt(math.pi)


class BTerms(NamedTuple):
    b0: float
    bm1: float
    tail_bound: float


def b_terms(m: int, s: float, N: int = 100_000) -> BTerms:
    """``B_0(s)`` and ``B_{-1}(s)`` per unit epsilon from truncated Barnes sums.

    ``B_0 = d_s/2 * G(s) * (zeta_B(s+1) - zeta_B(s+2)/2)`` and
    ``B_{-1} = -s d_s/4 * zeta_B(s+2)`` with ``d = m-1``, ``a = m/2-1``.
    """
    if m % 2 or m < 4:
        raise ValueError("m must be even >= 4")
    d = m - 1
    a = m / 2 - 1
    if not s + 1 > d:
        raise ValueError(f"b_terms needs s > {d - 1} for convergence")
    ds = spinor_dim(m)
    z1 = barnes_partial(d, a, s + 1, N)
    z2 = barnes_partial(d, a, s + 2, N)
    g = b_prefactor(s)
    b0 = 0.5 * ds * g * (z1.value - 0.5 * z2.value)
    bm1 = -0.25 * s * ds * z2.value
    tail = 0.5 * ds * g * (z1.tail_bound + 0.5 * z2.tail_bound) + 0.25 * abs(s) * ds * z2.tail_bound
    return BTerms(b0, bm1, tail)


def b0_direct(m: int, s: float, n_max: int = 100_000) -> float:
    """``G(s) * sum_n d_n (p^{-s-1} - p^{-s-2}/2)`` summed mode by mode."""
    ds = spinor_dim(m)
    n = np.arange(n_max + 1, dtype=float)
    deg = np.full_like(n, ds / 2)
    for j in range(1, m - 1):
        deg *= (n + j) / j
    p = n + m / 2 - 1
    terms = deg * (p ** (-s - 1) - 0.5 * p ** (-s - 2))
    return b_prefactor(s) * math.fsum(terms[::-1])


def _prefactor_exact(s) -> sp.Expr:
    s = sp.Rational(s)
    return sp.gamma(1 + s / 2) / (sp.sqrt(sp.pi) * sp.gamma((3 + s) / 2))


def _q(x: Fraction) -> sp.Rational:
    return sp.Rational(x.numerator, x.denominator)


@dataclass(frozen=True)
class EtaResidueReport:
    """Residues of the ball eta function per unit epsilon (exact)."""

    m: int
    res_b0: dict = field(default_factory=dict)    # s -> Res B_0(s)
    res_bm1: dict = field(default_factory=dict)   # s -> Res B_{-1}(s)
    res_eta: dict = field(default_factory=dict)   # s -> Res eta(s)
    a2: sp.Expr = sp.Integer(0)
    a3: sp.Expr = sp.Integer(0)

    def as_dict(self) -> dict:
        def pack(e):
            return {"exact": str(e), "value": float(e)}
        m = self.m
        return {
            "m": m,
            "per_unit_epsilon": True,
            "res_B0": {str(k): pack(v) for k, v in sorted(self.res_b0.items(), reverse=True)},
            "res_Bm1": {str(k): pack(v) for k, v in sorted(self.res_bm1.items(), reverse=True)},
            "res_eta": {str(k): pack(v) for k, v in sorted(self.res_eta.items(), reverse=True)},
            "a2_eta": pack(self.a2),
            "a3_eta": pack(self.a3),
        }


def eta_residues(m: int) -> EtaResidueReport:
    """Exact residues of ``eta`` at ``s = m-2`` and ``s = m-3`` for the ball.

    Uses ``Res_{s=m-2} B_0 = d_s/2 G(m-2) R_d``,
    ``Res_{s=m-3} B_0 = d_s/2 G(m-3) (R_{d-1} - R_d/2)`` and
    ``Res_{s=m-3} B_{-1} = -(m-3) d_s/4 R_d``, with ``R_z`` the Barnes residues
    for ``d = m-1``, ``a = m/2-1``; then ``a_n = Gamma((m-n+1)/2) Res eta(m-n) / 2``.

    Examples
    --------
    >>> eta_residues(4).res_eta[1]
    -1/4
    """
    if m % 2 or not 4 <= m <= 10:
        raise ValueError("m must be even with 4 <= m <= 10")
    d = m - 1
    a = Fraction(m, 2) - 1
    ds = spinor_dim(m)
    rd = _q(barnes_residue(d, a, d))
    rd1 = _q(barnes_residue(d, a, d - 1))
    half_ds = sp.Rational(ds, 2)
    r0_hi = sp.simplify(half_ds * _prefactor_exact(m - 2) * rd)
    r0_lo = sp.simplify(half_ds * _prefactor_exact(m - 3) * (rd1 - rd / 2))
    rm1_lo = sp.Rational(-(m - 3) * ds, 4) * rd
    eta_hi = r0_hi
    eta_lo = sp.simplify(r0_lo + rm1_lo)
    a2 = sp.simplify(sp.gamma(sp.Rational(m - 1, 2)) * eta_hi / 2)
    a3 = sp.simplify(sp.gamma(sp.Rational(m - 2, 2)) * eta_lo / 2)
    return EtaResidueReport(m, {m - 2: r0_hi, m - 3: r0_lo}, {m - 3: rm1_lo},
                            {m - 2: eta_hi, m - 3: eta_lo}, a2, a3)
