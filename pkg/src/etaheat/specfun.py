"""Special functions for the ball spectrum.

Bessel functions of integer order are evaluated by the ascending series for
small arguments and by Miller's backward recurrence otherwise; both paths are
vectorized over arguments and orders.  The Olver polynomials of the uniform
large-order expansion are generated exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np
import sympy as sp
from scipy.optimize.elementwise import find_root

from .ratpoly import RationalPoly

__all__ = [
    "BetaValue",
    "beta_m",
    "bessel_j",
    "bessel_pair",
    "bessel_i",
    "bessel_zeros",
    "refine_roots",
    "UVTable",
    "uv_tables",
    "UniformBesselI",
    "uniform_bessel_i",
]

# evaluation limits for the recurrence; beyond these the cost grows without bound
MAX_ARG = 1.0e4
MAX_ORDER = 10_000

ROOT_TOL = dict(xatol=1e-13, xrtol=4e-16, fatol=0.0, frtol=0.0)


@dataclass(frozen=True)
class BetaValue:
    """``beta(m) = Gamma(m/2) / (sqrt(pi) Gamma((m+1)/2))``.

    The exact value is ``coeff * pi**pi_power`` with ``pi_power`` equal to
    ``-1`` for even ``m`` and ``0`` for odd ``m``.
    """

    m: int
    value: float
    coeff: Fraction
    pi_power: int

    def sympy(self) -> sp.Expr:
        return sp.Rational(self.coeff.numerator, self.coeff.denominator) * sp.pi ** self.pi_power


def beta_m(m: int) -> BetaValue:
    """Evaluate ``beta(m)`` exactly and in floating point.

    Examples
    --------
    >>> beta_m(3).value
    0.5
    """
    if int(m) != m or m < 2:
        raise ValueError("beta(m) requires an integer m >= 2")
    m = int(m)
    k = m // 2
    if m % 2 == 0:
        # Gamma(k+1/2) = (2k)! sqrt(pi) / (4^k k!)
        coeff = Fraction(math.factorial(k - 1) * 4 ** k * math.factorial(k), math.factorial(2 * k))
        return BetaValue(m, float(coeff) / math.pi, coeff, -1)
    coeff = Fraction(math.factorial(2 * k), 4 ** k * math.factorial(k) ** 2)
    return BetaValue(m, float(coeff), coeff, 0)


# ---------------------------------------------------------------------------
# Bessel J

def _series_j(order: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Ascending series; intended for ``x**2/4 <= order + 1``."""
    half = x / 2.0
    with np.errstate(divide="ignore", invalid="ignore"):
        lead = np.exp(order * np.log(half) - _lgamma(order + 1.0))
    lead = np.where(x == 0, (order == 0).astype(float), lead)
    q = half * half
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, 40):
        term = -term * q / (k * (k + order))
        total = total + term
    return lead * total


_lgamma = np.vectorize(math.lgamma, otypes=[float])


def _miller_pair(order: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``J_p(x)`` and ``J_{p+1}(x)`` by normalized backward recurrence, ``x > 0``."""
    size = np.maximum(x, order + 1.0)
    start = int(np.max(size + 8.0 * np.cbrt(size) + 30.0))
    start += start % 2
    j_next = np.zeros_like(x)           # j_{k+1}
    j_cur = np.full_like(x, 1e-30)      # j_k, k = start
    norm = np.zeros_like(x)
    out_p = np.zeros_like(x)
    out_p1 = np.zeros_like(x)
    two_over_x = 2.0 / x
    for k in range(start, 0, -1):
        j_prev = k * two_over_x * j_cur - j_next
        q = k - 1
        if q == 0:
            norm = norm + j_prev
        elif q % 2 == 0:
            norm = norm + 2.0 * j_prev
        hit = order == q
        if hit.any():
            out_p = np.where(hit, j_prev, out_p)
        hit = order == q - 1
        if hit.any():
            out_p1 = np.where(hit, j_prev, out_p1)
        big = np.abs(j_prev) > 1e200
        if big.any():
            f = np.where(big, 1e-200, 1.0)
            j_prev = j_prev * f
            j_cur = j_cur * f
            norm = norm * f
            out_p = out_p * f
            out_p1 = out_p1 * f
        j_next, j_cur = j_cur, j_prev
    # orders p+1 equal to start-1 never occur because start > p + 30
    return out_p / norm, out_p1 / norm


def bessel_pair(order, x) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized ``(J_p(x), J_{p+1}(x))`` for integer ``p >= 0`` and ``x >= 0``.

    Parameters
    ----------
    order : int or array of int
        Orders; broadcast against ``x``.
    x : float or array
        Nonnegative arguments.
    """
    order, x = np.broadcast_arrays(np.asarray(order), np.asarray(x, dtype=float))
    if order.size and (np.any(order < 0) or np.any(order != np.floor(order))):
        raise ValueError("orders must be nonnegative integers")
    if x.size and np.any(x < 0):
        raise ValueError("x must be nonnegative")
    if x.size and (np.max(x) > MAX_ARG or np.max(order) > MAX_ORDER):
        raise OverflowError(f"Bessel evaluation limited to x <= {MAX_ARG:g}, p <= {MAX_ORDER}")
    order = order.astype(float)
    x = x.astype(float)
    jp = np.empty(x.shape)
    jp1 = np.empty(x.shape)
    small = x * x <= 4.0 * (order + 1.0)
    if small.any():
        jp[small] = _series_j(order[small], x[small])
        jp1[small] = _series_j(order[small] + 1.0, x[small])
    large = ~small
    if large.any():
        a, b = _miller_pair(order[large], x[large])
        jp[large] = a
        jp1[large] = b
    return jp, jp1


def bessel_j(p, x) -> tuple:
    """``J_p(x)`` and ``J_p'(x)`` for integer order ``p >= 0``.

    The derivative uses ``J_p' = (J_{p-1} - J_{p+1})/2`` (``-J_1`` for
    ``p = 0``), independent of the ``(p/x) J_p - J_{p+1}`` form.

    Examples
    --------
    >>> bessel_j(0, 0.0)
    (1.0, 0.0)
    """
    scalar = np.ndim(p) == 0 and np.ndim(x) == 0
    p, x = np.broadcast_arrays(np.asarray(p), np.asarray(x, dtype=float))
    jp, jp1 = bessel_pair(p, x)
    jm1, _ = bessel_pair(np.maximum(p - 1, 0), x)
    deriv = np.where(p == 0, -jp1, 0.5 * (jm1 - jp1))
    if scalar:
        return float(jp), float(deriv)
    return jp, deriv


# ---------------------------------------------------------------------------
# Bessel I (real order), used as the oracle for the uniform expansion

def bessel_i(nu: float, x: float) -> tuple[float, float]:
    """``I_nu(x)`` and ``I_nu'(x)`` by the ascending series (all terms positive)."""
    if nu < 0 or x < 0:
        raise ValueError("bessel_i requires nu >= 0 and x >= 0")
    if x > 700:
        raise OverflowError("bessel_i limited to x <= 700")

    def series(v):
        if x == 0:
            return 1.0 if v == 0 else 0.0
        q = x * x / 4.0
        term = math.exp(v * math.log(x / 2.0) - math.lgamma(v + 1.0))
        total = term
        k = 1
        while True:
            term *= q / (k * (k + v))
            total += term
            if term < 1e-17 * total and k > q:
                return total
            k += 1

    val = series(nu)
    if nu == 0:
        return val, series(1.0)
    if nu >= 1:
        return val, 0.5 * (series(nu - 1.0) + series(nu + 1.0))
    # 0 < nu < 1: I' = I_{nu+1} + (nu/x) I_nu
    return val, series(nu + 1.0) + nu / x * val


# ---------------------------------------------------------------------------
# zeros

def refine_roots(func, lo, hi, args=()) -> np.ndarray:
    """Refine sign-change brackets ``[lo, hi]`` of ``func`` to machine tolerance.

    ``func(x, *args)`` must be elementwise.  Raises if any bracket fails.
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if lo.size == 0:
        return lo.copy()
    res = find_root(func, (lo, hi), args=args, tolerances=ROOT_TOL, maxiter=200)
    if np.any(res.status != 0):
        raise RuntimeError("root refinement did not converge on every bracket")
    return np.asarray(res.x, dtype=float)


def _scan_zeros(p: int, x_lo: float, x_hi: float, step: float = 0.5) -> np.ndarray:
    grid = np.arange(x_lo, x_hi + step, step)
    vals, _ = bessel_pair(np.full(grid.shape, p), grid)
    idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    exact = grid[vals == 0.0]
    roots = refine_roots(lambda x, q: bessel_pair(q, x)[0], grid[idx], grid[idx + 1],
                         args=(np.full(idx.shape, p),))
    return np.sort(np.concatenate([roots, exact[exact > 0]]))


def bessel_zeros(p: int, count: int) -> np.ndarray:
    """First ``count`` positive zeros of ``J_p``.

    A grid with spacing 0.5 (zeros of integer-order ``J_p`` are more than
    ``pi`` apart) locates every sign change above ``x = p``, below which
    ``J_p`` has no zeros; each bracket is then refined.

    Examples
    --------
    >>> round(float(bessel_zeros(1, 1)[0]), 10)
    3.8317059702
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    p = int(p)
    if p < 0:
        raise ValueError("order must be nonnegative")
    hi = p + count * math.pi + 3.0 * (p + 1) ** (1.0 / 3.0) + 5.0
    while True:
        z = _scan_zeros(p, max(float(p), 0.5), hi)
        if z.size >= count:
            return z[:count]
        hi *= 1.5


# ---------------------------------------------------------------------------
# Olver polynomials

@dataclass(frozen=True)
class UVTable:
    """``u_0..u_L`` and ``v_0..v_L`` (``v_0 = 1``) as exact polynomials in ``t``."""

    max_order: int
    u: tuple
    v: tuple


def uv_tables(L: int) -> UVTable:
    """Generate the Olver polynomials up to order ``L``.

    ``u_{l+1} = t^2 (1 - t^2) u_l' / 2 + (1/8) int_0^t (1 - 5 s^2) u_l(s) ds`` and
    ``v_l = u_l + t (t^2 - 1) (u_{l-1}/2 + t u_{l-1}')``.
    """
    if not 0 <= L <= 12:
        raise ValueError("uv_tables supports 0 <= L <= 12")
    half_t2_1mt2 = RationalPoly({2: Fraction(1, 2), 4: Fraction(-1, 2)})
    weight = RationalPoly({0: Fraction(1, 8), 2: Fraction(-5, 8)})
    u = [RationalPoly.constant(1)]
    for _ in range(L):
        ul = u[-1]
        u.append(half_t2_1mt2 * ul.derivative() + (weight * ul).integral())
    t_t2m1 = RationalPoly({1: -1, 3: 1})
    tpoly = RationalPoly({1: 1})
    v = [RationalPoly.constant(1)]
    for l in range(1, L + 1):
        prev = u[l - 1]
        v.append(u[l] + t_t2m1 * (prev / 2 + tpoly * prev.derivative()))
    return UVTable(L, tuple(u), tuple(v))


class UniformBesselI(NamedTuple):
    value: float
    derivative: float
    error_proxy: float
    last_term: float


def uniform_bessel_i(p: float, z: float, L: int) -> UniformBesselI:
    """Uniform large-order approximation of ``I_p(p z)`` and ``I_p'(p z)``.

    Parameters
    ----------
    p : float
        Order, ``p >= 1``.
    z : float
        Scaled argument, ``z > 0``.
    L : int
        Highest included order of the ``u_l``, ``v_l`` corrections.

    Returns
    -------
    UniformBesselI
        ``error_proxy`` is the magnitude of the first omitted term of the
        value series (times the prefactor); ``last_term`` is the last included.
    """
    if p < 1 or z <= 0:
        raise ValueError("uniform_bessel_i requires p >= 1 and z > 0")
    tab = uv_tables(L + 1)
    root = math.sqrt(1.0 + z * z)
    t = 1.0 / root
    eta = root + math.log(z / (1.0 + root))
    pref_u = math.exp(p * eta) / (math.sqrt(2.0 * math.pi * p) * math.sqrt(root))
    pref_v = math.exp(p * eta) * math.sqrt(root) / (math.sqrt(2.0 * math.pi * p) * z)
    su = sum(tab.u[l](t) / p ** l for l in range(L + 1))
    sv = sum(tab.v[l](t) / p ** l for l in range(L + 1))
    omitted = abs(tab.u[L + 1](t)) / p ** (L + 1) * pref_u
    last = abs(tab.u[L](t)) / p ** L * pref_u
    return UniformBesselI(pref_u * su, pref_v * sv, omitted, last)


def uniform_variables(z: float) -> tuple[float, float]:
    """``t = 1/sqrt(1+z^2)`` and ``eta = sqrt(1+z^2) + ln(z/(1+sqrt(1+z^2)))``."""
    root = math.sqrt(1.0 + z * z)
    return 1.0 / root, root + math.log(z / (1.0 + root))
