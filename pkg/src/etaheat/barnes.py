"""Barnes zeta functions with binomial degeneracies and their residues.

``zeta_B(s, a) = sum_{n>=0} binom(n+d-1, n) (n+a)^{-s}``, convergent for
``s > d``.  Its poles sit at ``s = 1..d`` with residues given by generalized
Bernoulli polynomials defined through

    exp(-a t) / (1 - exp(-t))^d = (-1)^d sum_n (-t)^(n-d) / n! * B_n^(d)(a).

Substituting ``t -> -t`` shows this is the classical Norlund convention
``(t/(e^t - 1))^d e^{a t} = sum_n B_n^(d)(a) t^n / n!``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath
import numpy as np

from .ratpoly import RationalPoly

__all__ = [
    "BarnesSpec",
    "BernoulliTable",
    "gen_bernoulli",
    "barnes_residue",
    "barnes_polynomial",
    "PartialSum",
    "barnes_partial",
    "barnes_zeta",
    "richardson_residue",
    "BaseResidue",
    "base_zeta_residue",
    "spinor_dim",
]


def spinor_dim(m: int) -> int:
    """``2**(m/2)`` for even ``m``."""
    if m % 2:
        raise ValueError("spinor dimension defined here for even m only")
    return 2 ** (m // 2)


@dataclass(frozen=True)
class BarnesSpec:
    d: int
    a: Fraction

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        object.__setattr__(self, "a", Fraction(self.a))


@dataclass(frozen=True)
class BernoulliTable:
    """``B_0^(d) .. B_{n_max}^(d)`` as polynomials in ``a``."""

    d: int
    polynomials: tuple

    def __getitem__(self, n: int) -> RationalPoly:
        return self.polynomials[n]


def _series_mul(x: list, y: list, n: int) -> list:
    out = [RationalPoly() for _ in range(n)]
    for i, xi in enumerate(x[:n]):
        if not xi:
            continue
        for j in range(n - i):
            if y[j]:
                out[i + j] = out[i + j] + xi * y[j]
    return out


def gen_bernoulli(d: int, n_max: int) -> BernoulliTable:
    """Generalized Bernoulli polynomials by formal power-series division.

    Writes ``exp(-a t)/(1-exp(-t))^d = t^(-d) * sum_k q_k(a) t^k`` and reads
    off ``B_n^(d)(a) = (-1)^n n! q_n(a)``.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 0 <= n_max <= 30:
        raise ValueError("n_max must lie in 0..30")
    n = n_max + 1
    # h(t) = (1 - e^{-t})/t = sum_k (-1)^k t^k / (k+1)!
    h = [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(n)]
    hd = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for _ in range(d):
        hd = [sum(hd[i] * h[k - i] for i in range(k + 1)) for k in range(n)]
    # reciprocal series of h^d (leading coefficient 1)
    inv = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for k in range(1, n):
        inv[k] = -sum(hd[i] * inv[k - i] for i in range(1, k + 1))
    # e^{-a t}: coefficient of t^k is (-a)^k / k!
    expo = [RationalPoly({k: Fraction((-1) ** k, math.factorial(k))}) for k in range(n)]
    q = _series_mul(expo, [RationalPoly.constant(c) for c in inv], n)
    polys = tuple(q[k] * ((-1) ** k * math.factorial(k)) for k in range(n))
    return BernoulliTable(d, polys)


def barnes_residue(d: int, a, z: int) -> Fraction:
    """``Res_{s=z} zeta_B(s, a) = (-1)^(d+z) B_{d-z}^(d)(a) / ((z-1)! (d-z)!)``.

    Examples
    --------
    >>> barnes_residue(3, 1, 3)
    Fraction(1, 2)
    """
    if not 1 <= z <= d:
        raise ValueError(f"pole index z={z} outside 1..{d}")
    a = Fraction(a)
    b = gen_bernoulli(d, d - z)[d - z](a)
    return Fraction((-1) ** (d + z)) * b / (math.factorial(z - 1) * math.factorial(d - z))


def barnes_polynomial(d: int, a) -> RationalPoly:
    """``binom(n+d-1, d-1)`` as a polynomial in ``x = n + a``.

    Splitting ``zeta_B`` into Hurwitz zetas, ``sum_k c_k zeta_H(s-k, a)``,
    shows the residue at ``s = z`` is the coefficient ``c_{z-1}``.
    """
    a = Fraction(a)
    poly = RationalPoly.constant(1)
    for j in range(1, d):
        # (n + j)/j with n = x - a
        poly = poly * RationalPoly({0: (j - a) / j, 1: Fraction(1, j)})
    return poly


class PartialSum(NamedTuple):
    value: float
    tail_bound: float


def barnes_partial(d: int, a, s: float, N: int) -> PartialSum:
    """Partial sum over ``n <= N`` with a rigorous tail bound.

    For ``n > N`` the degeneracy obeys ``binom(n+d-1, d-1) <= K^(d-1) (n+a)^(d-1)/(d-1)!``
    with ``K = max(1, (N+d-1)/(N+a))``, and integral comparison gives the bound
    ``K^(d-1) (N+a)^(d-s) / ((d-1)! (s-d))``.
    """
    if s <= d:
        raise ValueError(f"barnes_partial needs s > d (got s={s}, d={d})")
    a = float(a)
    if a <= 0:
        raise ValueError("offset a must be positive")
    n = np.arange(N + 1, dtype=float)
    deg = np.ones_like(n)
    for j in range(1, d):
        deg *= (n + j) / j
    terms = deg * (n + a) ** (-s)
    value = math.fsum(terms[::-1])
    k = max(1.0, (N + d - 1) / (N + a))
    tail = k ** (d - 1) * (N + a) ** (d - s) / (math.factorial(d - 1) * (s - d))
    return PartialSum(value, tail)


def barnes_zeta(d: int, a, s: float, dps: int = 30) -> float:
    """Analytically continued ``zeta_B(s, a)`` via its Hurwitz decomposition."""
    poly = barnes_polynomial(d, a)
    with mpmath.workdps(dps):
        aa = mpmath.mpf(Fraction(a).numerator) / Fraction(a).denominator
        ss = mpmath.mpf(s)
        total = mpmath.mpf(0)
        for k, c in poly.coeffs.items():
            total += mpmath.mpf(c.numerator) / c.denominator * mpmath.zeta(ss - k, aa)
        return float(total)


def richardson_residue(d: int, a, z: int, h: float = 0.1) -> float:
    """Residue estimate from samples of ``zeta_B`` at ``s = z +- h, z +- h/2, z +- h/4``.

    ``e(h) = h (zeta_B(z+h) - zeta_B(z-h)) / 2 = R + c_2 h^2 + c_4 h^4 + ...``
    is even in ``h``; two Richardson steps remove the ``h^2`` and ``h^4`` terms.
    """
    e = [hh * (barnes_zeta(d, a, z + hh) - barnes_zeta(d, a, z - hh)) / 2.0
         for hh in (h, h / 2, h / 4)]
    return (e[0] - 20.0 * e[1] + 64.0 * e[2]) / 45.0


class BaseResidue(NamedTuple):
    barnes: Fraction      # Res_{s=z} zeta_B(s, m/2-1)
    sphere: Fraction      # Res_{s=z/2} of (d_s/2) zeta_B(2s, m/2-1)


def base_zeta_residue(m: int, z: int) -> BaseResidue:
    """Residues of the sphere base zeta with ``d = m-1`` and ``a = m/2-1``."""
    if m % 2 or m < 4:
        raise ValueError("m must be even >= 4")
    r = barnes_residue(m - 1, Fraction(m, 2) - 1, z)
    return BaseResidue(r, Fraction(spinor_dim(m), 4) * r)
