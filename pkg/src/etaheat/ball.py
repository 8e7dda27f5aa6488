"""Spectrum of the Dirac operator on the unit ball with spectral boundary conditions.

The boundary endomorphism is ``psi_A = eps*g_m + (m-1)/2 * Id``.  Eigenvalues
split into mode families ``n >= 0`` with sphere eigenvalue
``lambda_n = n + (m-1)/2`` and Bessel order ``p = lambda_n - 1/2``.  Positive
eigenvalues of the family are the roots of

    F_+(mu) = J_p(mu) - kappa J_{p+1}(mu),

negative ones are minus the roots of ``F_-(mu) = J_p(mu) + kappa J_{p+1}(mu)``,
with ``kappa = eps / (sqrt(lambda_n^2 - eps^2) + lambda_n)``.  Each root has
multiplicity ``2 d_n`` where ``d_n = d_s/2 * binom(m+n-2, n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .barnes import spinor_dim
from .specfun import bessel_pair, refine_roots

__all__ = [
    "BallConfig",
    "ModeFamily",
    "BallSpectrum",
    "TraceValue",
    "TruncationError",
    "TailBoundError",
    "mode_family",
    "eigencondition",
    "required_n_max",
    "enumerate_spectrum",
    "heat_trace",
    "spectral_sum",
    "heat_trace_tail_bound",
]

AUDIT_POINTS = 8
GRID_STEP = 0.5


class TruncationError(ValueError):
    """Raised when the family cutoff leaves eigenvalues below ``mu_max`` unenumerated."""


class TailBoundError(ValueError):
    """Raised when the truncation tail of a sum exceeds the requested tolerance."""

    def __init__(self, message: str, bound: float):
        super().__init__(message)
        self.bound = bound


def check_ball_parameters(m: int, epsilon: float) -> None:
    if int(m) != m or m < 4 or m % 2:
        raise ValueError("m must be even ≥ 4")
    if not abs(epsilon) < (m - 1) / 2:
        raise ValueError("|epsilon| < (m-1)/2 required")


def required_n_max(m: int, mu_max: float) -> int:
    """Largest ``n`` whose Bessel order ``p = n + m/2 - 1`` is below ``mu_max``.

    Every root of a family exceeds its order ``p``, so families with
    ``p >= mu_max`` have no eigenvalues up to ``mu_max``.
    """
    return max(math.ceil(mu_max - (m // 2 - 1)) - 1, 0)


@dataclass(frozen=True)
class BallConfig:
    m: int
    epsilon: float
    mu_max: float
    n_max: int | None = None

    def __post_init__(self):
        check_ball_parameters(self.m, self.epsilon)
        if not self.mu_max > 0:
            raise ValueError("mu_max must be positive")
        if self.n_max is not None and self.n_max < 0:
            raise ValueError("n_max must be nonnegative")

    @property
    def resolved_n_max(self) -> int:
        return required_n_max(self.m, self.mu_max) if self.n_max is None else self.n_max


@dataclass(frozen=True)
class ModeFamily:
    m: int
    n: int
    epsilon: float
    lam: Fraction
    p: int
    degeneracy: int
    weight: int
    kappa: float


def _kappa(lam: float, eps: float) -> float:
    # odd in eps bit for bit: only eps*eps enters the denominator
    return eps / (math.sqrt(lam * lam - eps * eps) + lam)


def mode_family(m: int, n: int, epsilon: float) -> ModeFamily:
    """Mode family data.

    Examples
    --------
    >>> f = mode_family(4, 0, 0.0)
    >>> (f.p, f.degeneracy, f.weight)
    (1, 2, 4)
    """
    check_ball_parameters(m, epsilon)
    if n < 0:
        raise ValueError("n must be nonnegative")
    lam = Fraction(2 * n + m - 1, 2)
    p = n + m // 2 - 1
    deg = spinor_dim(m) // 2 * math.comb(m + n - 2, n)
    return ModeFamily(m, n, float(epsilon), lam, p, deg, 2 * deg, _kappa(float(lam), float(epsilon)))


def eigencondition(family: ModeFamily, branch: int, mu):
    """``F_+(mu)`` for ``branch=+1`` or ``F_-(mu)`` for ``branch=-1``."""
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    jp, jp1 = bessel_pair(family.p, mu)
    return jp - (branch * family.kappa) * jp1


def _f_branch(x, order, skappa):
    jp, jp1 = bessel_pair(order, x)
    return jp - skappa * jp1


@dataclass
class BallSpectrum:
    """Enumerated eigenvalues up to ``mu_max``.

    ``pos_roots[i]`` and ``neg_roots[i]`` hold the ascending roots of the two
    branches for ``families[i]``.
    """

    config: BallConfig
    families: tuple
    pos_roots: tuple
    neg_roots: tuple
    audit: dict = field(default_factory=dict)

    def __post_init__(self):
        self._flat = {}
        for key, roots in (("pos", self.pos_roots), ("neg", self.neg_roots)):
            mu = np.concatenate([r for r in roots] + [np.empty(0)])
            w = np.concatenate([np.full(r.shape, float(f.weight)) for f, r in zip(self.families, roots)]
                               + [np.empty(0)])
            order = np.argsort(mu, kind="stable")
            self._flat[key] = (mu[order], w[order])

    def branch_arrays(self, branch: int) -> tuple[np.ndarray, np.ndarray]:
        """Sorted roots and weights of one branch."""
        return self._flat["pos" if branch > 0 else "neg"]

    def count(self, radius: float | None = None) -> int:
        """Weighted number of eigenvalues with ``|mu| <= radius``."""
        r = self.config.mu_max if radius is None else radius
        total = 0
        for b in (1, -1):
            mu, w = self.branch_arrays(b)
            total += int(w[mu <= r].sum())
        return total

    def rows(self):
        """Export rows ``(n, p, weight, branch, root)`` ordered by family, branch, root."""
        for f, pos, neg in zip(self.families, self.pos_roots, self.neg_roots):
            for sign, roots in (("+", pos), ("-", neg)):
                for r in roots:
                    yield f.n, f.p, f.weight, sign, float(r)


def _zero_scan(orders: np.ndarray, lo: np.ndarray, hi: np.ndarray) -> list[np.ndarray]:
    """Zeros of ``J_p`` in ``[lo, hi]`` for several orders at once."""
    counts = np.ceil((hi - lo) / GRID_STEP).astype(int) + 1
    fam = np.repeat(np.arange(len(orders)), counts)
    start = np.repeat(np.cumsum(counts) - counts, counts)
    x = lo[fam] + GRID_STEP * (np.arange(fam.size) - start)
    vals, _ = bessel_pair(orders[fam], x)
    sgn = np.where(vals < 0, -1, 1)
    change = (sgn[:-1] != sgn[1:]) & (fam[:-1] == fam[1:])
    idx = np.nonzero(change)[0]
    roots = refine_roots(lambda xx, q: bessel_pair(q, xx)[0], x[idx], x[idx + 1],
                         args=(orders[fam[idx]],))
    out = [np.empty(0)] * len(orders)
    owner = fam[idx]
    for i in range(len(orders)):
        out[i] = np.sort(roots[owner == i])
    return out


def _bessel_zero_sets(orders: np.ndarray, mu_max: float) -> list[np.ndarray]:
    """Zeros of each ``J_p`` up to and including the first zero above ``mu_max``."""
    margin = 2.5 * mu_max ** (1.0 / 3.0) + 2.0 * math.pi + 2.0
    lo = orders.astype(float)
    hi = np.full(orders.shape, mu_max + margin)
    zeros = _zero_scan(orders, lo, hi)
    todo = [i for i, z in enumerate(zeros) if z.size == 0 or z[-1] <= mu_max]
    while todo:
        margin *= 2
        sub = np.array(todo)
        more = _zero_scan(orders[sub], lo[sub], np.full(sub.shape, mu_max + margin))
        for i, z in zip(todo, more):
            zeros[i] = z
        todo = [i for i in todo if zeros[i].size == 0 or zeros[i][-1] <= mu_max]
    return [z[: int(np.searchsorted(z, mu_max, side="right")) + 1] for z in zeros]


def enumerate_spectrum(config: BallConfig) -> BallSpectrum:
    """Find every eigenvalue with ``|mu| <= mu_max``.

    Between consecutive zeros of ``J_p`` (and on ``(p, j_{p,1}]``) each branch
    has at most one root since ``|kappa| < 1``.  Every bracket is subdivided
    into ``AUDIT_POINTS`` pieces and each sign change is refined; a bracket with
    more than one sign change raises.

    Raises
    ------
    TruncationError
        If ``n_max`` leaves a family with ``p < mu_max`` unenumerated.
    """
    m, eps, mu_max = config.m, config.epsilon, config.mu_max
    need = required_n_max(m, mu_max)
    n_max = config.resolved_n_max
    if n_max < need:
        raise TruncationError(
            f"n_max={n_max} too small: families up to n={need} have eigenvalues below mu_max={mu_max}")
    families = tuple(mode_family(m, n, eps) for n in range(n_max + 1))
    active = [f for f in families if f.p < mu_max]
    orders = np.array([f.p for f in active], dtype=int)
    zero_sets = _bessel_zero_sets(orders, mu_max) if len(active) else []
    empty = np.empty(0)
    pos = [empty] * len(families)
    neg = [empty] * len(families)
    audit = {"brackets": 0, "roots": 0, "empty_brackets": 0}
    if eps == 0.0:
        for i, z in enumerate(zero_sets):
            r = z[z <= mu_max]
            pos[i] = r
            neg[i] = r
            audit["roots"] += 2 * r.size
        return BallSpectrum(config, families, tuple(pos), tuple(neg), audit)

    # brackets for both branches of every active family
    b_lo, b_hi, b_fam, b_sgn = [], [], [], []
    for i, (f, z) in enumerate(zip(active, zero_sets)):
        edges = np.concatenate([[float(f.p)], z])
        for s in (1, -1):
            b_lo.append(edges[:-1])
            b_hi.append(edges[1:])
            b_fam.append(np.full(z.size, i))
            b_sgn.append(np.full(z.size, s))
    b_lo = np.concatenate(b_lo)
    b_hi = np.concatenate(b_hi)
    b_fam = np.concatenate(b_fam)
    b_sgn = np.concatenate(b_sgn)
    kap = np.array([f.kappa for f in active])
    skappa = b_sgn * kap[b_fam]
    order = orders[b_fam]

    frac = np.linspace(0.0, 1.0, AUDIT_POINTS + 1)
    pts = b_lo[:, None] + (b_hi - b_lo)[:, None] * frac[None, :]
    vals = _f_branch(pts, order[:, None], skappa[:, None])
    sg = np.where(vals < 0, -1, 1)
    change = sg[:, :-1] != sg[:, 1:]
    per_bracket = change.sum(axis=1)
    if np.any(per_bracket > 1):
        raise RuntimeError("sign-change audit found more than one root in a bracket")
    audit["brackets"] = int(b_lo.size)
    audit["empty_brackets"] = int(np.sum(per_bracket == 0))
    bi, ci = np.nonzero(change)
    roots = refine_roots(_f_branch, pts[bi, ci], pts[bi, ci + 1], args=(order[bi], skappa[bi]))
    keep = roots <= mu_max
    roots, bi = roots[keep], bi[keep]
    audit["roots"] = int(roots.size)
    for i in range(len(active)):
        for s, target in ((1, pos), (-1, neg)):
            sel = (b_fam[bi] == i) & (b_sgn[bi] == s)
            target[i] = np.sort(roots[sel])
    return BallSpectrum(config, families, tuple(pos), tuple(neg), audit)


class TraceValue(NamedTuple):
    value: float
    tail_bound: float


def _family_weights(m: int, p_start: int, count: int) -> tuple[np.ndarray, np.ndarray]:
    n = np.arange(count)
    p = p_start + n
    ds = spinor_dim(m)
    w = np.array([ds * math.comb(m + k - 2, k) for k in range(count)], dtype=float)
    return p.astype(float), w


def heat_trace_tail_bound(config: BallConfig, t: float, power: int, shift: float = 0.0) -> float:
    """Bound on ``sum w |mu|^power exp(-t mu^2)`` over one branch beyond ``mu_max``.

    Each branch has at most two roots in any interval of length ``pi`` (one per
    Bessel-zero bracket), and roots of family ``p`` exceed ``p``.  With ``g``
    decreasing beyond ``L = max(mu_max, p) - |shift|``, the family tail is at most
    ``2 w (g(L) + (1/pi) int_L^inf g)``.
    """
    m, mu_max = config.m, config.mu_max
    p0 = m // 2 - 1
    p_end = int(mu_max + math.sqrt(800.0 / t) + 10)
    p, w = _family_weights(m, p0, p_end - p0 + 1)
    L = np.maximum(mu_max, p) - abs(shift)
    if power == 1 and np.min(L) < 1.0 / math.sqrt(2.0 * t):
        return math.inf
    if np.min(L) <= 0:
        return math.inf
    g = L ** power * np.exp(-t * L * L)
    if power == 0:
        integral = np.array([0.5 * math.sqrt(math.pi / t) * math.erfc(math.sqrt(t) * x) for x in L])
    elif power == 1:
        integral = np.exp(-t * L * L) / (2.0 * t)
    else:
        raise ValueError("power must be 0 or 1")
    return float(np.sum(2.0 * w * (g + integral / math.pi)))


def _branch_sum(mu, w, t, power, c):
    x = mu + c
    if power == 0:
        return float(np.sum(w * np.exp(-t * x * x)))
    return float(np.sum(w * x * np.exp(-t * x * x)))


def heat_trace(spectrum: BallSpectrum, t: float, kind: str = "zeta", tol: float = 1e-10,
               shift: float = 0.0) -> TraceValue:
    """Heat trace ``sum w exp(-t mu^2)`` (zeta) or ``sum w mu exp(-t mu^2)`` (eta).

    Parameters
    ----------
    spectrum : BallSpectrum
    t : float
        Positive time.
    kind : {"zeta", "eta"}
    tol : float
        Largest acceptable truncation tail bound.
    shift : float
        Adds ``shift`` to every signed eigenvalue, realizing ``P + shift``.

    Returns
    -------
    TraceValue
        Value and rigorous bound on the omitted tail.
    """
    if not t > 0:
        raise ValueError("t must be positive")
    if kind not in ("zeta", "eta"):
        raise ValueError("kind must be 'zeta' or 'eta'")
    power = 0 if kind == "zeta" else 1
    bound = 2.0 * heat_trace_tail_bound(spectrum.config, t, power, shift)
    if not bound <= tol:
        raise TailBoundError(f"tail bound {bound:.3g} exceeds tolerance {tol:.3g} at t={t:g}", bound)
    pmu, pw = spectrum.branch_arrays(1)
    nmu, nw = spectrum.branch_arrays(-1)
    a = _branch_sum(pmu, pw, t, power, shift)
    b = _branch_sum(nmu, nw, t, power, -shift)
    # negative eigenvalue -mu+c: |x|^0 term adds, odd term flips sign
    value = a + b if power == 0 else a - b
    return TraceValue(value, bound)


def spectral_sum(spectrum: BallSpectrum, s: float, kind: str = "zeta") -> TraceValue:
    """Truncated ``sum w (mu^2)^{-s}`` (zeta) or ``sum w sign(mu) |mu|^{-s}`` (eta).

    The tail is an estimate: for zeta the two-roots-per-``pi`` counting bound,
    for eta the same bound applied to the first-order root splitting
    ``2|kappa|``.
    """
    m = spectrum.config.m
    if kind == "zeta":
        if not s > m / 2:
            raise ValueError(f"zeta sum requires s > m/2 = {m / 2:g}")
    elif kind == "eta":
        if not s > m - 1:
            raise ValueError(f"eta sum requires s > m-1 = {m - 1}")
    else:
        raise ValueError("kind must be 'zeta' or 'eta'")
    pmu, pw = spectrum.branch_arrays(1)
    nmu, nw = spectrum.branch_arrays(-1)
    mu_max = spectrum.config.mu_max
    p0 = m // 2 - 1
    p, w = _family_weights(m, p0, int(max(20 * mu_max, 2000)))
    L = np.maximum(mu_max, p)
    if kind == "zeta":
        value = float(np.sum(pw * pmu ** (-2 * s))) + float(np.sum(nw * nmu ** (-2 * s)))
        tail = float(np.sum(4.0 * w * (L ** (-2 * s) + L ** (1 - 2 * s) / (math.pi * (2 * s - 1)))))
    else:
        value = float(np.sum(pw * pmu ** (-s))) - float(np.sum(nw * nmu ** (-s)))
        eps = spectrum.config.epsilon
        lam = p + 0.5
        kap = np.abs(eps) / (np.sqrt(lam * lam - eps * eps) + lam)
        tail = float(np.sum(2.0 * w * 2.0 * kap * s * (L ** (-s - 1) + L ** (-s) / (math.pi * s))))
    return TraceValue(value, tail)
