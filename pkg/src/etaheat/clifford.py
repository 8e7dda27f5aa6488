"""Exact Clifford algebra with the convention ``g_i g_j + g_j g_i = -2 delta_ij``.

Expressions are linear combinations of normalized words (strictly increasing
generator tuples) with exact Gaussian-rational coefficients.  The trace is
normalized so that ``trace(Id) == 1``; multiply by the spinor dimension to get
a matrix trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "GaussianRational",
    "CliffordExpr",
    "MatrixRep",
    "normalize_word",
    "word_product",
    "trace",
    "adjoint",
    "frame_conjugate_sum",
    "tangential_gamma",
    "tangential_conjugate_sum",
    "matrix_representation",
    "to_matrix",
    "matrix_trace",
    "adjoint_boundary_endomorphism",
    "is_selfadjoint_bc",
]


class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_fraction(re)
        self.im = _to_fraction(im)

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(x.real, x.imag)
        return cls(x, 0)

    def __add__(self, other):
        o = _gq(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = _gq(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _gq(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _gq(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _gq(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = _gq(other)
        if o is None:
            return NotImplemented
        return o / self

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _gq(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, (float, np.floating)):
        # floats enter only via exact integer-valued matrix entries
        return Fraction(float(x))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _gq(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction, np.integer)):
        return GaussianRational(x, 0)
    if isinstance(x, complex):
        return GaussianRational(x.real, x.imag)
    return None


I = GaussianRational(0, 1)


def _check_index(i: int, m: int) -> None:
    if not 1 <= i <= m:
        raise ValueError(f"generator index {i} outside 1..{m}")


def normalize_word(raw: Sequence[int], m: int) -> tuple[int, tuple[int, ...]]:
    """Reduce a product of generators to a sorted repetition-free word.

    Parameters
    ----------
    raw : sequence of int
        Generator indices in ``1..m``, read left to right.
    m : int
        Number of generators.

    Returns
    -------
    sign : int
        ``+1`` or ``-1``; includes one ``-1`` per cancelled pair.
    word : tuple of int
        Strictly increasing indices.

    Examples
    --------
    >>> normalize_word((1, 2, 1), 4)
    (1, (2,))
    """
    w = list(raw)
    for i in w:
        _check_index(i, m)
    sign = 1
    # insertion sort, cancelling equal neighbours as they meet
    out: list[int] = []
    for g in w:
        # move g leftwards past every larger element of out
        pos = len(out)
        while pos > 0 and out[pos - 1] > g:
            pos -= 1
        sign *= (-1) ** (len(out) - pos)
        if pos > 0 and out[pos - 1] == g:
            out.pop(pos - 1)
            sign = -sign
        else:
            out.insert(pos, g)
    return sign, tuple(out)


def word_product(w1: tuple[int, ...], w2: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Product of two normalized words, returned as ``(sign, word)``."""
    s2 = set(w2)
    inversions = 0
    for a in w1:
        for b in w2:
            if a > b:
                inversions += 1
    common = len(s2.intersection(w1))
    sign = -1 if (inversions + common) % 2 else 1
    return sign, tuple(sorted(s2.symmetric_difference(w1)))


class CliffordExpr:
    """Immutable linear combination of Clifford words.

    Parameters
    ----------
    m : int
        Number of generators.
    terms : mapping, optional
        ``{word: coefficient}``; words may be unnormalized index tuples.
    """

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[Iterable[int], object] | None = None):
        if m < 1:
            raise ValueError("m must be positive")
        self.m = int(m)
        acc: dict[tuple[int, ...], GaussianRational] = {}
        for raw, c in (terms or {}).items():
            sign, w = normalize_word(tuple(raw), self.m)
            c = GaussianRational.coerce(c) * sign
            acc[w] = acc.get(w, GaussianRational()) + c
        self._terms = {w: c for w, c in acc.items() if c}

    # constructors
    @classmethod
    def identity(cls, m: int, coeff=1) -> CliffordExpr:
        return cls(m, {(): coeff})

    @classmethod
    def zero(cls, m: int) -> CliffordExpr:
        return cls(m)

    @classmethod
    def gamma(cls, i: int, m: int, coeff=1) -> CliffordExpr:
        return cls(m, {(i,): coeff})

    @classmethod
    def word(cls, indices: Sequence[int], m: int, coeff=1) -> CliffordExpr:
        return cls(m, {tuple(indices): coeff})

    @property
    def terms(self) -> dict[tuple[int, ...], GaussianRational]:
        return dict(self._terms)

    def _same_dim(self, other: CliffordExpr) -> None:
        if other.m != self.m:
            raise ValueError(f"dimension mismatch: {self.m} vs {other.m}")

    def _lift(self, other):
        if isinstance(other, CliffordExpr):
            self._same_dim(other)
            return other
        g = _gq(other)
        if g is None:
            return None
        return CliffordExpr.identity(self.m, g)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in o._terms.items():
            out[w] = out.get(w, GaussianRational()) + c
        return _from_normalized(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return _from_normalized(self.m, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if not isinstance(other, CliffordExpr):
            g = _gq(other)
            if g is None:
                return NotImplemented
            return _from_normalized(self.m, {w: c * g for w, c in self._terms.items()})
        self._same_dim(other)
        out: dict[tuple[int, ...], GaussianRational] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                s, w = word_product(w1, w2)
                c = c1 * c2
                out[w] = out.get(w, GaussianRational()) + (c if s > 0 else -c)
        return _from_normalized(self.m, out)

    def __rmul__(self, other):
        g = _gq(other)
        if g is None:
            return NotImplemented
        return _from_normalized(self.m, {w: g * c for w, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, CliffordExpr):
            return self.m == other.m and self._terms == other._terms
        o = _gq(other)
        if o is None:
            return NotImplemented
        return self == CliffordExpr.identity(self.m, o)

    def __hash__(self):
        return hash((self.m, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return f"CliffordExpr(m={self.m}, 0)"
        parts = []
        for w in sorted(self._terms, key=lambda w: (len(w), w)):
            name = "Id" if not w else "".join(f"g{i}" for i in w)
            parts.append(f"{self._terms[w]!r}*{name}")
        return f"CliffordExpr(m={self.m}, " + " + ".join(parts) + ")"


def _from_normalized(m: int, terms: dict) -> CliffordExpr:
    e = CliffordExpr.__new__(CliffordExpr)
    e.m = m
    e._terms = {w: c for w, c in terms.items() if c}
    return e


def trace(e: CliffordExpr) -> GaussianRational:
    """Normalized trace: the coefficient of the identity word."""
    return e._terms.get((), GaussianRational())


def adjoint(e: CliffordExpr) -> CliffordExpr:
    """Hermitian adjoint, using that each generator is skew-adjoint."""
    out = {}
    for w, c in e._terms.items():
        # reversing k distinct generators costs k(k-1)/2 swaps; k sign flips
        k = len(w)
        flips = k * (k - 1) // 2 + k
        cc = c.conjugate()
        out[w] = -cc if flips % 2 else cc
    return _from_normalized(e.m, out)


def frame_conjugate_sum(e: CliffordExpr, index_range: Iterable[int] | None = None) -> CliffordExpr:
    """``sum_i g_i e g_i`` over ``index_range`` (default ``1..m``)."""
    idx = range(1, e.m + 1) if index_range is None else index_range
    out = CliffordExpr.zero(e.m)
    for i in idx:
        g = CliffordExpr.gamma(i, e.m)
        out = out + g * e * g
    return out


def tangential_gamma(a: int, m: int) -> CliffordExpr:
    """The transposed tangential generator ``-g_m g_a``."""
    _check_index(a, m - 1)
    return -(CliffordExpr.gamma(m, m) * CliffordExpr.gamma(a, m))


def tangential_conjugate_sum(e: CliffordExpr) -> CliffordExpr:
    """``sum_a gT_a e gT_a`` over tangential indices ``a = 1..m-1``."""
    out = CliffordExpr.zero(e.m)
    for a in range(1, e.m):
        gt = tangential_gamma(a, e.m)
        out = out + gt * e * gt
    return out


@dataclass(frozen=True)
class MatrixRep:
    """Explicit gamma matrices for even ``m``.

    Entries are Gaussian integers stored in ``complex128`` arrays, so products
    of generators are computed exactly.
    """

    m: int
    gammas: tuple

    @property
    def dim(self) -> int:
        return self.gammas[0].shape[0]

    def word_matrix(self, indices: Sequence[int]) -> np.ndarray:
        mat = np.eye(self.dim, dtype=complex)
        for i in indices:
            _check_index(i, self.m)
            mat = mat @ self.gammas[i - 1]
        return mat


def matrix_representation(m: int) -> MatrixRep:
    """Build gamma matrices of size ``2**(m/2)`` by block recursion.

    The even-dimensional set is assembled from an odd-dimensional set of one
    dimension less; the odd set is the even set of the previous step plus its
    (suitably phased) chirality product.  The 1x1 seed is the imaginary unit.

    Parameters
    ----------
    m : int
        Even, ``2 <= m <= 10``.
    """
    if m % 2 or not 2 <= m <= 10:
        raise ValueError("matrix representation requires even m with 2 <= m <= 10")
    odd = [np.array([[1j]])]
    while True:
        size = odd[0].shape[0]
        eye = np.eye(size, dtype=complex)
        zero = np.zeros((size, size), dtype=complex)
        gam = [np.block([[zero, 1j * g], [-1j * g, zero]]) for g in odd]
        gam.append(np.block([[zero, 1j * eye], [1j * eye, zero]]))
        if len(gam) == m:
            return MatrixRep(m, tuple(gam))
        chi = reduce(np.matmul, gam)
        big = np.eye(2 * size, dtype=complex)
        phase = 1 if np.array_equal(chi @ chi, -big) else 1j
        odd = gam + [phase * chi]


def to_matrix(e: CliffordExpr, rep: MatrixRep) -> np.ndarray:
    """Floating matrix of an expression (exact if coefficients are Gaussian integers)."""
    if e.m != rep.m:
        raise ValueError("dimension mismatch")
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for w, c in e._terms.items():
        out = out + complex(c) * rep.word_matrix(w)
    return out


def matrix_trace(factors: Sequence[CliffordExpr], rep: MatrixRep) -> GaussianRational:
    """Normalized trace of a product computed through the matrices.

    Each factor is expanded word by word and the raw generator products are
    multiplied as matrices, so no symbolic reduction is involved.
    """
    total = GaussianRational()
    expanded = [list(f._terms.items()) for f in factors]

    def rec(k, coeff, mat):
        nonlocal total
        if k == len(expanded):
            tr = complex(np.trace(mat))
            # exact Gaussian integer
            g = GaussianRational(int(round(tr.real)), int(round(tr.imag)))
            total = total + coeff * g / rep.dim
            return
        for w, c in expanded[k]:
            rec(k + 1, coeff * c, mat @ rep.word_matrix(w))

    rec(0, GaussianRational(1), np.eye(rep.dim, dtype=complex))
    return total


def adjoint_boundary_endomorphism(psi_A: CliffordExpr, L_trace) -> CliffordExpr:
    """``g_m psi_A^* g_m + L_trace * Id``."""
    gm = CliffordExpr.gamma(psi_A.m, psi_A.m)
    return gm * adjoint(psi_A) * gm + CliffordExpr.identity(psi_A.m, GaussianRational.coerce(L_trace))


def is_selfadjoint_bc(psi_A: CliffordExpr, L_trace) -> bool:
    """True if ``psi_A`` satisfies the self-adjointness relation for its boundary condition."""
    return adjoint_boundary_endomorphism(psi_A, L_trace) == psi_A
