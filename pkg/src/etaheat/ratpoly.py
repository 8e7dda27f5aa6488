"""Exact rational polynomials in one variable."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class RationalPoly:
    """Polynomial with :class:`~fractions.Fraction` coefficients.

    Stored sparsely as ``{degree: coefficient}`` with zero coefficients
    dropped, so two polynomials compare equal iff they are the same function.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs is None:
            coeffs = {}
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
        for k, v in items:
            if k < 0:
                raise ValueError("negative degree")
            v = _frac(v)
            if v:
                c[int(k)] = c.get(int(k), Fraction(0)) + v
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def constant(cls, c) -> RationalPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c=1) -> RationalPoly:
        return cls({k: c})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return max(self._c, default=-1)

    def coeff(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == RationalPoly.constant(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _lift(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, Fraction(0)) + v
        return RationalPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: dict[int, Fraction] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                out[i + j] = out.get(i + j, Fraction(0)) + a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = _frac(c)
        return RationalPoly({k: v / c for k, v in self._c.items()})

    def derivative(self) -> RationalPoly:
        return RationalPoly({k - 1: k * v for k, v in self._c.items() if k})

    def integral(self) -> RationalPoly:
        """Antiderivative vanishing at the origin."""
        return RationalPoly({k + 1: v / (k + 1) for k, v in self._c.items()})

    def reflect(self) -> RationalPoly:
        """``p(-x)``."""
        return RationalPoly({k: (-v if k % 2 else v) for k, v in self._c.items()})

    def __call__(self, x):
        # Horner; exact for Fraction/int input, float otherwise
        if not self._c:
            return 0 * x
        acc = 0
        for k in range(self.degree, -1, -1):
            c = self._c.get(k, 0)
            if isinstance(x, float) or hasattr(x, "dtype"):
                c = float(c)
            acc = acc * x + c
        return acc

    def __repr__(self):
        if not self._c:
            return "RationalPoly(0)"
        terms = []
        for k in sorted(self._c):
            v = self._c[k]
            terms.append(f"{v}" if k == 0 else f"({v})*x^{k}")
        return "RationalPoly(" + " + ".join(terms) + ")"


def _lift(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    return RationalPoly.constant(_frac(x))
