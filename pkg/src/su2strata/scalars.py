"""Scalar backends: exact Gaussian rationals and float complex numbers.

Two interchangeable scalar kinds flow through the matrix layer:

* exact -- :class:`GaussianRational`, a complex number whose real and
  imaginary parts are :class:`fractions.Fraction`.  Closed under +, -, *, /
  and conjugation; every identity holds bit-exactly.
* float -- plain Python ``complex``.  All comparisons go through the
  tolerance helpers at the bottom of this module.

Default tolerance policy: absolute 1e-10 on matrix-norm residuals and
relative 1e-9 on scalar comparisons.  Both are arguments everywhere they
matter; the constants here are only defaults.
"""

from __future__ import annotations

import math
from fractions import Fraction

DEFAULT_ABS_TOL = 1e-10
DEFAULT_REL_TOL = 1e-9

_FRACTIONABLE = (int, Fraction)


class GaussianRational:
    """Complex number with Fraction real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, _FRACTIONABLE):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def abs2(self):
        """Squared modulus, as an exact Fraction."""
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def is_exact(x) -> bool:
    return isinstance(x, GaussianRational)


def conj(x):
    return x.conjugate()


def abs2(x):
    """Squared modulus: exact Fraction for exact input, float otherwise."""
    if isinstance(x, GaussianRational):
        return x.abs2()
    return x.real * x.real + x.imag * x.imag


def to_complex(x) -> complex:
    return complex(x)


def is_zero(x, tol: float = DEFAULT_ABS_TOL) -> bool:
    """Exact scalars compare against zero bit-exactly, floats within tol."""
    if isinstance(x, GaussianRational):
        return not x
    return abs(x) <= tol


def close(x, y, rel: float = DEFAULT_REL_TOL, abs_tol: float = DEFAULT_ABS_TOL) -> bool:
    if isinstance(x, GaussianRational) and isinstance(y, GaussianRational):
        return x == y
    return abs(complex(x) - complex(y)) <= max(abs_tol, rel * max(abs(complex(x)), abs(complex(y))))


def fraction_sqrt(f: Fraction):
    """Exact square root of a nonnegative Fraction, or None if irrational."""
    if f < 0:
        return None
    if f == 0:
        return Fraction(0)
    pr = math.isqrt(f.numerator)
    qr = math.isqrt(f.denominator)
    if pr * pr != f.numerator or qr * qr != f.denominator:
        return None
    return Fraction(pr, qr)


def gaussian_sqrt(z: GaussianRational):
    """Exact square root of a Gaussian rational, or None.

    Returns the root with nonnegative real part; for negative reals the
    +i branch is taken.  Exists iff |z| is rational and the half-angle
    components are perfect squares.
    """
    if not z.im:
        if z.re >= 0:
            s = fraction_sqrt(z.re)
            return None if s is None else GaussianRational(s, 0)
        s = fraction_sqrt(-z.re)
        return None if s is None else GaussianRational(0, s)
    r = fraction_sqrt(z.abs2())
    if r is None:
        return None
    u = fraction_sqrt((r + z.re) / 2)
    v = fraction_sqrt((r - z.re) / 2)
    if u is None or v is None:
        return None
    if z.im < 0:
        v = -v
    w = GaussianRational(u, v)
    return w if w * w == z else None


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or "p") into a Fraction."""
    return Fraction(text.strip())


def format_rational(f: Fraction) -> str:
    return str(f)
