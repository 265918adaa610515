"""Exact and floating 2x2 complex matrix algebra with Lie-theoretic primitives.

A :class:`Mat2` carries either four ``complex`` entries (float backend) or
four :class:`~su2strata.scalars.GaussianRational` entries (exact backend).
Unitary group elements, anti-Hermitian traceless algebra elements and
unimodular complex matrices are all plain ``Mat2`` values; the ``is_*``
predicates and ``require_*`` checks enforce the structural invariants where
an operation needs them.

Conventions fixed module-wide (the single place they are documented):

* algebra basis ``E1, E2, E3`` with ``E_k = i * sigma_k / 2`` (Pauli
  matrices ``sigma_k``);
* invariant scalar product ``<X, Y> = -2 tr(X Y)`` on the algebra, which
  makes ``E1, E2, E3`` orthonormal;
* algebra norm ``|A|^2 = -2 tr(A^2)``; in coordinates ``A = sum x_k E_k``
  this equals ``|x|^2`` and also ``4 det(A)``.

Transcendental operations (``su2_exp``, ``polar_*``, adjoint matrices) are
float-only: the exact backend has no cos/sin/log, and the symbolic layers
never need them.
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

import numpy as np

from .errors import FloatOnlyOperation, NotUnimodular, SingularMatrix
from .scalars import (
    DEFAULT_ABS_TOL,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    abs2,
    is_exact,
)


class Mat2:
    """2x2 matrix [[a, b], [c, d]] over one scalar backend."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(exact: bool = False) -> "Mat2":
        if exact:
            return Mat2(GR_ONE, GR_ZERO, GR_ZERO, GR_ONE)
        return Mat2(1 + 0j, 0j, 0j, 1 + 0j)

    @staticmethod
    def zero(exact: bool = False) -> "Mat2":
        if exact:
            return Mat2(GR_ZERO, GR_ZERO, GR_ZERO, GR_ZERO)
        return Mat2(0j, 0j, 0j, 0j)

    @staticmethod
    def diag(x, y) -> "Mat2":
        if isinstance(x, GaussianRational) or isinstance(y, GaussianRational):
            x = x if isinstance(x, GaussianRational) else GaussianRational(x)
            y = y if isinstance(y, GaussianRational) else GaussianRational(y)
            return Mat2(x, GR_ZERO, GR_ZERO, y)
        return Mat2(complex(x), 0j, 0j, complex(y))

    @staticmethod
    def from_rows(rows) -> "Mat2":
        (a, b), (c, d) = rows
        return Mat2(a, b, c, d)

    # -- predicates --------------------------------------------------------

    @property
    def exact(self) -> bool:
        return is_exact(self.a)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    # -- ring operations ---------------------------------------------------

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def scale(self, s) -> "Mat2":
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s)

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def inv(self) -> "Mat2":
        det = self.det()
        if (not det) if self.exact else det == 0:
            raise SingularMatrix("matrix has zero determinant")
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def dagger(self) -> "Mat2":
        return Mat2(
            self.a.conjugate(),
            self.c.conjugate(),
            self.b.conjugate(),
            self.d.conjugate(),
        )

    def conj_by(self, g: "Mat2") -> "Mat2":
        """g * self * g^{-1}."""
        return g * self * g.inv()

    # -- norms and comparisons ---------------------------------------------

    def frob2(self):
        """Squared Frobenius norm (exact Fraction on the exact backend)."""
        return abs2(self.a) + abs2(self.b) + abs2(self.c) + abs2(self.d)

    def frob(self) -> float:
        return math.sqrt(float(self.frob2()))

    def is_zero(self, tol: float = DEFAULT_ABS_TOL) -> bool:
        if self.exact:
            return not (self.a or self.b or self.c or self.d)
        return self.frob() <= tol

    def approx_eq(self, o: "Mat2", tol: float = DEFAULT_ABS_TOL) -> bool:
        return (self - o).is_zero(tol)

    def __eq__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return (
            self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d
        )

    def __hash__(self):
        return hash(self.entries())

    def to_float(self) -> "Mat2":
        if not self.exact:
            return self
        return Mat2(complex(self.a), complex(self.b), complex(self.c), complex(self.d))

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def commutator(x: Mat2, y: Mat2) -> Mat2:
    return x * y - y * x


# -- structural checks ------------------------------------------------------


def is_special_unitary(m: Mat2, tol: float = DEFAULT_ABS_TOL) -> bool:
    ident = Mat2.identity(exact=m.exact)
    if m.exact:
        return (m.dagger() * m) == ident and m.det() == GR_ONE
    return (m.dagger() * m - ident).frob() <= tol and abs(m.det() - 1) <= tol


def is_algebra_element(m: Mat2, tol: float = DEFAULT_ABS_TOL) -> bool:
    """Anti-Hermitian and traceless."""
    if m.exact:
        return (m.dagger() + m).is_zero() and not m.trace()
    return (m.dagger() + m).frob() <= tol and abs(m.trace()) <= tol


def is_unimodular(m: Mat2, tol: float = DEFAULT_ABS_TOL) -> bool:
    if m.exact:
        return m.det() == GR_ONE
    return abs(m.det() - 1) <= tol


def require_unimodular(m: Mat2, tol: float = DEFAULT_ABS_TOL) -> None:
    if not is_unimodular(m, tol):
        raise NotUnimodular(f"determinant {m.det()} != 1")


def _require_float(m: Mat2, op: str) -> None:
    if m.exact:
        raise FloatOnlyOperation(f"{op} is only defined on the float backend")


# -- algebra basis and coordinates -------------------------------------------

E1 = Mat2(0j, 0.5j, 0.5j, 0j)
E2 = Mat2(0j, 0.5 + 0j, -0.5 + 0j, 0j)
E3 = Mat2(0.5j, 0j, 0j, -0.5j)
BASIS = (E1, E2, E3)


def algebra_from_vector(x) -> Mat2:
    """sum x_k E_k for a real 3-vector x."""
    x1, x2, x3 = (float(v) for v in x)
    return Mat2(
        0.5j * x3,
        0.5 * (1j * x1 + x2),
        0.5 * (1j * x1 - x2),
        -0.5j * x3,
    )


def vector_from_algebra(m: Mat2) -> np.ndarray:
    """Coordinates of m in the E basis: x_k = <E_k, m> = -2 tr(E_k m)."""
    mm = m.to_float()
    return np.array([(-2 * (e * mm).trace()).real for e in BASIS])


def algebra_norm_sq(m: Mat2):
    """|m|^2 = -2 tr(m^2); exact Fraction on the exact backend."""
    v = (m * m).trace() * -2
    if is_exact(v):
        return v.re
    return v.real


# -- exponentials and polar decomposition ------------------------------------


def _sinhc(lam: complex) -> complex:
    if abs(lam) < 1e-6:
        l2 = lam * lam
        return 1 + l2 / 6 + l2 * l2 / 120
    return cmath.sinh(lam) / lam


def exp_traceless(m: Mat2) -> Mat2:
    """exp of a traceless 2x2 matrix: cosh(l) I + sinh(l)/l m, l^2 = -det m."""
    _require_float(m, "exp")
    lam = cmath.sqrt(-m.det())
    co = cmath.cosh(lam)
    si = _sinhc(lam)
    return Mat2(co + si * m.a, si * m.b, si * m.c, co + si * m.d)


def su2_exp(m: Mat2) -> Mat2:
    """exp of an algebra element; equals cos|t| I + sinc|t| m with t^2 = det m."""
    _require_float(m, "su2_exp")
    return exp_traceless(m)


def polar_compose(u: Mat2, alg: Mat2) -> Mat2:
    """u * exp(i alg): unitary times positive factor, a unimodular matrix."""
    _require_float(u, "polar_compose")
    return u * exp_traceless(alg.to_float().scale(1j))


def polar_decompose(g: Mat2, tol: float = DEFAULT_ABS_TOL):
    """Inverse of :func:`polar_compose`.

    Returns (u, alg) with u special unitary, alg anti-Hermitian traceless
    and ``g = u * exp(i alg)``.  Raises NotUnimodular when det g != 1.
    """
    _require_float(g, "polar_decompose")
    require_unimodular(g, tol)
    h = g.dagger() * g
    tr_h = h.trace().real
    c = math.sqrt(tr_h + 2.0)
    p = (h + Mat2.identity()).scale(1.0 / c)
    u = g * p.inv()
    # log of the positive factor: p = cosh(s) I + (sinh(s)/s) H with |H| scale s
    half_tr = p.trace().real / 2.0
    s = math.acosh(max(half_tr, 1.0))
    p0 = p - Mat2.identity().scale(half_tr)
    if s < 1e-12:
        h_log = p0  # sinh(s)/s -> 1
    else:
        h_log = p0.scale(s / math.sinh(s))
    return u, h_log.scale(-1j)


# -- adjoint representations --------------------------------------------------


def adjoint_matrix(g: Mat2) -> np.ndarray:
    """3x3 matrix of X -> g X g^{-1} in the E basis; special orthogonal for unitary g."""
    gf = g.to_float()
    gi = gf.inv()
    cols = [vector_from_algebra(gf * e * gi) for e in BASIS]
    return np.column_stack(cols)


def ad_matrix(m: Mat2) -> np.ndarray:
    """3x3 matrix of X -> [m, X] in the E basis; skew-symmetric for algebra m."""
    mf = m.to_float()
    cols = [vector_from_algebra(commutator(mf, e)) for e in BASIS]
    return np.column_stack(cols)


# -- sampling -----------------------------------------------------------------


def haar_su2(rng: random.Random) -> Mat2:
    """Haar-uniform special unitary via the unit-quaternion sphere."""
    while True:
        q = [rng.gauss(0.0, 1.0) for _ in range(4)]
        n = math.sqrt(sum(v * v for v in q))
        if n > 1e-12:
            break
    w, x, y, z = (v / n for v in q)
    return Mat2(w + 1j * z, y + 1j * x, -y + 1j * x, w - 1j * z)


def random_algebra(rng: random.Random, bound: float = 1.0) -> Mat2:
    """Algebra element uniform in the ball |A| <= bound."""
    if bound <= 0:
        raise ValueError("bound must be positive")
    while True:
        v = [rng.gauss(0.0, 1.0) for _ in range(3)]
        n = math.sqrt(sum(c * c for c in v))
        if n > 1e-12:
            break
    r = bound * rng.random() ** (1.0 / 3.0)
    return algebra_from_vector([c * r / n for c in v])


def random_sl2c(rng: random.Random, bound: float = 1.0) -> Mat2:
    """Unimodular complex matrix u * exp(i A); entries stay within e^{bound/2}-ish."""
    return polar_compose(haar_su2(rng), random_algebra(rng, bound))


def random_gaussian_rational(rng: random.Random, max_num: int = 3, max_den: int = 3) -> GaussianRational:
    re = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    im = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    return GaussianRational(re, im)


def _nonzero_gaussian_rational(rng: random.Random, max_num: int = 3, max_den: int = 3) -> GaussianRational:
    while True:
        z = random_gaussian_rational(rng, max_num, max_den)
        if z:
            return z


def random_exact_unimodular(rng: random.Random, factors: int = 3) -> Mat2:
    """Exact unimodular matrix: product of shears and diagonal factors.

    Entries are Gaussian rationals with small numerators, determinant is
    exactly one by construction.
    """
    m = Mat2.identity(exact=True)
    for _ in range(factors):
        kind = rng.randrange(3)
        if kind == 0:
            s = random_gaussian_rational(rng)
            f = Mat2(GR_ONE, s, GR_ZERO, GR_ONE)
        elif kind == 1:
            s = random_gaussian_rational(rng)
            f = Mat2(GR_ONE, GR_ZERO, s, GR_ONE)
        else:
            s = _nonzero_gaussian_rational(rng)
            f = Mat2(s, GR_ZERO, GR_ZERO, GR_ONE / s)
        m = m * f
    return m


def sample(kind: str, seed: int, bound: float = 1.0, count: int = 1):
    """Seed-reproducible element sampling.

    kind is one of "su2", "su2-algebra", "sl2c", "sl2c-exact".
    """
    rng = random.Random(seed)
    makers = {
        "su2": lambda: haar_su2(rng),
        "su2-algebra": lambda: random_algebra(rng, bound),
        "sl2c": lambda: random_sl2c(rng, bound),
        "sl2c-exact": lambda: random_exact_unimodular(rng),
    }
    if kind not in makers:
        raise ValueError(f"unknown sample kind {kind!r}")
    return [makers[kind]() for _ in range(count)]
