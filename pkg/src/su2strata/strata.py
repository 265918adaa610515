"""Orbit-type classification and orbit-closure witnesses.

The diagonal conjugation action on tuples has three stabilizer classes:

* point strata -- every group entry is +-1 and every algebra entry is
  zero; labeled by the sign vector nu;
* torus stratum -- everything commutes (simultaneously diagonalizable)
  but the tuple is not central;
* principal stratum -- everything else.

On tuples of determinant-one complex matrices, membership in the closure
of the torus stratum is the simultaneous vanishing of the pair and triple
relations; membership in a point stratum additionally pins every trace to
+-2.  The closure witness makes the membership constructive: it conjugates
the tuple to simultaneous upper-triangular form and exhibits the diagonal
tuple reached by conjugating with diag(1/n, n) as n grows (off-diagonal
entries fall off as 1/n^2).
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExactWitnessUnavailable, NotInClosure
from .invariants import (
    pair_relation_commutator,
    triple_relation_commutator,
)
from .lattice import PhasePoint
from .matrices import Mat2, commutator, random_gaussian_rational
from .scalars import (
    DEFAULT_ABS_TOL,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    gaussian_sqrt,
    is_zero,
)

POINT = "point"
TORUS = "torus"
PRINCIPAL = "principal"


@dataclass(frozen=True)
class StratumLabel:
    kind: str
    nu: tuple = None

    def __post_init__(self):
        if self.kind not in (POINT, TORUS, PRINCIPAL):
            raise ValueError(f"unknown stratum kind {self.kind!r}")
        if self.kind == POINT:
            if self.nu is None or any(v not in (1, -1) for v in self.nu):
                raise ValueError("point stratum needs a +-1 sign vector")
            object.__setattr__(self, "nu", tuple(self.nu))
        elif self.nu is not None:
            raise ValueError("only point strata carry a sign vector")

    def __str__(self):
        if self.kind == POINT:
            return "point(" + ",".join("+" if v == 1 else "-" for v in self.nu) + ")"
        return self.kind


def point_stratum(nu) -> StratumLabel:
    return StratumLabel(POINT, tuple(nu))


TORUS_STRATUM = StratumLabel(TORUS)
PRINCIPAL_STRATUM = StratumLabel(PRINCIPAL)


def _central_sign(m: Mat2, tol: float):
    """+1, -1 when m is (near) the corresponding central element, else None."""
    ident = Mat2.identity(exact=m.exact)
    if m.exact:
        if m == ident:
            return 1
        if m == -ident:
            return -1
        return None
    if (m - ident).frob() <= tol:
        return 1
    if (m + ident).frob() <= tol:
        return -1
    return None


def orbit_type(point: PhasePoint, tol: float = DEFAULT_ABS_TOL) -> StratumLabel:
    """Stabilizer class of a phase point under diagonal conjugation."""
    signs = [_central_sign(a, tol) for a in point.a]
    if all(s is not None for s in signs) and all(x.is_zero(tol) for x in point.alg):
        return point_stratum(signs)
    mats = list(point.a) + list(point.alg)
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if not commutator(mats[i], mats[j]).is_zero(tol):
                return PRINCIPAL_STRATUM
    return TORUS_STRATUM


def in_torus_closure(mats, tol: float = DEFAULT_ABS_TOL) -> bool:
    """All pair and triple relations vanish (exactly, or within tol)."""
    mats = list(mats)
    n = len(mats)
    for i in range(n):
        for j in range(i + 1, n):
            if not is_zero(pair_relation_commutator(mats[i], mats[j]), tol):
                return False
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if not is_zero(
                    triple_relation_commutator(mats[i], mats[j], mats[k]), tol
                ):
                    return False
    return True


def in_point_stratum(mats, nu, tol: float = DEFAULT_ABS_TOL) -> bool:
    """Torus-closure membership plus tr(a_i) = 2 nu_i for every i."""
    mats = list(mats)
    if len(nu) != len(mats):
        raise ValueError("sign vector length must match the tuple length")
    if not in_torus_closure(mats, tol):
        return False
    for a, sign in zip(mats, nu):
        target = GaussianRational(2 * sign) if a.exact else complex(2 * sign)
        if not is_zero(a.trace() - target, tol):
            return False
    return True


@dataclass(frozen=True)
class ClosureWitness:
    """Constructive orbit-closure data for a tuple in the torus closure.

    ``conjugator`` maps the input to the simultaneously upper-triangular
    ``triangular`` tuple; ``diagonal_limit`` keeps only the diagonals, and
    ``scaled(n)`` shows the convergence: conjugating the triangular tuple
    by diag(1/n, n) scales every off-diagonal entry by 1/n^2.
    """

    conjugator: Mat2
    triangular: tuple
    diagonal_limit: tuple
    scaling: str = (
        "conjugation by diag(1/n, n) scales off-diagonal entries by 1/n^2; "
        "the limit n -> infinity is the diagonal tuple"
    )

    def scaled(self, n: int):
        exact = self.conjugator.exact
        if exact:
            d = Mat2.diag(GaussianRational(Fraction(1, n)), GaussianRational(n))
        else:
            d = Mat2.diag(1.0 / n, float(n))
        return tuple(t.conj_by(d) for t in self.triangular)


def _eigenvalues(m: Mat2, tol: float):
    """Both eigenvalues of a determinant-one matrix, sorted for determinism.

    Larger modulus first; modulus ties broken by larger phase.  Returns
    (lam1, lam2, defective) where defective means a double eigenvalue with
    a one-dimensional eigenspace.
    """
    t = m.trace()
    if m.exact:
        disc = t * t - GaussianRational(4)
        if not disc:
            lam = t / GaussianRational(2)
            return lam, lam, True
        root = gaussian_sqrt(disc)
        if root is None:
            raise ExactWitnessUnavailable(
                "eigenvalues live outside the Gaussian rationals; "
                "convert the tuple to the float backend"
            )
        two = GaussianRational(2)
        lam1, lam2 = (t + root) / two, (t - root) / two
        key = lambda z: (z.abs2(), cmath.phase(complex(z)))
    else:
        disc = t * t - 4
        if abs(disc) <= tol * tol:
            return t / 2, t / 2, True
        root = cmath.sqrt(disc)
        lam1, lam2 = (t + root) / 2, (t - root) / 2
        key = lambda z: (abs(z), cmath.phase(z))
    if key(lam2) > key(lam1):
        lam1, lam2 = lam2, lam1
    return lam1, lam2, False


def _eigenvector(m: Mat2, lam, tol: float):
    """Nonzero kernel vector of (m - lam)."""
    # rows of (m - lam I) are (a-lam, b) and (c, d-lam); a kernel vector is
    # orthogonal-ish to either: use (b, lam - a) or (lam - d, c)
    v1 = (m.b, lam - m.a)
    v2 = (lam - m.d, m.c)
    if m.exact:
        return v1 if (v1[0] or v1[1]) else v2
    n1 = abs(v1[0]) + abs(v1[1])
    n2 = abs(v2[0]) + abs(v2[1])
    return v1 if n1 >= n2 else v2


def _jordan_conjugator(m: Mat2, tol: float) -> Mat2:
    """Determinant-one g with g m g^{-1} upper triangular (diagonal if possible)."""
    lam1, lam2, defective = _eigenvalues(m, tol)
    if not defective:
        v1 = _eigenvector(m, lam1, tol)
        v2 = _eigenvector(m, lam2, tol)
        s = Mat2(v1[0], v2[0], v1[1], v2[1])
        d = s.det()
        if (not d) if m.exact else abs(d) <= tol:
            raise NotInClosure("eigenvectors are linearly dependent")
        # rescale the second column so the determinant is one
        s = Mat2(s.a, s.b / d, s.c, s.d / d)
        return s.inv()
    # defective: eigenvector v, generalized vector w with (m - lam) w = v
    v = _eigenvector(m, lam1, tol)
    shifted = m - Mat2.identity(exact=m.exact).scale(lam1)
    # solve row 1: shifted.a w1 + shifted.b w2 = v[0] (rows are proportional)
    if m.exact:
        use_first = bool(shifted.a) or bool(shifted.b)
        row = (shifted.a, shifted.b, v[0]) if use_first else (shifted.c, shifted.d, v[1])
        ra, rb, rhs = row
        w = (rhs / ra, GR_ZERO) if ra else (GR_ZERO, rhs / rb)
    else:
        if abs(shifted.a) + abs(shifted.b) >= abs(shifted.c) + abs(shifted.d):
            ra, rb, rhs = shifted.a, shifted.b, v[0]
        else:
            ra, rb, rhs = shifted.c, shifted.d, v[1]
        w = (rhs / ra, 0j) if abs(ra) >= abs(rb) else (0j, rhs / rb)
    s = Mat2(v[0], w[0], v[1], w[1])
    d = s.det()
    if (not d) if m.exact else abs(d) <= tol:
        raise NotInClosure("generalized eigenvector construction failed")
    # rescale the eigenvector column: [v/d | w] still triangularizes m
    s = Mat2(s.a / d, s.b, s.c / d, s.d)
    return s.inv()


def _swap_conjugator(exact: bool) -> Mat2:
    """Determinant-one matrix exchanging upper and lower triangular forms."""
    if exact:
        return Mat2(GR_ZERO, GR_ONE, -GR_ONE, GR_ZERO)
    return Mat2(0j, 1 + 0j, -1 + 0j, 0j)


def closure_witness(mats, tol: float = DEFAULT_ABS_TOL) -> ClosureWitness:
    """Triangularize a tuple in the torus closure and exhibit its diagonal limit."""
    mats = list(mats)
    if not mats:
        raise ValueError("empty tuple")
    exact = mats[0].exact
    if not in_torus_closure(mats, tol):
        raise NotInClosure("pair/triple relations do not vanish")
    first = next(
        (i for i, m in enumerate(mats) if _central_sign(m, tol) is None), None
    )
    ident = Mat2.identity(exact=exact)
    if first is None:
        # central tuple: already diagonal, nothing to scale
        return ClosureWitness(ident, tuple(mats), tuple(mats))
    g = _jordan_conjugator(mats[first], tol)
    tri = [m.conj_by(g) for m in mats]

    def upperish(m):
        return is_zero(m.c, tol)

    def lowerish(m):
        return is_zero(m.b, tol)

    if not all(upperish(m) or lowerish(m) for m in tri):
        raise NotInClosure("conjugated tuple is not triangular")
    if not all(upperish(m) for m in tri):
        if all(lowerish(m) for m in tri):
            j = _swap_conjugator(exact)
            g = j * g
            tri = [m.conj_by(j) for m in tri]
        else:
            raise NotInClosure("tuple mixes upper and lower triangular entries")
    zero = GR_ZERO if exact else 0j
    diag = [Mat2(m.a, zero, zero, m.d) for m in tri]
    return ClosureWitness(g, tuple(tri), tuple(diag))


_ORDER = {POINT: 0, TORUS: 1, PRINCIPAL: 2}


def hasse_compare(s1: StratumLabel, s2: StratumLabel) -> str:
    """Partial order of strata: every point < torus < principal.

    Distinct point strata are incomparable.
    """
    if s1.kind == POINT and s2.kind == POINT:
        if len(s1.nu) != len(s2.nu):
            raise ValueError("point strata of different tuple lengths")
        return "equal" if s1.nu == s2.nu else "incomparable"
    r1, r2 = _ORDER[s1.kind], _ORDER[s2.kind]
    if r1 == r2:
        return "equal"
    return "less" if r1 < r2 else "greater"


# -- samplers used by the zero-locus cross checks ------------------------------


def random_triangular_tuple(
    rng: random.Random, n: int, upper: bool = True, exact: bool = True
):
    """Tuple of simultaneously triangular exact unimodular matrices."""
    out = []
    for _ in range(n):
        while True:
            b = random_gaussian_rational(rng)
            if b:
                break
        c = random_gaussian_rational(rng)
        if upper:
            out.append(Mat2(b, c, GR_ZERO, GR_ONE / b))
        else:
            out.append(Mat2(b, GR_ZERO, c, GR_ONE / b))
    if not exact:
        out = [m.to_float() for m in out]
    return out


def random_diagonal_tuple(rng: random.Random, n: int, exact: bool = True):
    """Tuple of diagonal exact unimodular matrices diag(r, 1/r)."""
    out = []
    for _ in range(n):
        while True:
            r = random_gaussian_rational(rng)
            if r:
                break
        out.append(Mat2.diag(r, GR_ONE / r))
    if not exact:
        out = [m.to_float() for m in out]
    return out
