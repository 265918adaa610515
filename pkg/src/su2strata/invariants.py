"""Trace invariants of unimodular 2x2 matrix tuples and the stratum relations.

For a tuple (a_1, ..., a_N) of determinant-one matrices the conjugation
invariants are the traces

    t_i = tr(a_i),   t_ij = tr(a_i a_j),   t_ijk = tr(a_i a_j a_k)

over strictly increasing index sets.  The relations cutting out the closure
of the torus stratum are

    p2_ij  = tr([a_i, a_j]^2)
    p3_ijk = tr([a_i, a_j] a_k)

with the equivalent expanded forms (consequences of the Cayley-Hamilton
relation a^2 = tr(a) a - 1 and the three-matrix trace identity)

    p2_ij  = 2 (t_ij^2 - t_i t_j t_ij + t_i^2 + t_j^2 - 4)
    p3_ijk = 2 t_ijk - t_ij t_k - t_ik t_j - t_jk t_i + t_i t_j t_k.

Everything here is backend-agnostic: exact inputs give exact values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParams
from .matrices import Mat2, commutator
from .scalars import GaussianRational


def pair_relation_commutator(a: Mat2, b: Mat2):
    """tr([a, b]^2)."""
    c = commutator(a, b)
    return (c * c).trace()


def triple_relation_commutator(a: Mat2, b: Mat2, c: Mat2):
    """tr([a, b] c)."""
    return (commutator(a, b) * c).trace()


def pair_relation_expanded(a: Mat2, b: Mat2):
    """2 (t_ab^2 - t_a t_b t_ab + t_a^2 + t_b^2 - 4) from traces alone."""
    ta, tb = a.trace(), b.trace()
    tab = (a * b).trace()
    four = GaussianRational(4) if a.exact else 4.0
    return (tab * tab - ta * tb * tab + ta * ta + tb * tb - four) * 2


def triple_relation_expanded(a: Mat2, b: Mat2, c: Mat2):
    """2 t_abc - t_ab t_c - t_ac t_b - t_bc t_a + t_a t_b t_c from traces alone."""
    ta, tb, tc = a.trace(), b.trace(), c.trace()
    tab, tac, tbc = (a * b).trace(), (a * c).trace(), (b * c).trace()
    tabc = (a * b * c).trace()
    return tabc * 2 - tab * tc - tac * tb - tbc * ta + ta * tb * tc


def fundamental_identity_residual(a: Mat2, b: Mat2, c: Mat2):
    """tr(abc) + tr(acb) - tr(ab)tr(c) - tr(ac)tr(b) - tr(bc)tr(a) + tr(a)tr(b)tr(c).

    Vanishes for all 2x2 matrices.
    """
    ta, tb, tc = a.trace(), b.trace(), c.trace()
    return (
        (a * b * c).trace()
        + (a * c * b).trace()
        - (a * b).trace() * tc
        - (a * c).trace() * tb
        - (b * c).trace() * ta
        + ta * tb * tc
    )


def cayley_hamilton_residual(a: Mat2) -> Mat2:
    """a^2 - tr(a) a + 1; zero for every determinant-one matrix."""
    return a * a - a.scale(a.trace()) + Mat2.identity(exact=a.exact)


@dataclass
class InvariantTable:
    """All trace invariants and stratum relations of one tuple."""

    n: int
    t1: dict = field(default_factory=dict)  # i -> scalar
    t2: dict = field(default_factory=dict)  # (i, j), i < j -> scalar
    t3: dict = field(default_factory=dict)  # (i, j, k), i < j < k -> scalar
    p2: dict = field(default_factory=dict)  # (i, j) -> scalar
    p3: dict = field(default_factory=dict)  # (i, j, k) -> scalar

    def t2_any(self, i: int, j: int):
        """tr(a_i a_j) for any index order (the trace is symmetric)."""
        if i == j:
            raise KeyError("pair indices must differ")
        return self.t2[(i, j) if i < j else (j, i)]

    def t3_any(self, i: int, j: int, k: int):
        """tr(a_i a_j a_k) for any index order.

        Cyclic rotations leave the trace unchanged; a transposition is
        resolved through the three-matrix trace identity
        tr(acb) = tr(ab)t_c + tr(ac)t_b + tr(bc)t_a - t_a t_b t_c - tr(abc).
        """
        if len({i, j, k}) != 3:
            raise KeyError("triple indices must be distinct")
        lo, mid, hi = sorted((i, j, k))
        if (i, j, k) in ((lo, mid, hi), (mid, hi, lo), (hi, lo, mid)):
            return self.t3[(lo, mid, hi)]
        return (
            self.t2[(lo, mid)] * self.t1[hi]
            + self.t2[(lo, hi)] * self.t1[mid]
            + self.t2[(mid, hi)] * self.t1[lo]
            - self.t1[lo] * self.t1[mid] * self.t1[hi]
            - self.t3[(lo, mid, hi)]
        )

    def items(self):
        for i in sorted(self.t1):
            yield f"t[{i}]", self.t1[i]
        for (i, j) in sorted(self.t2):
            yield f"t[{i},{j}]", self.t2[(i, j)]
        for (i, j, k) in sorted(self.t3):
            yield f"t[{i},{j},{k}]", self.t3[(i, j, k)]
        for (i, j) in sorted(self.p2):
            yield f"pT[{i},{j}]", self.p2[(i, j)]
        for (i, j, k) in sorted(self.p3):
            yield f"pT[{i},{j},{k}]", self.p3[(i, j, k)]


def trace_invariants(mats) -> InvariantTable:
    """Fill the full invariant table of a tuple (1-based indices).

    The relation entries use the commutator definitions, so comparing them
    against the expanded forms is a genuine cross-check.
    """
    mats = list(mats)
    n = len(mats)
    if n < 1:
        raise ValueError("need at least one matrix")
    table = InvariantTable(n)
    for i in range(n):
        table.t1[i + 1] = mats[i].trace()
    for i in range(n):
        for j in range(i + 1, n):
            table.t2[(i + 1, j + 1)] = (mats[i] * mats[j]).trace()
            table.p2[(i + 1, j + 1)] = pair_relation_commutator(mats[i], mats[j])
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                table.t3[(i + 1, j + 1, k + 1)] = (mats[i] * mats[j] * mats[k]).trace()
                table.p3[(i + 1, j + 1, k + 1)] = triple_relation_commutator(
                    mats[i], mats[j], mats[k]
                )
    return table


def _as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise InvalidParams(f"expected an exact scalar, got {type(x).__name__}")


def mixed_triangular_tuple(alpha, beta, gamma, delta):
    """Length-3 tuple with one diagonal, one upper and one lower entry.

    Returns (diag(alpha, 1/alpha), [[beta, gamma], [0, 1/beta]],
    [[delta, 0], [eps, 1/delta]]) with eps chosen as
    -(1/gamma)(beta - 1/beta)(delta - 1/delta), which kills all three pair
    relations while the triple relation stays
    (alpha - 1/alpha) * gamma * eps.
    """
    alpha, beta, gamma, delta = (
        _as_gaussian(alpha),
        _as_gaussian(beta),
        _as_gaussian(gamma),
        _as_gaussian(delta),
    )
    one = GaussianRational(1)
    if not alpha or alpha == one or alpha == -one:
        raise InvalidParams("alpha must avoid 0 and +-1")
    if not gamma:
        raise InvalidParams("gamma must be nonzero")
    if not beta or not delta:
        raise InvalidParams("beta and delta must be nonzero")
    eps = -(one / gamma) * (beta - one / beta) * (delta - one / delta)
    zero = GaussianRational(0)
    return [
        Mat2(alpha, zero, zero, one / alpha),
        Mat2(beta, gamma, zero, one / beta),
        Mat2(delta, zero, eps, one / delta),
    ]
