"""Falsification harness for radicality of the relation ideal.

The complement of the relation ideal is spanned by monomials with strict
pair part and no triples.  Radicality of the ideal is equivalent to: no
nonzero complement polynomial squares into the ideal.  The harness attacks
that statement two ways:

1. contrapositive sampling -- random nonzero complement polynomials f of
   bounded degree: the complement part of f^2 must never vanish;
2. proof-path comparison -- for f supported on a single degree class, the
   top-degree complement coefficients of f^2 must equal the convolution
   F_(I,K) = sum f_(I',K') f_(I'',K'') over index products landing on
   (I,K), computed without any polynomial multiplication.

A RadicalViolation from either check would be a counterexample to
radicality (none exists; the exception type documents the contract).

The module also exposes the partition bookkeeping used in the underlying
induction: for a strict pair sequence J, the degree class splits by the
intersection size |K & J|, and coefficient vectors annihilating every
proper-subsequence partition satisfy a binomial proportionality across the
|K & J| classes.  ``binomial_identity_check`` verifies that implication on
exactly solved random data.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from ..errors import RadicalViolation
from .indexsets import Monomial, index_product, monomials_below, monomials_of_degree
from .poly import TracePoly, format_poly
from .adapted import x_part


def degree_class(mu):
    """Monomials of the complement basis with exact degree vector mu."""
    return [Monomial(singles, pairs) for singles, pairs in monomials_of_degree(mu)]


def class_sums(coeffs: dict, j_pairs) -> list:
    """Sums of the coefficients over the classes |K & J| = 0, 1, ..., |J|.

    ``coeffs`` maps complement monomials of one degree class to rationals.
    The classes partition the support; this is checked before summing.
    """
    j_set = set(j_pairs)
    sums = [Fraction(0)] * (len(j_set) + 1)
    seen = 0
    for mono, value in coeffs.items():
        size = len(set(mono.pairs) & j_set)
        if size > len(j_set):
            raise ValueError("intersection larger than J")
        sums[size] += Fraction(value)
        seen += 1
    if seen != len(coeffs):
        raise ValueError("classes failed to partition the support")
    return sums


def top_product_coefficients(coeffs: dict, mu) -> dict:
    """F_(I,K): convolve a degree-mu coefficient vector through the index product.

    Returns a map over the full degree-2mu class (zero entries included).
    """
    two_mu = tuple(2 * v for v in mu)
    out = {mono: Fraction(0) for mono in degree_class(two_mu)}
    monos = list(coeffs)
    for m1 in monos:
        for m2 in monos:
            singles, pairs = index_product((m1.singles, m1.pairs), (m2.singles, m2.pairs))
            key = Monomial(singles, pairs)
            out[key] += Fraction(coeffs[m1]) * Fraction(coeffs[m2])
    return out


def _random_fraction(rng: random.Random, zero_ok: bool = True) -> Fraction:
    while True:
        f = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if f or zero_ok:
            return f


def _random_support_poly(rng: random.Random, pool) -> TracePoly:
    """Random nonzero polynomial supported on a random subset of pool."""
    while True:
        terms = {}
        for mono in pool:
            if rng.random() < 0.5:
                c = _random_fraction(rng)
                if c:
                    terms[mono] = c
        if terms:
            return TracePoly(terms)


@dataclass
class RadicalReport:
    n: int
    mu: tuple
    trials: int
    seed: int
    square_checks: int = 0
    proof_path_checks: int = 0
    max_support: int = 0
    violations: int = 0
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mu": list(self.mu),
            "trials": self.trials,
            "seed": self.seed,
            "square_checks": self.square_checks,
            "proof_path_checks": self.proof_path_checks,
            "max_support": self.max_support,
            "violations": self.violations,
            "notes": list(self.notes),
        }


def radical_spot_check(n: int, mu, trials: int, seed: int) -> RadicalReport:
    """Run both falsification sub-checks for one degree bound.

    Raises RadicalViolation (carrying the offending polynomial) if any
    sampled nonzero complement polynomial squares into the ideal, or if
    the convolution route and the multiplication route disagree on the
    top-degree coefficients of a square.
    """
    if n < 2:
        raise ValueError("need at least two matrix indices")
    mu = tuple(int(v) for v in mu)
    if len(mu) != n:
        raise ValueError("degree vector length must equal n")
    rng = random.Random(seed)
    report = RadicalReport(n=n, mu=mu, trials=trials, seed=seed)

    pool_below = [Monomial(s, k) for s, k in monomials_below(mu)]
    top_class = degree_class(mu)

    for _ in range(trials):
        f = _random_support_poly(rng, pool_below)
        report.max_support = max(report.max_support, len(f.terms))
        if x_part(f * f).is_zero():
            report.violations += 1
            raise RadicalViolation(
                f"nonzero complement polynomial squares into the ideal: {format_poly(f)}",
                witness=f,
            )
        report.square_checks += 1

        coeffs = {mono: _random_fraction(rng) for mono in top_class}
        if not any(coeffs.values()):
            coeffs[top_class[0]] = Fraction(1)
        expected = top_product_coefficients(coeffs, mu)
        f_top = TracePoly(coeffs)
        square_x = x_part(f_top * f_top)
        two_mu = tuple(2 * v for v in mu)
        direct = {}
        for mono, c in square_x.terms.items():
            if mono.degree(n) == two_mu:
                direct[mono] = c
        for mono, c in expected.items():
            if direct.get(mono, Fraction(0)) != c:
                report.violations += 1
                raise RadicalViolation(
                    "convolution and multiplication routes disagree at "
                    f"{mono!r}: {c} vs {direct.get(mono, Fraction(0))}",
                    witness=f_top,
                )
        for mono, c in direct.items():
            if c != expected.get(mono, Fraction(0)):
                report.violations += 1
                raise RadicalViolation(
                    f"unexpected top-degree coefficient at {mono!r}", witness=f_top
                )
        report.proof_path_checks += 1
    return report


# -- exact linear algebra for the partition-identity check --------------------


def rational_nullspace(rows, width: int):
    """Basis of the nullspace of a rational matrix, via exact elimination."""
    matrix = [list(map(Fraction, row)) for row in rows]
    pivots = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c]), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = 1 / matrix[r][c]
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c]:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -matrix[row_idx][fc]
        basis.append(vec)
    return basis


def binomial_identity_check(n: int, mu, j_pairs, seed: int, trials: int = 20) -> bool:
    """Check the partition proportionality on exactly constructed data.

    Coefficient vectors on the degree class of mu that annihilate every
    class sum of every proper subsequence of J must satisfy

        S(class i of J) = (-1)^(r-i) C(r, i) S(class r of J),  r = |J|.

    Random elements of the exact solution space are tested; returns True
    when every trial satisfies the identity.
    """
    mu = tuple(int(v) for v in mu)
    j_pairs = tuple(sorted(tuple(p) for p in j_pairs))
    monos = degree_class(mu)
    index = {m: c for c, m in enumerate(monos)}
    rows = []
    r = len(j_pairs)
    for size in range(r):
        for sub in itertools.combinations(j_pairs, size):
            j_set = set(sub)
            for i in range(len(sub) + 1):
                row = [Fraction(0)] * len(monos)
                for m, c in index.items():
                    if len(set(m.pairs) & j_set) == i:
                        row[c] = Fraction(1)
                rows.append(row)
    basis = rational_nullspace(rows, len(monos))
    rng = random.Random(seed)
    for _ in range(trials):
        vec = [Fraction(0)] * len(monos)
        for b in basis:
            w = Fraction(rng.randint(-5, 5))
            vec = [v + w * bv for v, bv in zip(vec, b)]
        coeffs = {m: vec[index[m]] for m in monos}
        sums = class_sums(coeffs, j_pairs)
        top = sums[r]
        for i in range(r + 1):
            if sums[i] != (-1) ** (r - i) * comb(r, i) * top:
                return False
    return True
