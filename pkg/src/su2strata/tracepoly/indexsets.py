"""Index combinatorics for trace-coordinate monomials.

A monomial is a free commutative word in the variables t_i, t_ij, t_ijk,
recorded as three weakly increasing tuples:

* singles -- integers >= 1, repeats allowed;
* pairs   -- internally strictly increasing (i, j), repeats allowed;
* triples -- internally strictly increasing (i, j, k), repeats allowed.

Strict pair sequences (no repeated pair) double as subsets of the pair
set, with intersection / union / symmetric difference defined the obvious
way.  The degree vector of a monomial counts, per index value, how many
times it occurs across all three components; polynomials are compared by
the lexicographic maximum of their monomial degrees.
"""

from __future__ import annotations

import itertools
from collections import Counter

from ..errors import DegreeInfeasible


def _merge(a, b):
    return tuple(sorted(a + b))


def _is_sorted(seq):
    return all(seq[i] <= seq[i + 1] for i in range(len(seq) - 1))


class Monomial:
    """Canonical product of t-variables; hashable, immutable."""

    __slots__ = ("singles", "pairs", "triples", "_hash")

    def __init__(self, singles=(), pairs=(), triples=()):
        singles = tuple(sorted(int(i) for i in singles))
        pairs = tuple(sorted(tuple(p) for p in pairs))
        triples = tuple(sorted(tuple(t) for t in triples))
        for i in singles:
            if i < 1:
                raise ValueError(f"variable index {i} must be >= 1")
        for p in pairs:
            if len(p) != 2 or not (1 <= p[0] < p[1]):
                raise ValueError(f"pair {p} must be strictly increasing, >= 1")
        for t in triples:
            if len(t) != 3 or not (1 <= t[0] < t[1] < t[2]):
                raise ValueError(f"triple {t} must be strictly increasing, >= 1")
        object.__setattr__(self, "singles", singles)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "triples", triples)
        object.__setattr__(self, "_hash", hash((singles, pairs, triples)))

    def __setattr__(self, *_):
        raise AttributeError("Monomial is immutable")

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return (
            self.singles == other.singles
            and self.pairs == other.pairs
            and self.triples == other.triples
        )

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(
            _merge(self.singles, other.singles),
            _merge(self.pairs, other.pairs),
            _merge(self.triples, other.triples),
        )

    def is_one(self) -> bool:
        return not (self.singles or self.pairs or self.triples)

    @property
    def measure(self):
        """Rewrite-termination measure: (#triples, #pairs), lexicographic."""
        return (len(self.triples), len(self.pairs))

    def max_index(self) -> int:
        out = 0
        for i in self.singles:
            out = max(out, i)
        for p in self.pairs:
            out = max(out, p[1])
        for t in self.triples:
            out = max(out, t[2])
        return out

    def degree(self, n: int | None = None):
        """Occurrence counts per index value, as a tuple of length n."""
        if n is None:
            n = self.max_index()
        counts = [0] * n
        for i in self.singles:
            counts[i - 1] += 1
        for p in self.pairs:
            counts[p[0] - 1] += 1
            counts[p[1] - 1] += 1
        for t in self.triples:
            counts[t[0] - 1] += 1
            counts[t[1] - 1] += 1
            counts[t[2] - 1] += 1
        return tuple(counts)

    def weight(self) -> int:
        """Total variable weight |I| + 2|K| + 3|L|."""
        return len(self.singles) + 2 * len(self.pairs) + 3 * len(self.triples)

    def sort_key(self):
        return (self.weight(), self.triples, self.pairs, self.singles)

    def __repr__(self):
        return f"Monomial({self.singles}, {self.pairs}, {self.triples})"


ONE = Monomial()


def split_pairs(pairs):
    """Split a weakly increasing pair sequence K into (strict, halved).

    Each pair with odd multiplicity m contributes one copy to the strict
    part and (m-1)/2 copies to the halved part; even multiplicity m
    contributes m/2 copies to the halved part only.  Reassembling as
    strict + halved + halved recovers K.
    """
    strict = []
    halved = []
    for pair, mult in sorted(Counter(pairs).items()):
        if mult % 2:
            strict.append(pair)
            halved.extend([pair] * ((mult - 1) // 2))
        else:
            halved.extend([pair] * (mult // 2))
    return tuple(strict), tuple(sorted(halved))


def is_strict(pairs) -> bool:
    return all(pairs[i] < pairs[i + 1] for i in range(len(pairs) - 1))


def pair_intersection(k1, k2):
    return tuple(sorted(set(k1) & set(k2)))


def pair_union(k1, k2):
    return tuple(sorted(set(k1) | set(k2)))


def pair_xor(k1, k2):
    return tuple(sorted(set(k1) ^ set(k2)))


def flatten_pairs(pairs):
    """Weakly increasing sequence of all members of the given pairs."""
    return tuple(sorted(itertools.chain.from_iterable(pairs)))


def index_product(ik1, ik2):
    """Product on (singles, strict pairs): concatenate singles and the
    flattened common pairs, take the union of the pair sets.

    Degrees add under this product, mirroring t_ij^2 contributing the
    leading replacement t_i t_j t_ij.
    """
    i1, k1 = ik1
    i2, k2 = ik2
    common = pair_intersection(k1, k2)
    return (
        _merge(_merge(tuple(i1), tuple(i2)), flatten_pairs(common)),
        pair_union(k1, k2),
    )


def degree_vector(singles, pairs, n: int):
    return Monomial(singles, pairs).degree(n)


def _all_pair_candidates(mu):
    n = len(mu)
    return [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if mu[i] >= 1 and mu[j] >= 1
    ]


def _check_mu(mu):
    mu = tuple(int(v) for v in mu)
    if any(v < 0 for v in mu):
        raise DegreeInfeasible(f"degree vector {mu} has a negative entry")
    return mu


def monomials_of_degree(mu):
    """All (singles, strict-pairs) index data of the exact degree vector mu.

    The strict pair set ranges over subsets of the feasible pairs; the
    singles part is then uniquely determined by the residual counts.
    Deterministic ordering: by pair count, then pair set.
    """
    mu = _check_mu(mu)
    n = len(mu)
    candidates = _all_pair_candidates(mu)
    out = []
    for r in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, r):
            residual = list(mu)
            for i, j in combo:
                residual[i - 1] -= 1
                residual[j - 1] -= 1
            if any(v < 0 for v in residual):
                continue
            singles = tuple(
                itertools.chain.from_iterable(
                    [i + 1] * residual[i] for i in range(n)
                )
            )
            out.append((singles, combo))
    return out


def monomials_below(mu):
    """All (singles, strict-pairs) with degree componentwise <= mu."""
    mu = _check_mu(mu)
    n = len(mu)
    candidates = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n)]
    out = []
    for r in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, r):
            residual = list(mu)
            ok = True
            for i, j in combo:
                residual[i - 1] -= 1
                residual[j - 1] -= 1
                if residual[i - 1] < 0 or residual[j - 1] < 0:
                    ok = False
                    break
            if not ok:
                continue
            for counts in itertools.product(*(range(v + 1) for v in residual)):
                singles = tuple(
                    itertools.chain.from_iterable(
                        [i + 1] * counts[i] for i in range(n)
                    )
                )
                out.append((singles, combo))
    return out


def lex_less(d1, d2) -> bool:
    """Strict lexicographic comparison of equal-length degree vectors."""
    return tuple(d1) < tuple(d2)
