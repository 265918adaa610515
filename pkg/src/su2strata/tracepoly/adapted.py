"""Adapted basis, ideal decomposition and the approximate product formula.

Every monomial e_(I,K,L) pairs off with the basis element

    b-elem(I,K,L) = e_(I, strict(K), empty) * prod p2 over halved(K)
                                            * prod p3 over L,

where p2/p3 are the pair and triple relations.  Expanding the relation
products gives

    b-elem(I,K,L) = 2^(|halved(K)| + |L|) e_(I,K,L) + remainder,

with every remainder monomial strictly smaller in the measure
(#triples, #pairs).  Back-substituting along that well-founded measure
rewrites any polynomial in the adapted basis.  Basis elements with no
relation factor span the complement of the ideal generated by the
relations; the rest span the ideal itself.  ``x_part`` extracts the
complement component, so ideal membership is exactly ``x_part(p) == 0``.

``product_decompose`` splits a product of two complement basis monomials
into the leading complement monomial given by the index product, an ideal
part, and a complement remainder of strictly smaller degree.

Multiplying a basis element by single-index variables shifts its singles
component and nothing else, so all caches key on (pairs, triples) alone.
"""

from __future__ import annotations

from fractions import Fraction

from .indexsets import Monomial, index_product, is_strict, split_pairs
from .poly import TracePoly, pair_generator, triple_generator

_expansion_cache: dict = {}
_adapted_cache: dict = {}


def is_complement_key(mono: Monomial) -> bool:
    """True when the adapted basis element indexed by mono has no relation factor."""
    if mono.triples:
        return False
    return is_strict(mono.pairs)


def _core_expansion(pairs, triples) -> TracePoly:
    """Expansion of the basis element with empty singles component."""
    key = (pairs, triples)
    cached = _expansion_cache.get(key)
    if cached is not None:
        return cached
    strict, halved = split_pairs(pairs)
    poly = TracePoly.monomial(Monomial((), strict))
    for i, j in halved:
        poly = poly * pair_generator(i, j)
    for i, j, k in triples:
        poly = poly * triple_generator(i, j, k)
    _expansion_cache[key] = poly
    return poly


def basis_element_expansion(mono: Monomial) -> TracePoly:
    """The adapted basis element indexed by mono, expanded into monomials."""
    core = _core_expansion(mono.pairs, mono.triples)
    if not mono.singles:
        return core
    return TracePoly.monomial(Monomial(mono.singles)) * core


def _shift_singles(form: dict, singles) -> dict:
    if not singles:
        return form
    return {
        Monomial(singles + key.singles, key.pairs, key.triples): c
        for key, c in form.items()
    }


def _adapted_core(pairs, triples) -> dict:
    """Adapted coordinates of the monomial with empty singles component."""
    key = (pairs, triples)
    cached = _adapted_cache.get(key)
    if cached is not None:
        return cached
    strict, halved = split_pairs(pairs)
    if not halved and not triples:
        result = {Monomial((), pairs): Fraction(1)}
        _adapted_cache[key] = result
        return result
    mono = Monomial((), pairs, triples)
    lead = Fraction(1, 2 ** (len(halved) + len(triples)))
    result = {mono: lead}
    for m2, c2 in _core_expansion(pairs, triples).terms.items():
        if m2 == mono:
            continue  # the leading term, coefficient 2^(...)
        scale = lead * c2
        sub = _shift_singles(_adapted_core(m2.pairs, m2.triples), m2.singles)
        for m3, c3 in sub.items():
            new = result.get(m3, 0) - scale * c3
            if new:
                result[m3] = new
            else:
                result.pop(m3, None)
    _adapted_cache[key] = result
    return result


def adapted_form(p: TracePoly) -> dict:
    """Coordinates of p in the adapted basis, keyed by the (I,K,L) monomial."""
    out: dict = {}
    for mono, coeff in p.terms.items():
        core = _adapted_core(mono.pairs, mono.triples)
        for key, c in _shift_singles(core, mono.singles).items():
            new = out.get(key, 0) + coeff * c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def expand_adapted(form: dict) -> TracePoly:
    """Inverse of :func:`adapted_form`."""
    total = TracePoly()
    for key, coeff in form.items():
        total = total + basis_element_expansion(key).scale(coeff)
    return total


def x_part(p: TracePoly) -> TracePoly:
    """Component of p in the complement of the relation ideal.

    Complement basis elements are plain monomials, so the result is
    already expressed in monomials.
    """
    out = {}
    for key, coeff in adapted_form(p).items():
        if is_complement_key(key):
            out[key] = coeff
    return TracePoly(out)


def ideal_part(p: TracePoly) -> TracePoly:
    return p - x_part(p)


def ideal_member(p: TracePoly) -> bool:
    """True iff p lies in the ideal generated by the pair and triple relations."""
    return x_part(p).is_zero()


def product_decompose(m1: Monomial, m2: Monomial):
    """Split b_m1 * b_m2 into (leading monomial, ideal part, lower remainder).

    Both inputs must be complement basis monomials (strict pairs, no
    triples).  The three parts sum to the plain product; the leading
    monomial carries coefficient one and realizes the index product of the
    two monomials, the second lies in the relation ideal, and the
    remainder lies in the complement with strictly smaller degree.
    """
    for m in (m1, m2):
        if not is_complement_key(m):
            raise ValueError(f"{m!r} is not a complement basis monomial")
    product = TracePoly.monomial(m1 * m2)
    singles, pairs = index_product((m1.singles, m1.pairs), (m2.singles, m2.pairs))
    leading = Monomial(singles, pairs)
    xp = x_part(product)
    ideal = product - xp
    remainder = xp - TracePoly.monomial(leading)
    return leading, ideal, remainder


def clear_caches() -> None:
    _expansion_cache.clear()
    _adapted_cache.clear()
