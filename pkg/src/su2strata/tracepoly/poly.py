"""Exact polynomials in the trace coordinates t_i, t_ij, t_ijk.

Coefficients are rationals; monomials form a free commutative monoid, so
products never invoke relations between the variables.  The text grammar
is the one the command line speaks:

    poly   := term (("+" | "-") term)*
    term   := ["-"] factor ("*" factor)*
    factor := rational | tvar ["^" natural]
    tvar   := "t[" i "]" | "t[" i "," j "]" | "t[" i "," j "," k "]"

with strictly increasing indices inside brackets and rationals written as
"p" or "p/q".
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import PolyIndexError, PolySyntaxError
from .indexsets import ONE, Monomial


class TracePoly:
    """Map monomial -> nonzero rational coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "TracePoly":
        return cls({ONE: Fraction(c)})

    @classmethod
    def single(cls, i: int) -> "TracePoly":
        return cls({Monomial((i,)): Fraction(1)})

    @classmethod
    def pair(cls, i: int, j: int) -> "TracePoly":
        return cls({Monomial((), ((i, j),)): Fraction(1)})

    @classmethod
    def triple(cls, i: int, j: int, k: int) -> "TracePoly":
        return cls({Monomial((), (), ((i, j, k),)): Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "TracePoly":
        return cls({mono: Fraction(coeff)})

    # -- ring structure --------------------------------------------------------

    def __add__(self, other: "TracePoly") -> "TracePoly":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, 0) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return TracePoly(out)

    def __sub__(self, other: "TracePoly") -> "TracePoly":
        return self + (-other)

    def __neg__(self) -> "TracePoly":
        return TracePoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "TracePoly") -> "TracePoly":
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                new = out.get(m, 0) + c1 * c2
                if new:
                    out[m] = new
                else:
                    out.pop(m, None)
        return TracePoly(out)

    def scale(self, c) -> "TracePoly":
        c = Fraction(c)
        return TracePoly({m: c * v for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "TracePoly":
        if k < 0:
            raise ValueError("negative power")
        out = TracePoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TracePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def max_index(self) -> int:
        return max((m.max_index() for m in self.terms), default=0)

    def degree(self, n: int | None = None):
        """Lexicographic maximum of the monomial degree vectors, or None for 0."""
        if not self.terms:
            return None
        if n is None:
            n = self.max_index()
        return max(m.degree(n) for m in self.terms)

    def __repr__(self):
        return f"TracePoly({format_poly(self)!r})"

    # -- evaluation --------------------------------------------------------------

    def eval(self, mats) -> object:
        """Substitute the trace values of a matrix tuple; exact in, exact out."""
        from ..scalars import GaussianRational

        mats = list(mats)
        n = len(mats)
        if self.max_index() > n:
            raise PolyIndexError(
                f"polynomial mentions index {self.max_index()} but the tuple has length {n}"
            )
        cache = {}

        def value(key):
            if key not in cache:
                prod = mats[key[0] - 1]
                for idx in key[1:]:
                    prod = prod * mats[idx - 1]
                cache[key] = prod.trace()
            return cache[key]

        exact = mats[0].exact if mats else False
        total = GaussianRational(0) if exact else 0j
        for mono, coeff in self.terms.items():
            term = GaussianRational(coeff) if exact else complex(coeff)
            for i in mono.singles:
                term = term * value((i,))
            for p in mono.pairs:
                term = term * value(p)
            for t in mono.triples:
                term = term * value(t)
            total = total + term
        return total


def pair_generator(i: int, j: int) -> TracePoly:
    """2 (t_ij^2 - t_i t_j t_ij + t_i^2 + t_j^2 - 4): the pair relation."""
    if not 1 <= i < j:
        raise PolyIndexError(f"pair indices ({i},{j}) must be strictly increasing")
    tij = TracePoly.pair(i, j)
    ti = TracePoly.single(i)
    tj = TracePoly.single(j)
    return (tij * tij - ti * tj * tij + ti * ti + tj * tj - TracePoly.constant(4)).scale(2)


def triple_generator(i: int, j: int, k: int) -> TracePoly:
    """2 t_ijk - t_ij t_k - t_ik t_j - t_jk t_i + t_i t_j t_k: the triple relation."""
    if not 1 <= i < j < k:
        raise PolyIndexError(f"triple indices ({i},{j},{k}) must be strictly increasing")
    ti, tj, tk = TracePoly.single(i), TracePoly.single(j), TracePoly.single(k)
    return (
        TracePoly.triple(i, j, k).scale(2)
        - TracePoly.pair(i, j) * tk
        - TracePoly.pair(i, k) * tj
        - TracePoly.pair(j, k) * ti
        + ti * tj * tk
    )


# -- parsing and formatting -----------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<tvar>t\[)|(?P<op>[\^\*\+\-\],]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("num"):
            out.append(("num", m.group("num"), m.start("num")))
        elif m.group("tvar"):
            out.append(("t[", "t[", m.start("tvar")))
        else:
            out.append((m.group("op"), m.group("op"), m.start("op")))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, n: int | None):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = n

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text))

    def take(self, kind=None):
        tok = self.peek()
        if tok[0] is None:
            raise PolySyntaxError("unexpected end of input", tok[2])
        if kind is not None and tok[0] != kind:
            raise PolySyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> TracePoly:
        if not self.tokens:
            raise PolySyntaxError("empty polynomial", 0)
        total = TracePoly()
        sign = 1
        first = True
        while True:
            tok = self.peek()
            if tok[0] is None:
                if first:
                    raise PolySyntaxError("empty polynomial", tok[2])
                break
            if not first:
                if tok[0] not in ("+", "-"):
                    raise PolySyntaxError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
                sign = 1 if self.take()[0] == "+" else -1
            else:
                sign = 1
                if tok[0] == "-":
                    self.take()
                    sign = -1
                elif tok[0] == "+":
                    self.take()
            total = total + self._term().scale(sign)
            first = False
        return total

    def _term(self) -> TracePoly:
        term = self._factor()
        while self.peek()[0] == "*":
            self.take("*")
            term = term * self._factor()
        return term

    def _factor(self) -> TracePoly:
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return TracePoly.constant(Fraction(tok[1]))
        if tok[0] == "t[":
            start = tok[2]
            self.take()
            indices = [self._index()]
            while self.peek()[0] == ",":
                self.take(",")
                indices.append(self._index())
            self.take("]")
            if len(indices) > 3:
                raise PolyIndexError("at most three indices per variable", start)
            if any(indices[i] >= indices[i + 1] for i in range(len(indices) - 1)):
                raise PolyIndexError(
                    f"indices {indices} must be strictly increasing", start
                )
            if self.n is not None and indices[-1] > self.n:
                raise PolyIndexError(
                    f"index {indices[-1]} exceeds the tuple length {self.n}", start
                )
            if len(indices) == 1:
                base = TracePoly.single(indices[0])
            elif len(indices) == 2:
                base = TracePoly.pair(*indices)
            else:
                base = TracePoly.triple(*indices)
            if self.peek()[0] == "^":
                self.take("^")
                etok = self.take("num")
                if "/" in etok[1]:
                    raise PolySyntaxError("exponent must be a natural number", etok[2])
                base = base ** int(etok[1])
            return base
        raise PolySyntaxError(f"expected a factor, found {tok[1]!r}", tok[2])

    def _index(self) -> int:
        tok = self.take("num")
        if "/" in tok[1]:
            raise PolySyntaxError("index must be an integer", tok[2])
        value = int(tok[1])
        if value < 1:
            raise PolyIndexError(f"index {value} must be >= 1", tok[2])
        return value


def parse_poly(text: str, n: int | None = None) -> TracePoly:
    """Parse the textual grammar; errors carry character offsets."""
    return _Parser(text, n).parse()


def _format_monomial(mono: Monomial) -> str:
    from collections import Counter

    factors = []
    for key, mult in sorted(Counter(mono.singles).items()):
        factors.append((f"t[{key}]", mult))
    for key, mult in sorted(Counter(mono.pairs).items()):
        factors.append((f"t[{key[0]},{key[1]}]", mult))
    for key, mult in sorted(Counter(mono.triples).items()):
        factors.append((f"t[{key[0]},{key[1]},{key[2]}]", mult))
    return "*".join(f"{name}^{m}" if m > 1 else name for name, m in factors)


def format_poly(p: TracePoly) -> str:
    """Canonical text form; parse(format(p)) == p."""
    if not p.terms:
        return "0"
    parts = []
    for mono in sorted(p.terms, key=lambda m: m.sort_key()):
        coeff = p.terms[mono]
        mono_text = _format_monomial(mono)
        mag = abs(coeff)
        if mono.is_one():
            body = str(mag)
        elif mag == 1:
            body = mono_text
        else:
            body = f"{mag}*{mono_text}"
        parts.append(("-" if coeff < 0 else "+", body))
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
