"""Words, the deg-lex monomial order and polynomials of the free associative algebra.

A word is a plain tuple of generator indices; index 0 is the smallest
generator.  Labels only appear at the text boundary, handled by
:class:`GeneratorSet`.

    >>> X = GeneratorSet(["s1", "s2", "s3"])
    >>> p = X.parse_polynomial("s3 s2 s3 - s2 s3 s2")
    >>> X.format_word(leading_term(p)[0])
    's3 s2 s3'
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import EmptyPolynomialError, InvalidWordError, ParseError

Word = tuple  # tuple[int, ...]

EMPTY: Word = ()


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def deglex_key(w):
    """Sort key realising deg-lex: shorter first, then leftmost letter decides."""
    return (len(w), w)


class GeneratorSet:
    """Ordered generator labels; list position is the precedence used by deg-lex."""

    def __init__(self, names: Sequence[str]):
        names = list(names)
        if not names:
            raise ValueError("need at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator labels in {names}")
        for name in names:
            if not _LABEL.fullmatch(name):
                raise ValueError(f"bad generator label {name!r}")
        self.names = tuple(names)
        self.index = {name: i for i, name in enumerate(names)}

    @classmethod
    def standard(cls, rank: int) -> "GeneratorSet":
        return cls([f"s{i}" for i in range(1, rank + 1)])

    @property
    def rank(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, GeneratorSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"GeneratorSet({list(self.names)!r})"

    def check_word(self, w: Word) -> Word:
        n = self.rank
        for x in w:
            if not (isinstance(x, int) and 0 <= x < n):
                raise InvalidWordError(f"letter {x!r} out of range for rank {n}")
        return tuple(w)

    # -- text I/O -----------------------------------------------------------

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        return " ".join(self.names[x] for x in w)

    def parse_word(self, text: str) -> Word:
        """Parse ``"s3 s2 s1"``, ``"s3*s2*s1"`` or ``"1"``."""
        tokens = [t for t in re.split(r"[\s*]+", text.strip()) if t]
        if tokens == ["1"] or not tokens:
            if not tokens:
                raise ParseError("empty word text (use '1' for the identity)")
            return EMPTY
        letters = []
        for tok in tokens:
            try:
                letters.append(self.index[tok])
            except KeyError:
                col = text.find(tok) + 1
                raise ParseError(f"unknown generator {tok!r}", column=col) from None
        return tuple(letters)

    def format_polynomial(self, p: "Polynomial") -> str:
        if not p:
            return "0"
        parts = []
        for w, c in p.sorted_terms():
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if not w:
                body = str(a)
            elif a == 1:
                body = self.format_word(w)
            else:
                body = f"{a}*{self.format_word(w)}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def parse_polynomial(self, text: str) -> "Polynomial":
        """Parse terms joined by ``+``/``-`` with optional ``c*`` rational prefix."""
        src = text.replace("\u2212", "-")
        if src.strip() == "0":
            return Polynomial()
        terms: dict = {}
        sign = None
        column = 1
        for piece in re.split(r"([+-])", src):
            if piece in ("+", "-"):
                if sign is not None:
                    raise ParseError("two operators in a row", column=column)
                sign = 1 if piece == "+" else -1
            elif piece.strip():
                if sign is None and terms:
                    raise ParseError("missing operator", column=column)
                coef, w = self._parse_term(piece.strip(), column)
                c = terms.get(w, 0) + (sign or 1) * coef
                terms[w] = c
                sign = None
            column += len(piece)
        if sign is not None or not terms:
            raise ParseError("polynomial text is empty or ends with an operator", column=column)
        return Polynomial(terms)

    def _parse_term(self, tok, column):
        m = _COEF_PREFIX.fullmatch(tok)
        try:
            if m:
                return Fraction(m.group(1)), self.parse_word(m.group(2))
            if _RATIONAL.fullmatch(tok):
                return Fraction(tok), EMPTY
            return Fraction(1), self.parse_word(tok)
        except ParseError as exc:
            raise ParseError(str(exc), column=column) from None


_LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_RATIONAL = re.compile(r"\d+(?:/\d+)?")
_COEF_PREFIX = re.compile(r"(\d+(?:/\d+)?)\s*\*\s*(.+)", re.S)


class MonomialOrder:
    """Deg-lex order on words over a generator set (position 0 is smallest)."""

    kind = "deglex"

    def __init__(self, generators: GeneratorSet):
        self.generators = generators

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.generators == other.generators

    def __hash__(self):
        return hash((self.kind, self.generators))

    def __repr__(self):
        return f"MonomialOrder(deglex, {' < '.join(self.generators.names)})"

    def key(self, w: Word):
        return deglex_key(w)

    def compare(self, u: Word, v: Word) -> Ordering:
        return deglex_compare(u, v, self)

    def describe(self) -> str:
        return "deglex " + " < ".join(self.generators.names)


def deglex_compare(u: Word, v: Word, order: MonomialOrder | None = None) -> Ordering:
    if order is not None:
        order.generators.check_word(u)
        order.generators.check_word(v)
    ku, kv = deglex_key(tuple(u)), deglex_key(tuple(v))
    if ku < kv:
        return Ordering.LESS
    if ku > kv:
        return Ordering.GREATER
    return Ordering.EQUAL


class Polynomial(Mapping):
    """Immutable finite sum of ``coefficient * word`` with exact rational coefficients.

    Behaves as a read-only mapping from words to nonzero :class:`Fraction`
    coefficients.  The zero polynomial is the empty mapping.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        clean = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                if c:
                    w = tuple(w)
                    c = clean.get(w, 0) + Fraction(c)
                    if c:
                        clean[w] = c
                    else:
                        clean.pop(w, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, w: Word, c=1) -> "Polynomial":
        return cls({tuple(w): c})

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        # trusted constructor: keys are tuples, values nonzero Fractions
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    def __getitem__(self, w):
        return self._terms[tuple(w)]

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{w!r}: {c}" for w, c in self.sorted_terms())
        return f"Polynomial({{{inner}}})"

    def sorted_terms(self):
        """Terms in descending deg-lex order of their words."""
        return sorted(self._terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def words(self):
        return list(self._terms)

    def is_constant(self) -> bool:
        return all(not w for w in self._terms)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.monomial(EMPTY, other)
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.monomial(EMPTY, other)
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict = {}
            for u, a in self._terms.items():
                for v, b in other._terms.items():
                    w = u + v
                    c = out.get(w, 0) + a * b
                    if c:
                        out[w] = c
                    else:
                        out.pop(w, None)
            return Polynomial._raw(out)
        return poly_scale(other, self)

    def __rmul__(self, other):
        return poly_scale(other, self)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    out = dict(p._terms)
    for w, c in q._terms.items():
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return Polynomial._raw(out)


def poly_scale(c, p: Polynomial) -> Polynomial:
    c = Fraction(c)
    if not c:
        return Polynomial()
    return Polynomial._raw({w: c * a for w, a in p._terms.items()})


def poly_mul_monomial(a: Word, p: Polynomial, b: Word) -> Polynomial:
    """Return ``a * p * b``; concatenation is injective so no terms collide."""
    a, b = tuple(a), tuple(b)
    return Polynomial._raw({a + w + b: c for w, c in p._terms.items()})


def leading_term(p: Polynomial, order: MonomialOrder | None = None):
    """Deg-lex-maximal word of ``p`` with its coefficient."""
    if not p:
        raise EmptyPolynomialError("the zero polynomial has no leading term")
    w = max(p, key=deglex_key)
    return w, p[w]
