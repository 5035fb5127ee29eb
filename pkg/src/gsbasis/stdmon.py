"""Standard monomials of a rewriting system: counting, enumeration and group structure.

Standard words are exactly the words accepted by the factor automaton of the
left sides, so counts come from dynamic programming over automaton states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateRuleError,
    FactorizationError,
    InfiniteLanguageError,
    NonStandardWordError,
)
from .rewrite import RewriteSystem

INFINITE = math.inf


class StandardAutomaton:
    """Deterministic complete automaton accepting exactly the standard words."""

    def __init__(self, factor_automaton):
        fa = factor_automaton
        self.alphabet_size = fa.alphabet_size
        self.delta = fa.delta
        self.dead = fa.dead
        self.start = 0
        if self.dead[0]:
            raise DegenerateRuleError("the empty word is reducible")
        self._finite = None

    @property
    def num_states(self):
        return len(self.delta)

    def accepts(self, w) -> bool:
        delta, dead = self.delta, self.dead
        s = self.start
        for x in w:
            s = delta[s][x]
            if dead[s]:
                return False
        return True

    def successors(self, s):
        delta, dead = self.delta, self.dead
        return [(x, t) for x, t in enumerate(delta[s]) if not dead[t]]

    def is_finite(self) -> bool:
        """No cycle through live states reachable from the start."""
        if self._finite is None:
            white, grey, black = 0, 1, 2
            color = [white] * self.num_states
            color[self.start] = grey
            stack = [(self.start, iter(self.successors(self.start)))]
            finite = True
            while stack and finite:
                s, it = stack[-1]
                for _, t in it:
                    if color[t] == grey:
                        finite = False
                        break
                    if color[t] == white:
                        color[t] = grey
                        stack.append((t, iter(self.successors(t))))
                        break
                else:
                    color[s] = black
                    stack.pop()
            self._finite = finite
        return self._finite

    def require_finite(self):
        if not self.is_finite():
            raise InfiniteLanguageError("the set of standard monomials is infinite")

    def counts_by_length(self):
        """``counts[L]`` = number of standard words of length L (finite languages only)."""
        self.require_finite()
        frontier = {self.start: 1}
        counts = []
        while frontier:
            counts.append(sum(frontier.values()))
            nxt = {}
            for s, c in frontier.items():
                for _, t in self.successors(s):
                    nxt[t] = nxt.get(t, 0) + c
            frontier = nxt
        return counts


def build_automaton(S: RewriteSystem) -> StandardAutomaton:
    if not len(S):
        raise DegenerateRuleError("need at least one rule")
    return StandardAutomaton(S.automaton)


def _auto(S):
    return S if isinstance(S, StandardAutomaton) else build_automaton(S)


def count_standard(S):
    """Number of standard monomials, or ``math.inf``."""
    A = _auto(S)
    if not A.is_finite():
        return INFINITE
    return sum(A.counts_by_length())


def length_counts(S):
    """Coefficients of the length generating function of the standard monomials."""
    return _auto(S).counts_by_length()


def even_count(S) -> int:
    counts = _auto(S).counts_by_length()
    return sum(counts[0::2])


def enumerate_standard(S, max_length=None):
    """Iterate standard words in ascending deg-lex order.

    ``max_length`` is mandatory when the language is infinite.
    """
    A = _auto(S)
    if max_length is None and not A.is_finite():
        raise InfiniteLanguageError("unbounded enumeration of an infinite language")
    return _enumerate(A, max_length)


def _enumerate(A, max_length):
    level = [((), A.start)]
    length = 0
    while level:
        for w, _ in level:
            yield w
        length += 1
        if max_length is not None and length > max_length:
            return
        # extending a lex-sorted level letter by letter keeps it lex-sorted
        level = [(w + (x,), t) for w, s in level for x, t in A.successors(s)]


def longest_standard(S):
    """The deg-lex-maximal standard word."""
    A = _auto(S)
    A.require_finite()
    longest = {}

    def depth(root):
        stack = [(root, iter(A.successors(root)))]
        while stack:
            u, it = stack[-1]
            for _, t in it:
                if t not in longest:
                    stack.append((t, iter(A.successors(t))))
                    break
            else:
                longest[u] = max((1 + longest[t] for _, t in A.successors(u)), default=0)
                stack.pop()
        return longest[root]

    s = A.start
    remaining = depth(s)
    w = []
    while remaining:
        x, t = max((x, t) for x, t in A.successors(s) if longest[t] == remaining - 1)
        w.append(x)
        s = t
        remaining -= 1
    return tuple(w)


def multiply(u, v, S: RewriteSystem):
    """Standard word equal to ``u * v``; both inputs must be standard."""
    u, v = tuple(u), tuple(v)
    for w in (u, v):
        if not S.is_standard(w):
            raise NonStandardWordError(f"{S.generators.format_word(w)} is not standard")
    nf = S.normal_form(u + v)
    if len(nf) != 1:
        raise ValueError("product is not a single monomial; not a group presentation")
    (w, c), = nf.items()
    if c != 1:
        raise ValueError("product has a non-unit coefficient; not a group presentation")
    return w


@dataclass
class CosetTower:
    """``levels[0]`` is M_2 (all standard words in s1, s2); ``levels[k-2]`` is M_k."""

    levels: list
    rank: int

    @property
    def sizes(self):
        return [len(level) for level in self.levels]

    def factorize(self, w):
        """Split ``w`` as ``m_2 m_3 ... m_n`` with ``m_k`` in M_k."""
        w = tuple(w)
        pieces = []
        rest = w
        for k in range(self.rank, 2, -1):
            letter = k - 1
            idx = rest.index(letter) if letter in rest else len(rest)
            pieces.append(rest[idx:])
            rest = rest[:idx]
        pieces.append(rest)
        pieces.reverse()
        for k, (piece, level) in enumerate(zip(pieces, self._sets), start=2):
            if piece not in level:
                raise FactorizationError(
                    f"piece {piece} of {w} is not a representative at level {k}")
        return pieces

    def __post_init__(self):
        self._sets = [set(level) for level in self.levels]


def coset_tower(S: RewriteSystem) -> CosetTower:
    """Right coset representatives for the parabolic chain <s1,s2> < <s1,s2,s3> < ...

    Verifies that every standard word factors through the tower and that the
    level sizes multiply to the total count.
    """
    n = S.generators.rank
    if n < 2:
        raise ValueError("a coset tower needs at least two generators")
    words = list(enumerate_standard(S))
    levels = [[w for w in words if max(w, default=0) <= 1]]
    for k in range(3, n + 1):
        levels.append([w for w in words if not w or (w[0] == k - 1 and max(w) <= k - 1)])
    tower = CosetTower(levels, n)
    seen = set()
    for w in words:
        pieces = tuple(tower.factorize(w))
        if pieces in seen:
            raise FactorizationError(f"factorization of {w} is not unique")
        seen.add(pieces)
    if math.prod(tower.sizes) != len(words):
        raise FactorizationError(
            f"level sizes {tower.sizes} do not multiply to {len(words)} standard words")
    return tower


def action_table(S: RewriteSystem):
    """``table[i][x]`` = deg-lex index of ``multiply(word_i, s_x)``.

    Returns ``(words, table)``.
    """
    words = list(enumerate_standard(S))
    index = {w: i for i, w in enumerate(words)}
    n = S.generators.rank
    table = []
    for w in words:
        row = []
        for x in range(n):
            row.append(index[multiply(w, (x,), S)])
        table.append(row)
    return words, table


def format_action_table(table) -> str:
    lines = [f"count {len(table)}"]
    lines.extend(" ".join(str(j) for j in row) for row in table)
    return "\n".join(lines) + "\n"


def parse_action_table(text: str):
    lines = [l for l in text.splitlines() if l.strip()]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "count":
        raise ValueError("action table must start with 'count n'")
    n = int(head[1])
    rows = [[int(t) for t in l.split()] for l in lines[1:]]
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, found {len(rows)}")
    return rows
