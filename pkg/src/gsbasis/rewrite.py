"""Oriented monic rules and reduction to normal form.

A :class:`Rule` ``lhs -> rhs`` stands for the monic relation ``lhs - rhs``
whose leading monomial is ``lhs``.  A :class:`RewriteSystem` bundles rules
with a factor automaton over their left sides, so that a word of length n is
scanned once in O(n + matches).

Reduction always works on the deg-lex-largest reducible monomial, at the
leftmost occurrence of a left side, lowest rule id on ties.  Because that
choice depends only on the monomial itself, reducing terms independently
gives the same normal form as reducing the polynomial as a whole.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction

from .automaton import FactorAutomaton
from .errors import (
    EmptyPolynomialError,
    InconsistentPresentationError,
    ParseError,
)
from .freealg import (
    GeneratorSet,
    MonomialOrder,
    Polynomial,
    deglex_key,
    leading_term,
)

_ONE = Fraction(1)


@dataclass(frozen=True)
class Rule:
    lhs: tuple
    rhs: Polynomial
    id: int = 0

    @property
    def relation(self) -> Polynomial:
        """The monic polynomial ``lhs - rhs``."""
        return Polynomial.monomial(self.lhs) - self.rhs

    def format(self, generators: GeneratorSet) -> str:
        return f"{generators.format_word(self.lhs)} -> {generators.format_polynomial(self.rhs)}"


def make_rule(p: Polynomial, order: MonomialOrder | None = None, id: int = 0) -> Rule:
    """Orient ``p`` as a rule after dividing by its leading coefficient."""
    if not p:
        raise EmptyPolynomialError("cannot orient the zero polynomial")
    w, alpha = leading_term(p, order)
    if not w:
        raise InconsistentPresentationError(f"relation {p!r} is a nonzero constant")
    inv = 1 / Fraction(alpha)
    rhs = {u: -c * inv for u, c in p.items() if u != w}
    return Rule(w, Polynomial._raw(rhs), id)


@dataclass(frozen=True, eq=False)
class ReductionStep:
    """One rewrite: the polynomial dropped by ``coef * a * (lhs - rhs) * b``."""

    coef: Fraction
    a: tuple
    rule_id: int
    b: tuple


class RewriteSystem:
    """An immutable set of rules together with a factor automaton on their left sides."""

    def __init__(self, rules, generators: GeneratorSet, order: MonomialOrder | None = None):
        self.generators = generators
        self.order = order if order is not None else MonomialOrder(generators)
        rules = list(rules)
        seen = {}
        ids = set()
        for r in rules:
            generators.check_word(r.lhs)
            if not r.lhs:
                raise InconsistentPresentationError("rule with empty left side")
            if r.lhs in seen:
                raise ValueError(f"two rules share the left side {r.lhs}")
            if r.id in ids:
                raise ValueError(f"duplicate rule id {r.id}")
            key = deglex_key(r.lhs)
            for u in r.rhs:
                generators.check_word(u)
                if deglex_key(u) >= key:
                    raise ValueError(f"rule {r.lhs} -> {u}: right side is not smaller")
            seen[r.lhs] = r
            ids.add(r.id)
        self.rules = tuple(rules)
        self._by_id = {r.id: r for r in rules}
        self.automaton = FactorAutomaton([r.lhs for r in rules], generators.rank)
        self.max_lhs = self.automaton.max_length

        # per-pattern data in automaton index order
        self._ids = [r.id for r in rules]
        self._lens = [len(r.lhs) for r in rules]
        self._rhs = [tuple(r.rhs.items()) for r in rules]
        self.monomial = all(len(t) <= 1 for t in self._rhs)
        self.reduced = all(len(self.automaton.occurrences(r.lhs)) == 1 for r in rules)
        # with reduced left sides at most one pattern ends at a state
        self._match = [m[0][1] if m else -1 for m in self.automaton.matches]

    # -- container protocol ------------------------------------------------

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __eq__(self, other):
        if not isinstance(other, RewriteSystem):
            return NotImplemented
        return self.generators == other.generators and self.rules == other.rules

    def __hash__(self):
        return hash((self.generators, self.rules))

    def __repr__(self):
        return f"RewriteSystem({len(self.rules)} rules over {list(self.generators.names)})"

    def rule(self, rule_id: int) -> Rule:
        return self._by_id[rule_id]

    @property
    def lhs_set(self):
        return frozenset(r.lhs for r in self.rules)

    def with_rules(self, rules) -> "RewriteSystem":
        return RewriteSystem(rules, self.generators, self.order)

    def renumbered(self) -> "RewriteSystem":
        """Same rules, ids reassigned 0..k-1 in current id order."""
        ordered = sorted(self.rules, key=lambda r: r.id)
        return self.with_rules(Rule(r.lhs, r.rhs, i) for i, r in enumerate(ordered))

    # -- reduction ---------------------------------------------------------

    def find_reducible(self, w):
        """Leftmost ``(rule_id, position)`` of a left side inside ``w``, or None."""
        best = None
        for start, idx in self.automaton.occurrences(w):
            key = (start, self._ids[idx])
            if best is None or key < best:
                best = key
        if best is None:
            return None
        return best[1], best[0]

    def is_standard(self, w) -> bool:
        return self.automaton.accepts(w)

    def normal_form(self, p, trace=None) -> Polynomial:
        """Reduce ``p`` (a Polynomial or a word) until every monomial is standard.

        If ``trace`` is a list, a :class:`ReductionStep` is appended for every
        rewrite, so that ``p - normal_form(p)`` equals the sum of
        ``coef * a * rule.relation * b`` over the trace.
        """
        if not isinstance(p, Polynomial):
            p = Polynomial.monomial(tuple(p))
        if trace is None and self.monomial and self.reduced:
            out = {}
            for w, c in p.items():
                r = self._rewrite_fast(w)
                if r is None:
                    continue
                d, u = r
                s = out.get(u, 0) + c * d
                if s:
                    out[u] = s
                else:
                    out.pop(u, None)
            return Polynomial._raw(out)

        pending = dict(p.items())
        heap = [(-len(w), tuple(-x for x in w), w) for w in pending]
        heapq.heapify(heap)
        out = {}
        while heap:
            w = heapq.heappop(heap)[2]
            c = pending.pop(w, 0)
            if not c:
                continue
            self._reduce_word(w, c, out, pending, heap, trace)
        return Polynomial._raw({w: c for w, c in out.items() if c})

    def reduce_word(self, w):
        """Normal form of a single word as ``(coefficient, word)``, or None if it vanishes.

        Only valid when every right side has at most one term.
        """
        if not self.monomial:
            raise ValueError("reduce_word needs a system with monomial right sides")
        if self.reduced:
            return self._rewrite_fast(tuple(w))
        nf = self.normal_form(Polynomial.monomial(tuple(w)))
        if not nf:
            return None
        (u, c), = nf.items()
        return c, u

    def _rewrite_fast(self, w):
        # reduced left sides: leftmost-ending occurrence is also leftmost-starting
        delta, match = self.automaton.delta, self._match
        lens, rhs = self._lens, self._rhs
        coef = _ONE
        out = []
        states = [0]
        inp = list(w)
        inp.reverse()
        s = 0
        while inp:
            x = inp.pop()
            s = delta[s][x]
            out.append(x)
            states.append(s)
            idx = match[s]
            if idx < 0:
                continue
            start = len(out) - lens[idx]
            del out[start:]
            del states[start + 1:]
            s = states[-1]
            r = rhs[idx]
            if not r:
                return None
            u, d = r[0]
            if d != 1:
                coef = coef * d
            inp.extend(reversed(u))
        return coef, tuple(out)

    def _reduce_word(self, w, coef, out, pending, heap, trace):
        auto = self.automaton
        delta, matches = auto.delta, auto.matches
        ids, lens, rhs = self._ids, self._lens, self._rhs
        maxlen = self.max_lhs
        outw = []
        states = [0]
        inp = list(w)
        inp.reverse()
        s = 0
        while inp:
            x = inp.pop()
            s = delta[s][x]
            outw.append(x)
            states.append(s)
            if not matches[s]:
                continue
            end = len(outw) - 1
            best = min((end + 1 - length, ids[idx], idx) for length, idx in matches[s])
            # a later-ending occurrence may still start further left
            t = s
            q = end
            k = len(inp) - 1
            while k >= 0 and q + 1 - maxlen + 1 <= best[0]:
                t = delta[t][inp[k]]
                q += 1
                k -= 1
                for length, idx in matches[t]:
                    cand = (q + 1 - length, ids[idx], idx)
                    if cand < best:
                        best = cand
            start, rid, idx = best
            stop = start + lens[idx]
            while len(outw) < stop:
                y = inp.pop()
                s = delta[s][y]
                outw.append(y)
                states.append(s)
            if trace is not None:
                trace.append(ReductionStep(coef, tuple(outw[:start]), rid, tuple(reversed(inp))))
            del outw[start:]
            del states[start + 1:]
            s = states[-1]
            r = rhs[idx]
            if len(r) == 1:
                u, d = r[0]
                if d != 1:
                    coef = coef * d
                inp.extend(reversed(u))
                continue
            prefix = tuple(outw)
            suffix = tuple(reversed(inp))
            for u, d in r:
                nw = prefix + u + suffix
                old = pending.get(nw)
                if old is None:
                    pending[nw] = coef * d
                    heapq.heappush(heap, (-len(nw), tuple(-x for x in nw), nw))
                else:
                    pending[nw] = old + coef * d
            return
        u = tuple(outw)
        v = out.get(u, 0) + coef
        out[u] = v


# -- module-level operations ---------------------------------------------------


def find_reducible(w, S: RewriteSystem):
    return S.find_reducible(w)


def normal_form(p, S: RewriteSystem, trace=None) -> Polynomial:
    return S.normal_form(p, trace)


def is_standard(w, S: RewriteSystem) -> bool:
    return S.is_standard(w)


def replay_trace(trace, S: RewriteSystem) -> Polynomial:
    """Sum of ``coef * a * relation * b`` over a reduction trace."""
    total = Polynomial()
    for step in trace:
        rel = S.rule(step.rule_id).relation
        total = total + Polynomial._raw(
            {step.a + u + step.b: step.coef * c for u, c in rel.items()})
    return total


# -- basis text format -----------------------------------------------------------


def format_basis(S: RewriteSystem) -> str:
    lines = [
        "generators: " + " ".join(S.generators.names),
        "order: " + S.order.describe(),
    ]
    for r in sorted(S.rules, key=lambda r: r.id):
        lines.append(r.format(S.generators))
    return "\n".join(lines) + "\n"


def parse_basis(text: str) -> RewriteSystem:
    """Read the ``generators:`` / ``order:`` / ``LHS -> RHS`` format.

    Rules get ids 0..k-1 in file order.  Blank lines and ``#`` comments are skipped.
    """
    generators = None
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head = line.strip()
        if head.startswith("generators:"):
            names = head[len("generators:"):].split()
            try:
                generators = GeneratorSet(names)
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
            continue
        if head.startswith("order:"):
            spec = head[len("order:"):].split()
            if not spec or spec[0] != "deglex":
                raise ParseError("only 'order: deglex ...' is supported", line=lineno,
                                 column=raw.find("order:") + 7)
            names = [t for t in spec[1:] if t != "<"]
            if generators is None:
                raise ParseError("'order:' before 'generators:'", line=lineno)
            if names and tuple(names) != generators.names:
                raise ParseError("order precedence must list the generators in order",
                                 line=lineno)
            continue
        if generators is None:
            raise ParseError("rule before 'generators:' header", line=lineno, column=1)
        if "->" not in line:
            raise ParseError("expected 'LHS -> RHS'", line=lineno, column=1)
        left, right = line.split("->", 1)
        try:
            lhs = generators.parse_word(left)
        except ParseError as exc:
            raise ParseError(_strip_where(exc), line=lineno, column=exc.column) from None
        offset = len(left) + 3
        try:
            rhs = generators.parse_polynomial(right)
        except ParseError as exc:
            col = None if exc.column is None else exc.column + offset - 1
            raise ParseError(_strip_where(exc), line=lineno, column=col) from None
        rules.append(Rule(lhs, rhs, len(rules)))
    if generators is None:
        raise ParseError("missing 'generators:' header")
    try:
        return RewriteSystem(rules, generators)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _strip_where(exc: ParseError) -> str:
    return re.sub(r"^(line \d+, )?column \d+: |^line \d+: ", "", str(exc))
