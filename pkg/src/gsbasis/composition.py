"""Compositions of monic rules, closure checking and Shirshov completion.

For rules ``p``, ``q`` with leading monomials ``P`` and ``Q``:

* intersection: ``P a = b Q = w`` with a proper overlap (``len(b) < len(P)``),
  value ``p a - b q``;
* inclusion: ``a P b = Q = w`` with ``a`` non-empty, value ``a p b - q``.

:func:`complete` adds the monic normal forms of non-vanishing compositions,
processing ambiguity words smallest first, and keeps the rule set
inter-reduced after every addition.
"""

from __future__ import annotations

import enum
import heapq
import logging
from dataclasses import dataclass

from .errors import InconsistentPresentationError
from .freealg import Polynomial, deglex_key, poly_mul_monomial
from .rewrite import Rule, RewriteSystem, make_rule

log = logging.getLogger(__name__)


class Kind(enum.Enum):
    INTERSECTION = "intersection"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Composition:
    kind: Kind
    p_id: int
    q_id: int
    w: tuple
    value: Polynomial
    a: tuple = ()
    b: tuple = ()


def _intersections(P, Q, same):
    # yields overlap lengths k: suffix of P of length k equals prefix of Q
    lp, lq = len(P), len(Q)
    for k in range(1, min(lp, lq) + 1):
        if same and k == lp:
            continue
        if P[lp - k:] == Q[:k]:
            yield k


def _inclusions(P, Q):
    # start positions of P strictly inside Q with a non-empty left factor
    lp = len(P)
    for i in range(1, len(Q) - lp + 1):
        if Q[i:i + lp] == P:
            yield i


def _intersection_value(p: Rule, q: Rule, k):
    P, Q = p.lhs, q.lhs
    a = Q[k:]
    b = P[:len(P) - k]
    value = poly_mul_monomial((), p.relation, a) - poly_mul_monomial(b, q.relation, ())
    return P + a, a, b, value


def _inclusion_value(p: Rule, q: Rule, i):
    P, Q = p.lhs, q.lhs
    a = Q[:i]
    b = Q[i + len(P):]
    value = poly_mul_monomial(a, p.relation, b) - q.relation
    return Q, a, b, value


def compositions(p: Rule, q: Rule):
    """Every intersection and inclusion composition of ``p`` with ``q``."""
    out = []
    same = p.id == q.id and p.lhs == q.lhs
    for k in _intersections(p.lhs, q.lhs, same):
        w, a, b, value = _intersection_value(p, q, k)
        out.append(Composition(Kind.INTERSECTION, p.id, q.id, w, value, a, b))
    if not same:
        for i in _inclusions(p.lhs, q.lhs):
            w, a, b, value = _inclusion_value(p, q, i)
            out.append(Composition(Kind.INCLUSION, p.id, q.id, w, value, a, b))
    return out


def reduces_to_zero(c: Composition, S: RewriteSystem) -> bool:
    """True iff the composition vanishes modulo ``S`` using only frames below ``c.w``."""
    trace = []
    nf = S.normal_form(c.value, trace)
    wk = deglex_key(c.w)
    for step in trace:
        frame = step.a + S.rule(step.rule_id).lhs + step.b
        if deglex_key(frame) >= wk:
            raise AssertionError(f"reduction frame {frame} is not below ambiguity {c.w}")
    return not nf


def all_compositions(S: RewriteSystem):
    for p in S.rules:
        for q in S.rules:
            yield from compositions(p, q)


def is_closed(S: RewriteSystem):
    """Return ``(True, None)`` or ``(False, witness)`` for the first failing composition.

    Compositions are examined in deg-lex order of their ambiguity words.
    """
    comps = sorted(all_compositions(S), key=lambda c: (deglex_key(c.w), c.p_id, c.q_id,
                                                       c.kind.value, c.a, c.b))
    for c in comps:
        if S.normal_form(c.value):
            return False, c
    return True, None


@dataclass
class CompletionReport:
    system: RewriteSystem
    rounds: int
    compositions_examined: int
    rules_added: int
    truncated: bool = False
    reason: str = ""

    @property
    def closed(self) -> bool:
        return not self.truncated

    def summary(self) -> str:
        status = f"truncated ({self.reason})" if self.truncated else "closed"
        return (f"rules: {len(self.system)}\n"
                f"rules added: {self.rules_added}\n"
                f"rounds: {self.rounds}\n"
                f"compositions examined: {self.compositions_examined}\n"
                f"status: {status}")

    __str__ = summary


DEFAULT_LIMITS = dict(max_rule_length=128, max_rules=10**5, max_rounds=10**4)


class _Completion:
    """Mutable working state; every exposed system is a fresh immutable snapshot."""

    def __init__(self, S0: RewriteSystem):
        self.generators = S0.generators
        self.order = S0.order
        self.rules = {r.id: r for r in S0.rules}
        self.next_id = max(self.rules, default=-1) + 1
        self.queue = []
        self.system = S0
        self.added = 0

    def snapshot(self):
        self.system = RewriteSystem(sorted(self.rules.values(), key=lambda r: r.id),
                                    self.generators, self.order)
        return self.system

    def enqueue_pairs(self, new: Rule):
        for other in list(self.rules.values()):
            for p, q in ((new, other), (other, new)) if other.id != new.id else ((new, new),):
                for k in _intersections(p.lhs, q.lhs, p.id == q.id):
                    w = p.lhs + q.lhs[k:]
                    heapq.heappush(self.queue, (deglex_key(w), p.id, q.id, 0, k))
                if p.id != q.id:
                    for i in _inclusions(p.lhs, q.lhs):
                        heapq.heappush(self.queue, (deglex_key(q.lhs), p.id, q.id, 1, i))

    def seed_all(self):
        ordered = sorted(self.rules.values(), key=lambda r: r.id)
        for p in ordered:
            for q in ordered:
                for k in _intersections(p.lhs, q.lhs, p.id == q.id):
                    w = p.lhs + q.lhs[k:]
                    heapq.heappush(self.queue, (deglex_key(w), p.id, q.id, 0, k))
                if p.id != q.id:
                    for i in _inclusions(p.lhs, q.lhs):
                        heapq.heappush(self.queue, (deglex_key(q.lhs), p.id, q.id, 1, i))

    def value_of(self, entry):
        _, pid, qid, kind, pos = entry
        p, q = self.rules.get(pid), self.rules.get(qid)
        if p is None or q is None:
            return None
        if kind == 0:
            return _intersection_value(p, q, pos)[3]
        return _inclusion_value(p, q, pos)[3]

    def add(self, poly: Polynomial):
        """Insert the monic form of ``poly`` and restore inter-reduction."""
        try:
            rule = make_rule(poly, self.order, self.next_id)
        except InconsistentPresentationError:
            raise InconsistentPresentationError(
                "completion derived a nonzero constant: the presented algebra is zero") from None
        self.next_id += 1
        self.added += 1
        self.rules[rule.id] = rule
        self.enqueue_pairs(rule)
        self._interreduce_after(rule)

    def _interreduce_after(self, new: Rule):
        work = [new]
        while work:
            new = work.pop()
            if new.id not in self.rules:
                continue
            lhs = new.lhs
            # rules whose left side contains the new left side are retired and re-reduced
            retired = [r for r in self.rules.values()
                       if r.id != new.id and _contains(r.lhs, lhs)]
            for r in retired:
                del self.rules[r.id]
            S = self.snapshot()
            for r in retired:
                rest = S.normal_form(r.relation)
                if rest:
                    rule = make_rule(rest, self.order, self.next_id)
                    self.next_id += 1
                    self.rules[rule.id] = rule
                    self.enqueue_pairs(rule)
                    work.append(rule)
            if retired:
                S = self.snapshot()
            changed = False
            for r in list(self.rules.values()):
                if any(_contains(u, lhs) for u in r.rhs):
                    self.rules[r.id] = Rule(r.lhs, S.normal_form(r.rhs), r.id)
                    changed = True
            if changed:
                self.snapshot()


def _contains(word, factor):
    lf = len(factor)
    if lf > len(word):
        return False
    for i in range(len(word) - lf + 1):
        if word[i:i + lf] == factor:
            return True
    return False


def interreduce(S: RewriteSystem) -> RewriteSystem:
    """Drop rules whose left side contains another left side; normalize right sides.

    A dropped relation that does not vanish modulo the remaining rules is
    re-inserted in monic form, so the ideal is unchanged.
    """
    rules = {r.id: r for r in S.rules}
    next_id = max(rules, default=-1) + 1
    while True:
        ordered = sorted(rules.values(), key=lambda r: r.id)
        victim = None
        for r in ordered:
            if any(o.id != r.id and _contains(r.lhs, o.lhs) for o in ordered):
                victim = r
                break
        if victim is None:
            break
        del rules[victim.id]
        rest = S.with_rules(sorted(rules.values(), key=lambda r: r.id))
        nf = rest.normal_form(victim.relation)
        if nf:
            # nf is standard for the remaining rules, so its left side is new
            rules[next_id] = make_rule(nf, S.order, next_id)
            next_id += 1
    base = S.with_rules(sorted(rules.values(), key=lambda r: r.id))
    return base.with_rules(Rule(r.lhs, base.normal_form(r.rhs), r.id) for r in base.rules)


def complete(S0: RewriteSystem, max_rule_length=128, max_rules=10**5, max_rounds=10**4,
             progress=None) -> CompletionReport:
    """Run Shirshov completion on ``S0``.

    Limits never raise: tripping one returns a report with ``truncated=True``.
    The returned system has ids renumbered 0..k-1 in creation order.
    """
    for r in S0.rules:
        if not r.lhs:
            raise InconsistentPresentationError("presentation contains a constant relation")
    state = _Completion(interreduce(S0))
    state.seed_all()
    rounds = 0
    examined = 0
    last_len = None
    truncated, reason = False, ""
    while True:
        while state.queue:
            entry = heapq.heappop(state.queue)
            length = entry[0][0]
            if length != last_len:
                last_len = length
                rounds += 1
                if rounds > max_rounds:
                    truncated, reason = True, f"max rounds {max_rounds} exceeded"
                    break
            value = state.value_of(entry)
            if value is None:
                continue
            examined += 1
            nf = state.system.normal_form(value)
            if not nf:
                continue
            lead = max(nf, key=deglex_key)
            if not lead:
                raise InconsistentPresentationError(
                    "completion derived a nonzero constant: the presented algebra is zero")
            if len(lead) > max_rule_length:
                truncated, reason = True, f"rule of length {len(lead)} exceeds {max_rule_length}"
                break
            if len(state.rules) + 1 > max_rules:
                truncated, reason = True, f"more than {max_rules} rules"
                break
            state.add(nf)
            if progress is not None:
                progress(state)
        if truncated:
            break
        closed, witness = is_closed(state.system)
        if closed:
            break
        # safety net: re-seed every pair and keep going
        log.info("closure check failed at %s; re-seeding", witness.w)
        state.seed_all()
    final = state.system.renumbered()
    return CompletionReport(final, rounds, examined, state.added, truncated, reason)
