"""Aho-Corasick factor automaton over integer alphabets.

The automaton is compiled into a complete DFA: ``delta[state][letter]`` is
always defined, failure links are folded in at build time.  ``matches[state]``
lists every pattern that ends at the current position, longest first.
"""

from __future__ import annotations

from collections import deque

from .errors import DegenerateRuleError


class FactorAutomaton:
    def __init__(self, patterns, alphabet_size: int):
        self.alphabet_size = n = alphabet_size
        self.patterns = [tuple(p) for p in patterns]
        goto = [{}]
        terminal = [[]]
        for index, pat in enumerate(self.patterns):
            if not pat:
                raise DegenerateRuleError("empty pattern matches everywhere")
            s = 0
            for x in pat:
                if not 0 <= x < n:
                    raise ValueError(f"letter {x} outside alphabet of size {n}")
                nxt = goto[s].get(x)
                if nxt is None:
                    nxt = len(goto)
                    goto[s][x] = nxt
                    goto.append({})
                    terminal.append([])
                s = nxt
            terminal[s].append(index)

        size = len(goto)
        depth = [0] * size
        fail = [0] * size
        delta = [None] * size
        matches = [()] * size
        delta[0] = [goto[0].get(x, 0) for x in range(n)]
        queue = deque()
        for x in range(n):
            t = goto[0].get(x)
            if t is not None:
                depth[t] = 1
                queue.append(t)
        while queue:
            s = queue.popleft()
            f = fail[s]
            own = tuple((depth[s], i) for i in terminal[s])
            matches[s] = own + matches[f]
            row = delta[f][:]
            for x, t in goto[s].items():
                fail[t] = delta[f][x]
                depth[t] = depth[s] + 1
                row[x] = t
                queue.append(t)
            delta[s] = row

        self.delta = delta
        self.fail = fail
        self.depth = depth
        self.matches = matches
        self.dead = [bool(m) for m in matches]
        self.max_length = max((len(p) for p in self.patterns), default=0)

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def occurrences(self, word):
        """All ``(start, pattern_index)`` pairs with the pattern occurring at ``start``."""
        delta, matches = self.delta, self.matches
        s = 0
        out = []
        for i, x in enumerate(word):
            s = delta[s][x]
            for length, idx in matches[s]:
                out.append((i + 1 - length, idx))
        return out

    def accepts(self, word) -> bool:
        """True iff no pattern occurs as a factor of ``word``."""
        delta, dead = self.delta, self.dead
        s = 0
        for x in word:
            s = delta[s][x]
            if dead[s]:
                return False
        return True
