"""Independent check of the rewriting engine through the reflection representation.

Generator ``s_i`` acts on the root basis by ``alpha_j -> alpha_j - 2B(alpha_i, alpha_j) alpha_i``
with ``B(alpha_i, alpha_j) = -cos(pi/m_ij)``.  For bonds 2, 3 and 5 every entry
lies in Z[phi], so group elements are compared exactly.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .coxeter import CoxeterMatrix
from .errors import PossiblyInfiniteGroupError, UnsupportedBondError
from .golden import PHI, GMatrix, GoldenScalar
from .stdmon import enumerate_standard, multiply

# 2*cos(pi/m) for the bonds Q(phi) can host
_TWO_COS = {
    2: GoldenScalar(0),
    3: GoldenScalar(1),
    5: PHI,
}


@dataclass
class ReflectionRep:
    coxeter: CoxeterMatrix
    generators: list

    @property
    def rank(self):
        return self.coxeter.n


def build_rep(M: CoxeterMatrix) -> ReflectionRep:
    n = M.n
    for i in range(n):
        for j in range(n):
            if i != j and M[i, j] not in _TWO_COS:
                raise UnsupportedBondError(
                    f"bond m[{i + 1}][{j + 1}] = {M[i, j]} has cos(pi/m) outside Q(phi)")
    gens = []
    for i in range(n):
        rows = [[GoldenScalar(1 if r == c else 0) for c in range(n)] for r in range(n)]
        for j in range(n):
            rows[i][j] = GoldenScalar(-1) if i == j else _TWO_COS[M[i, j]]
        gens.append(GMatrix.from_scalars(rows))
    rep = ReflectionRep(M, gens)
    identity = GMatrix.identity(n)
    for i in range(n):
        if gens[i] @ gens[i] != identity:
            raise AssertionError(f"generator {i + 1} is not an involution")
        for j in range(i):
            prod = gens[i] @ gens[j]
            acc = identity
            for _ in range(M[i, j]):
                acc = acc @ prod
            if acc != identity:
                raise AssertionError(f"(s{i + 1} s{j + 1})^{M[i, j]} is not the identity")
    return rep


def word_to_matrix(w, rep: ReflectionRep) -> GMatrix:
    acc = GMatrix.identity(rep.rank)
    for x in w:
        acc = acc @ rep.generators[x]
    return acc


@dataclass
class GroupEnumeration:
    order: int
    elements: dict  # matrix key -> first word reaching it (breadth-first)


def enumerate_group(rep: ReflectionRep, cap: int = 10**6) -> GroupEnumeration:
    """Breadth-first closure of the identity under right multiplication by generators."""
    identity = GMatrix.identity(rep.rank)
    seen = {identity.key(): ()}
    queue = deque([(identity, ())])
    while queue:
        g, w = queue.popleft()
        for x, s in enumerate(rep.generators):
            h = g @ s
            k = h.key()
            if k not in seen:
                if len(seen) >= cap:
                    raise PossiblyInfiniteGroupError(f"more than {cap} elements")
                seen[k] = w + (x,)
                queue.append((h, w + (x,)))
    return GroupEnumeration(len(seen), seen)


def verify_relation(lhs, rhs, rep: ReflectionRep) -> bool:
    return word_to_matrix(lhs, rep) == word_to_matrix(rhs, rep)


@dataclass
class HomomorphismReport:
    pairs_checked: int = 0
    exhaustive: bool = False
    injective: bool = True
    counterexample: tuple | None = None
    collision: tuple | None = None
    words: int = 0

    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.injective


def standard_matrices(S, rep: ReflectionRep):
    """Map each standard word to its matrix, reusing the matrix of its prefix."""
    mats = {(): GMatrix.identity(rep.rank)}
    words = []
    for w in enumerate_standard(S):
        if w:
            mats[w] = mats[w[:-1]] @ rep.generators[w[-1]]
        words.append(w)
    return words, mats


def verify_homomorphism(S, rep: ReflectionRep, samples=None, seed=0) -> HomomorphismReport:
    """Check ``matrix(multiply(u, v)) == matrix(u) @ matrix(v)``.

    ``samples=None`` checks every ordered pair; otherwise ``samples`` pairs are
    drawn with ``random.Random(seed)``.  Injectivity is always checked on the
    full standard set.
    """
    words, mats = standard_matrices(S, rep)
    report = HomomorphismReport(words=len(words))
    by_key = {}
    for w in words:
        k = mats[w].key()
        if k in by_key:
            report.injective = False
            report.collision = (by_key[k], w)
            break
        by_key[k] = w

    if samples is None:
        report.exhaustive = True
        pairs = ((u, v) for u in words for v in words)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(words), rng.choice(words)) for _ in range(samples))
    for u, v in pairs:
        w = multiply(u, v, S)
        report.pairs_checked += 1
        if mats.get(w) is None or mats[w] != mats[u] @ mats[v]:
            report.counterexample = (u, v, w)
            break
    return report
