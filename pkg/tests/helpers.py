"""Shared test utilities: random words and a reducer with a random strategy."""

from functools import lru_cache

from gsbasis import complete, preset_presentation
from gsbasis.freealg import Polynomial, poly_add, poly_mul_monomial, poly_scale


@lru_cache(maxsize=None)
def completed(name):
    """Completed basis of a preset, computed once per session."""
    return complete(preset_presentation(name)).system


def random_word(rng, rank, max_len):
    return tuple(rng.randrange(rank) for _ in range(rng.randint(0, max_len)))


def _sites(w, S):
    # every (rule, position) with the rule's lhs occurring in w; plain scan
    out = []
    for r in S.rules:
        k = len(r.lhs)
        for i in range(len(w) - k + 1):
            if w[i:i + k] == r.lhs:
                out.append((r, i))
    return out


def random_normal_form(p, S, rng):
    """Rewrite until standard, picking the term and the redex at random each time."""
    if isinstance(p, tuple):
        p = Polynomial.monomial(p)
    while True:
        reducible = [(w, c) for w, c in sorted(p.items()) if _sites(w, S)]
        if not reducible:
            return p
        w, c = rng.choice(reducible)
        r, i = rng.choice(_sites(w, S))
        a, b = w[:i], w[i + len(r.lhs):]
        # c*w  ->  c * a * rhs * b
        p = poly_add(p, poly_scale(-c, Polynomial.monomial(w)))
        p = poly_add(p, poly_scale(c, poly_mul_monomial(a, r.rhs, b)))
