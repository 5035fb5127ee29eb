"""Coxeter matrices and the rewriting presentations of their group algebras."""

from __future__ import annotations

from .errors import ParseError, UnsupportedBondError
from .freealg import GeneratorSet, MonomialOrder, Polynomial
from .rewrite import Rule, RewriteSystem

INFINITY = 0


class CoxeterMatrix:
    """Symmetric matrix ``m`` with ones on the diagonal; ``0`` encodes an infinite bond."""

    def __init__(self, m):
        m = tuple(tuple(int(x) for x in row) for row in m)
        n = len(m)
        if n < 1 or any(len(row) != n for row in m):
            raise ValueError("Coxeter matrix must be square and non-empty")
        for i in range(n):
            if m[i][i] != 1:
                raise ValueError(f"diagonal entry m[{i}][{i}] must be 1")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")
                if i != j and m[i][j] != INFINITY and m[i][j] < 2:
                    raise ValueError(f"off-diagonal entry m[{i}][{j}] must be >= 2 or 0")
        self.m = m

    @property
    def n(self) -> int:
        return len(self.m)

    def __getitem__(self, ij):
        i, j = ij
        return self.m[i][j]

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"CoxeterMatrix({[list(r) for r in self.m]})"

    @classmethod
    def from_bonds(cls, n, bonds, default=2):
        """Build from ``{(i, j): m_ij}`` with 1-based indices; unlisted pairs get ``default``."""
        m = [[1 if i == j else default for j in range(n)] for i in range(n)]
        for (i, j), v in bonds.items():
            m[i - 1][j - 1] = m[j - 1][i - 1] = v
        return cls(m)


PRESETS = {
    "H2": {(1, 2): 5},
    "H3": {(1, 2): 5, (2, 3): 3},
    "H4": {(1, 2): 5, (2, 3): 3, (3, 4): 3},
}


def preset(name: str):
    """Matrix, generators ``s1..sn`` and deg-lex order with ``s_n > ... > s_1``."""
    key = name.upper()
    if key not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    n = int(key[1:])
    M = CoxeterMatrix.from_bonds(n, PRESETS[key])
    gens = GeneratorSet.standard(n)
    return M, gens, MonomialOrder(gens)


def alternating(i, j, length):
    return tuple(i if k % 2 == 0 else j for k in range(length))


def presentation_from_matrix(M: CoxeterMatrix, gens: GeneratorSet | None = None) -> RewriteSystem:
    """Quadratic rules ``s_i s_i -> 1`` followed by braid rules, larger generator first."""
    if gens is None:
        gens = GeneratorSet.standard(M.n)
    if gens.rank != M.n:
        raise ValueError(f"matrix rank {M.n} does not match {gens.rank} generators")
    rules = []
    for i in range(M.n):
        rules.append(Rule((i, i), Polynomial.monomial(()), len(rules)))
    for gap in range(1, M.n):
        for j in range(M.n - gap):
            i = j + gap
            m = M[i, j]
            if m == INFINITY:
                raise UnsupportedBondError(
                    f"infinite bond between {gens.names[i]} and {gens.names[j]}")
            rules.append(Rule(alternating(i, j, m), Polynomial.monomial(alternating(j, i, m)),
                              len(rules)))
    return RewriteSystem(rules, gens)


def preset_presentation(name: str) -> RewriteSystem:
    M, gens, _ = preset(name)
    return presentation_from_matrix(M, gens)


# -- presentation text file ----------------------------------------------------


def parse_presentation(text: str):
    """Parse ``rank: n`` / ``m: i j value`` / ``preset: NAME`` lines.

    ``m`` lines use 1-based generator indices; unlisted pairs default to 2.
    A ``preset:`` line supplies the starting matrix, which ``m`` lines may override.
    Returns ``(CoxeterMatrix, GeneratorSet)``.
    """
    rank = None
    bonds = {}
    base = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError("expected 'key: value'", line=lineno, column=1)
        key = key.strip()
        fields = value.split()
        try:
            if key == "rank":
                rank = int(fields[0])
            elif key == "preset":
                base = preset(fields[0])[0]
            elif key == "m":
                i, j, v = (int(f) for f in fields)
                bonds[(i, j)] = v
            else:
                raise ParseError(f"unknown key {key!r}", line=lineno, column=1)
        except (ValueError, IndexError, KeyError) as exc:
            raise ParseError(f"bad {key!r} line: {exc}", line=lineno,
                             column=raw.find(":") + 2) from None
    if base is not None:
        if rank is not None and rank != base.n:
            raise ParseError(f"rank {rank} contradicts preset of rank {base.n}")
        rank = base.n
    if rank is None:
        raise ParseError("missing 'rank:' line")
    m = [list(r) for r in base.m] if base is not None else \
        [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for (i, j), v in bonds.items():
        if not (1 <= i <= rank and 1 <= j <= rank) or i == j:
            raise ParseError(f"bad generator pair ({i}, {j})")
        m[i - 1][j - 1] = m[j - 1][i - 1] = v
    try:
        M = CoxeterMatrix(m)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return M, GeneratorSet.standard(rank)


def format_presentation(M: CoxeterMatrix) -> str:
    lines = [f"rank: {M.n}"]
    for i in range(M.n):
        for j in range(i + 1, M.n):
            lines.append(f"m: {i + 1} {j + 1} {M[i, j]}")
    return "\n".join(lines) + "\n"
