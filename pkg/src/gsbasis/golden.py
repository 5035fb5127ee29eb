"""Exact arithmetic in the golden field Q(phi), phi**2 = phi + 1.

``cos(pi/5) = phi/2``, so reflection matrices for the H-type groups have
entries in this field and group elements can be compared without rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np


class GoldenScalar:
    """``a + b*phi`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, GoldenScalar) else cls(x)

    def __repr__(self):
        return f"GoldenScalar({self.a}, {self.b})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        b = abs(self.b)
        phi = "phi" if b == 1 else f"{b}*phi"
        if not self.a:
            return phi if self.b > 0 else "-" + phi
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {phi}"

    def __eq__(self, other):
        try:
            other = GoldenScalar.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __add__(self, other):
        other = GoldenScalar.coerce(other)
        return GoldenScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenScalar(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-GoldenScalar.coerce(other))

    def __rsub__(self, other):
        return GoldenScalar.coerce(other) - self

    def __mul__(self, other):
        other = GoldenScalar.coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return GoldenScalar(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def conjugate(self):
        """Image under phi -> 1 - phi."""
        return GoldenScalar(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        a, b = self.a, self.b
        return a * a + a * b - b * b

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(phi)")
        c = self.conjugate()
        return GoldenScalar(c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * GoldenScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GoldenScalar.coerce(other) * self.inverse()

    def __float__(self):
        return float(self.a) + float(self.b) * (1 + 5 ** 0.5) / 2


PHI = GoldenScalar(0, 1)
ZERO = GoldenScalar(0, 0)
ONE = GoldenScalar(1, 0)


class GMatrix:
    """Square matrix over Q(phi), stored as ``(A + phi*B) / den`` with integer arrays.

    The representation is canonical (gcd of all entries and ``den`` is 1,
    ``den > 0``), so equality and hashing are exact.
    """

    __slots__ = ("A", "B", "den", "_key")

    def __init__(self, A, B, den=1):
        A = np.array(A, dtype=object)
        B = np.array(B, dtype=object)
        if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError("GMatrix needs two square arrays of equal shape")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            A, B, den = -A, -B, -den
        if den != 1:
            g = den
            for x in A.flat:
                g = gcd(g, int(x))
            for x in B.flat:
                g = gcd(g, int(x))
            if g > 1:
                A = A // g
                B = B // g
                den //= g
        self.A = A
        self.B = B
        self.den = den
        self._key = None

    @classmethod
    def from_scalars(cls, rows):
        rows = [[GoldenScalar.coerce(x) for x in row] for row in rows]
        den = 1
        for row in rows:
            for x in row:
                den = den * x.a.denominator // gcd(den, x.a.denominator)
                den = den * x.b.denominator // gcd(den, x.b.denominator)
        A = [[int(x.a * den) for x in row] for row in rows]
        B = [[int(x.b * den) for x in row] for row in rows]
        return cls(A, B, den)

    @classmethod
    def identity(cls, n):
        A = np.zeros((n, n), dtype=object)
        for i in range(n):
            A[i, i] = 1
        return cls(A, np.zeros((n, n), dtype=object))

    @property
    def n(self):
        return self.A.shape[0]

    def __getitem__(self, ij):
        i, j = ij
        return GoldenScalar(Fraction(int(self.A[i, j]), self.den),
                            Fraction(int(self.B[i, j]), self.den))

    def tolist(self):
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def key(self):
        """Hashable canonical form."""
        if self._key is None:
            self._key = (self.den, tuple(self.A.flat), tuple(self.B.flat))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __matmul__(self, other):
        A, B, C, D = self.A, self.B, other.A, other.B
        AC = A.dot(C)
        BD = B.dot(D)
        cross = (A + B).dot(C + D) - AC  # = AD + BC + BD
        return GMatrix(AC + BD, cross, self.den * other.den)

    __mul__ = __matmul__

    def is_identity(self):
        return self == GMatrix.identity(self.n)

    def __repr__(self):
        return f"GMatrix({[[str(x) for x in row] for row in self.tolist()]})"

    def approx(self):
        """Floating point copy, for display only."""
        phi = (1 + 5 ** 0.5) / 2
        return (self.A.astype(float) + phi * self.B.astype(float)) / self.den
