"""Integer 2x2 matrices, GL2+(Q) elements and their coset combinatorics.

Conventions:
    * Row operations act on the left. Hermite normal form representatives of
      Gamma(1) \\ {det = n} are [[a, b], [0, d]] with a, d > 0 and 0 <= b < d.
    * Torsion points of (Q/Z)^2 are row vectors; a matrix m acts by y -> y*m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from sympy import divisors
from sympy.core.intfunc import igcdex

from src.exact.rational import as_rational, frac_part


@dataclass(frozen=True, order=True)
class Mat:
    """Integer 2x2 matrix [[a, b], [c, d]].

    Attributes:
        a, b, c, d: Entries, row by row.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Mat":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError(f"expected a 2x2 integer array, got {rows!r}")
        (a, b), (c, d) = rows
        for entry in (a, b, c, d):
            if isinstance(entry, bool) or int(entry) != entry:
                raise ValueError(f"matrix entries must be integers, got {entry!r}")
        return cls(int(a), int(b), int(c), int(d))

    @classmethod
    def identity(cls) -> "Mat":
        return cls(1, 0, 0, 1)

    @classmethod
    def diag(cls, a: int, d: int) -> "Mat":
        return cls(a, 0, 0, d)

    def to_rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def adj(self) -> "Mat":
        """Adjugate det(m) * m^-1, written gamma-check in the Eisenstein formulas."""
        return Mat(self.d, -self.b, -self.c, self.a)

    def content(self) -> int:
        return gcd(gcd(self.a, self.b), gcd(self.c, self.d))

    def primitive(self) -> tuple[int, "Mat"]:
        """Split off the content: return (g, m / g)."""
        g = self.content()
        if g == 0:
            raise ValueError("zero matrix has no primitive part")
        return g, Mat(self.a // g, self.b // g, self.c // g, self.d // g)

    def is_upper(self) -> bool:
        return self.c == 0

    def is_hnf(self) -> bool:
        return self.c == 0 and self.a > 0 and self.d > 0 and 0 <= self.b < self.d

    def __matmul__(self, other: "Mat") -> "Mat":
        return Mat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat":
        return Mat(-self.a, -self.b, -self.c, -self.d)

    def scaled(self, k: int) -> "Mat":
        return Mat(k * self.a, k * self.b, k * self.c, k * self.d)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = Mat.identity()
S_MAT = Mat(0, -1, 1, 0)


def translation(k: int) -> Mat:
    """T^k = [[1, k], [0, 1]]."""
    return Mat(1, k, 0, 1)


@dataclass(frozen=True, order=True)
class GroupElem:
    """Element scalar * mat of GL2+(Q) with mat primitive.

    Attributes:
        scalar: Positive rational factor (the label that only sigma_z sees).
        mat: Primitive integer matrix of positive determinant.
    """

    scalar: Fraction
    mat: Mat

    def __post_init__(self) -> None:
        scalar = as_rational(self.scalar)
        if scalar <= 0:
            raise ValueError("group element scalar must be positive")
        content = self.mat.content()
        if content == 0 or self.mat.det() <= 0:
            raise ValueError(f"{self.mat} does not have positive determinant")
        if content != 1:
            scalar = scalar * content
            object.__setattr__(self, "mat", self.mat.primitive()[1])
        object.__setattr__(self, "scalar", scalar)

    @classmethod
    def of(cls, m: Mat | Sequence[Sequence[int]], scalar=1) -> "GroupElem":
        if not isinstance(m, Mat):
            m = Mat.from_rows(m)
        return cls(as_rational(scalar), m)

    @classmethod
    def identity(cls) -> "GroupElem":
        return cls(Fraction(1), IDENTITY)

    def det(self) -> Fraction:
        return self.scalar * self.scalar * self.mat.det()

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        return GroupElem(self.scalar * other.scalar, self.mat @ other.mat)

    def inverse(self) -> "GroupElem":
        return GroupElem(1 / (self.scalar * self.mat.det()), self.mat.adj())

    def in_sl2z(self) -> bool:
        return self.scalar == 1 and self.mat.det() == 1

    def __str__(self) -> str:
        if self.scalar == 1:
            return str(self.mat)
        return f"{self.scalar}*{self.mat}"


@dataclass(frozen=True, order=True)
class TorsionPoint:
    """Point of (Q/Z)^2, both coordinates reduced into [0, 1).

    Attributes:
        x1, x2: Coordinates.
    """

    x1: Fraction
    x2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x1", frac_part(as_rational(self.x1)))
        object.__setattr__(self, "x2", frac_part(as_rational(self.x2)))

    def __add__(self, other: "TorsionPoint") -> "TorsionPoint":
        return TorsionPoint(self.x1 + other.x1, self.x2 + other.x2)

    def __neg__(self) -> "TorsionPoint":
        return TorsionPoint(-self.x1, -self.x2)

    def act(self, m: Mat) -> "TorsionPoint":
        """Row-vector action y -> y*m."""
        return TorsionPoint(self.x1 * m.a + self.x2 * m.c, self.x1 * m.b + self.x2 * m.d)

    def order(self) -> int:
        """Smallest n > 0 with n*x = 0."""
        d1, d2 = self.x1.denominator, self.x2.denominator
        return d1 // gcd(d1, d2) * d2

    def __str__(self) -> str:
        return f"({self.x1},{self.x2})"


ORIGIN = TorsionPoint(Fraction(0), Fraction(0))


@lru_cache(maxsize=None)
def hnf_cosets(n: int) -> tuple[Mat, ...]:
    """Hermite normal form representatives of Gamma(1) \\ {m : det m = n}.

    There are sigma_1(n) of them, listed in increasing order.
    """
    if n < 1:
        raise ValueError(f"determinant must be positive, got {n}")
    return tuple(
        Mat(a, b, 0, n // a) for a in sorted(divisors(n), reverse=True) for b in range(n // a)
    )


def primitive_hnf_cosets(n: int) -> tuple[Mat, ...]:
    return tuple(m for m in hnf_cosets(n) if m.content() == 1)


def hnf_reduce(g: GroupElem) -> tuple[Mat, GroupElem]:
    """Factor g = gamma0 * beta with gamma0 in SL2(Z) and beta in Hermite form.

    The scalar of ``g`` is carried by ``beta`` unchanged.
    """
    m = g.mat
    x, y, g0 = (int(v) for v in igcdex(m.a, m.c))
    if g0 < 0:
        x, y, g0 = -x, -y, -g0
    u = Mat(x, y, -m.c // g0, m.a // g0)
    top = u @ m
    k = top.b // top.d
    beta = translation(-k) @ top
    gamma0 = u.adj() @ translation(k)
    return gamma0, GroupElem(g.scalar, beta)


def hnf_key(g: GroupElem) -> GroupElem:
    """Canonical right-coset key Gamma(1) g: the Hermite part of g."""
    return hnf_reduce(g)[1]


def smith_normal_form(m: Mat) -> tuple[Mat, Mat, Mat]:
    """Return unimodular U, V and D = diag(d1, d2) with U*m*V = D, d1 | d2, d_i > 0."""
    if m.det() == 0:
        raise ValueError(f"singular matrix {m} has no finite kernel")
    A = [[m.a, m.b], [m.c, m.d]]
    U = [[1, 0], [0, 1]]
    V = [[1, 0], [0, 1]]

    def swap_rows() -> None:
        A[0], A[1] = A[1], A[0]
        U[0], U[1] = U[1], U[0]

    def swap_cols() -> None:
        for M in (A, V):
            M[0][0], M[0][1] = M[0][1], M[0][0]
            M[1][0], M[1][1] = M[1][1], M[1][0]

    while True:
        # pivot: smallest nonzero entry moves to (0, 0)
        entries = [(abs(A[i][j]), i, j) for i in range(2) for j in range(2) if A[i][j]]
        _, i, j = min(entries)
        if i == 1:
            swap_rows()
        if j == 1:
            swap_cols()
        p = A[0][0]
        q = A[1][0] // p
        if q:
            A[1] = [A[1][k] - q * A[0][k] for k in range(2)]
            U[1] = [U[1][k] - q * U[0][k] for k in range(2)]
        q = A[0][1] // p
        if q:
            for M in (A, V):
                M[0][1] -= q * M[0][0]
                M[1][1] -= q * M[1][0]
        if A[1][0] or A[0][1]:
            continue
        if A[1][1] % p:
            A[0] = [A[0][k] + A[1][k] for k in range(2)]
            U[0] = [U[0][k] + U[1][k] for k in range(2)]
            continue
        break
    for i in range(2):
        if A[i][i] < 0:
            A[i] = [-v for v in A[i]]
            U[i] = [-v for v in U[i]]
    return Mat.from_rows(U), Mat.from_rows(A), Mat.from_rows(V)


@lru_cache(maxsize=4096)
def kernel_points(m: Mat) -> tuple[TorsionPoint, ...]:
    """All y in (Q/Z)^2 with y*m = 0 mod Z^2, via the Smith form of m.

    With U*m*V = diag(d1, d2), the solutions are y = w*U for w in
    (1/d1)Z/Z x (1/d2)Z/Z, so there are exactly |det m| of them.
    """
    u, dmat, _ = smith_normal_form(m)
    d1, d2 = dmat.a, dmat.d
    points = {
        TorsionPoint(Fraction(i, d1), Fraction(j, d2)).act(u) for i in range(d1) for j in range(d2)
    }
    return tuple(sorted(points))


def particular_preimage(x: TorsionPoint, m: Mat) -> TorsionPoint:
    """One solution y of y*adj(m) = x, namely y = x*m / det(m)."""
    det = m.det()
    return TorsionPoint(
        Fraction(1, det) * (x.x1 * m.a + x.x2 * m.c), Fraction(1, det) * (x.x1 * m.b + x.x2 * m.d)
    )


def mat_product(mats: Iterable[Mat]) -> Mat:
    result = IDENTITY
    for m in mats:
        result = result @ m
    return result


__all__ = [
    "Mat",
    "GroupElem",
    "TorsionPoint",
    "IDENTITY",
    "S_MAT",
    "ORIGIN",
    "translation",
    "hnf_cosets",
    "primitive_hnf_cosets",
    "hnf_reduce",
    "hnf_key",
    "smith_normal_form",
    "kernel_points",
    "particular_preimage",
    "mat_product",
]
