"""Symbolic Eisenstein classes: Q[(Q/Z)^2] modulo the distribution relations.

A class is a finite rational combination of symbols phi_x, x in (Q/Z)^2.
The relations are phi_x = sum_{n y = x} phi_y for every nonzero integer n;
n = -1 gives phi_x = phi_{-x}, so the module is even.

Two combinations are equal when their difference lies in the span of the
relations. That is decided through constant terms at the cusps: for
gamma = [[a, b], [c, d]] in SL2(Z) the functional

    c -> a0(c | gamma) = sum_x coeff(x) B2(a x1 + c x2) / 2

kills every relation, and a class of level N is zero iff all of these
vanish for (a, c) running over the primitive pairs mod N.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

import numpy as np

from src.exact.bernoulli import b2
from src.exact.matrices import GroupElem, Mat, TorsionPoint, kernel_points, particular_preimage
from src.exact.rational import as_rational, format_rational
from src.utils.logger import get_logger

logger = get_logger(__name__)

_BLOCK_ENTRIES = 1 << 22


def _minimal_level(points: Iterable[TorsionPoint]) -> int:
    level = 1
    for p in points:
        level = lcm(level, p.x1.denominator, p.x2.denominator)
    return level


@dataclass(frozen=True, eq=False)
class EisClass:
    """A representative of a class in the symbolic Eisenstein module.

    Attributes:
        terms: Sorted (point, coefficient) pairs with nonzero coefficients.
    """

    terms: tuple[tuple[TorsionPoint, Fraction], ...]

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[TorsionPoint, object], level: int | None = None) -> "EisClass":
        """Build a representative, checking that every point lives at ``level`` when given.

        Raises:
            ValueError: if ``level`` is not positive or a point has a denominator not dividing it.
        """
        cleaned = {p: as_rational(c) for p, c in coeffs.items()}
        cleaned = {p: c for p, c in cleaned.items() if c}
        if level is not None:
            if level < 1:
                raise ValueError(f"level must be positive, got {level}")
            for point in cleaned:
                if level % point.x1.denominator or level % point.x2.denominator:
                    raise ValueError(f"point {point} does not live at level {level}")
        return cls(tuple(sorted(cleaned.items())))

    @classmethod
    def zero(cls) -> "EisClass":
        return cls(())

    @classmethod
    def symbol(cls, x: TorsionPoint | tuple, level: int | None = None) -> "EisClass":
        """The basis class phi_x."""
        if not isinstance(x, TorsionPoint):
            x = TorsionPoint(as_rational(x[0]), as_rational(x[1]))
        return cls.from_coeffs({x: 1}, level)

    @property
    def level(self) -> int:
        """Least common multiple of the point denominators."""
        return _minimal_level(p for p, _ in self.terms)

    @property
    def coeffs(self) -> dict[TorsionPoint, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        """True when the representative lies in the span of the relations."""
        return _in_relation_span(self)

    def __add__(self, other: "EisClass") -> "EisClass":
        acc: dict[TorsionPoint, Fraction] = defaultdict(Fraction)
        for part in (self, other):
            for p, c in part.terms:
                acc[p] += c
        return EisClass.from_coeffs(acc)

    def scale(self, c) -> "EisClass":
        c = as_rational(c)
        return EisClass.from_coeffs({p: c * v for p, v in self.terms})

    def __neg__(self) -> "EisClass":
        return self.scale(-1)

    def __sub__(self, other: "EisClass") -> "EisClass":
        return self + (-other)

    def __mul__(self, c) -> "EisClass":
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, EisClass):
            return NotImplemented
        return class_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{format_rational(c)}*phi{p}" for p, c in self.terms]
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.render()


PHI0 = EisClass.symbol(TorsionPoint(Fraction(0), Fraction(0)))


def phi(x1, x2, level: int | None = None) -> EisClass:
    return EisClass.symbol((x1, x2), level)


def refine(c: EisClass, n: int) -> EisClass:
    """Apply the relation for n: x -> sum over k in [0, n)^2 of (x + k)/n.

    The result represents the same class with points at level n*L.
    """
    if n < 1:
        raise ValueError(f"refinement factor must be positive, got {n}")
    if n == 1:
        return c
    coeffs: dict[TorsionPoint, Fraction] = {}
    for p, v in c.terms:
        for k1 in range(n):
            for k2 in range(n):
                y = TorsionPoint((p.x1 + k1) / n, (p.x2 + k2) / n)
                coeffs[y] = coeffs.get(y, Fraction(0)) + v
    return EisClass.from_coeffs(coeffs, c.level * n)


def _fold_signs(c: EisClass) -> dict[TorsionPoint, Fraction]:
    """Merge phi_x and phi_{-x} onto the smaller of the two points."""
    acc: dict[TorsionPoint, Fraction] = defaultdict(Fraction)
    for p, v in c.terms:
        acc[min(p, -p)] += v
    return {p: v for p, v in acc.items() if v}


def _in_relation_span(c: EisClass) -> bool:
    """Check that a0(c | gamma) vanishes for every gamma in SL2(Z).

    Only the first column (a, c) of gamma matters, modulo the level N.
    With r = a x1 + c x2 reduced to k/N, 6 N^2 B2(k/N) = 6k^2 - 6kN + N^2,
    so the test runs on integers.
    """
    folded = _fold_signs(c)
    if not folded:
        return True
    level = _minimal_level(folded)
    points = list(folded)
    den = lcm(*(v.denominator for v in folded.values()))
    weights = [int(v * den) for v in folded.values()]
    u1 = np.array([int(p.x1 * level) for p in points], dtype=np.int64)
    u2 = np.array([int(p.x2 * level) for p in points], dtype=np.int64)

    bound = max(abs(w) for w in weights) * 6 * level * level * len(weights)
    w = np.array(weights, dtype=np.int64 if bound < 2**62 else object)

    residues = np.arange(level, dtype=np.int64)
    top, bottom = (m.ravel() for m in np.meshgrid(residues, residues, indexing="ij"))
    keep = np.gcd(np.gcd(top, bottom), level) == 1
    top, bottom = top[keep], bottom[keep]
    logger.debug("relation test at level %d over %d points and %d columns", level, len(points), len(top))

    block = max(1, _BLOCK_ENTRIES // len(points))
    for start in range(0, len(top), block):
        r = (top[start : start + block, None] * u1 + bottom[start : start + block, None] * u2) % level
        values = 6 * r * r - 6 * level * r + level * level
        if np.any(values.astype(w.dtype) @ w != 0):
            return False
    return True


def class_equal(left: EisClass, right: EisClass) -> bool:
    """Equality modulo the distribution relations."""
    return _in_relation_span(left - right)


def _as_mat(g) -> Mat:
    if isinstance(g, GroupElem):
        return g.mat
    if isinstance(g, Mat):
        return g
    return Mat.from_rows(g)


def slash_class(c: EisClass, g) -> EisClass:
    """Right action phi_x | g = sum of phi_y over the solutions of y * adj(g) = x.

    A GroupElem acts through its primitive matrix. A raw Mat is used as
    given; the scalar matrix n*I acts as refinement by n, which is the
    identity on classes.

    Raises:
        ValueError: if g is singular.
    """
    m = _as_mat(g)
    det = m.det()
    if det <= 0:
        raise ValueError(f"slash needs a positive determinant, got {m}")
    kernel = kernel_points(m.adj())
    coeffs: dict[TorsionPoint, Fraction] = defaultdict(Fraction)
    for p, v in c.terms:
        y0 = particular_preimage(p, m)
        for k in kernel:
            coeffs[y0 + k] += v
    return EisClass.from_coeffs(coeffs)


def a0_class(c: EisClass) -> Fraction:
    """Constant term: phi_x contributes B2(x1)/2."""
    return sum((v * b2(p.x1) / 2 for p, v in c.terms), Fraction(0))


__all__ = [
    "EisClass",
    "PHI0",
    "phi",
    "refine",
    "class_equal",
    "slash_class",
    "a0_class",
]
