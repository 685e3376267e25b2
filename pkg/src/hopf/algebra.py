"""The algebra H1 in PBW normal form.

H1 is the enveloping algebra of the Lie algebra spanned by X, Y and delta_n
(n >= 1) with

    [Y, X] = X,  [Y, delta_n] = n delta_n,  [X, delta_n] = delta_(n+1),
    [delta_k, delta_l] = 0.

Monomials are written delta_1^e1 ... delta_r^er X^a Y^b. Products are put
back into this order by moving one generator at a time through a normal
monomial with the closed forms

    Y^b X       = X (Y + 1)^b
    X^a Y^b d_n = sum_i C(a, i) d_(n+i) X^(a-i) (Y + n)^b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Union

Coefficient = Union[Fraction, int]

# A generator letter: ("d", n) for delta_n, ("X", 0), ("Y", 0).
Letter = tuple[str, int]


@dataclass(frozen=True, order=True)
class PBWMonomial:
    """delta_1^deltas[0] ... delta_r^deltas[r-1] X^x Y^y.

    Attributes:
        deltas: Exponents of delta_1, delta_2, ... with trailing zeros trimmed.
        x: Power of X.
        y: Power of Y.
    """

    deltas: tuple[int, ...] = ()
    x: int = 0
    y: int = 0

    def __post_init__(self) -> None:
        deltas = tuple(self.deltas)
        while deltas and deltas[-1] == 0:
            deltas = deltas[:-1]
        if any(e < 0 for e in deltas) or self.x < 0 or self.y < 0:
            raise ValueError("PBW exponents must be non-negative")
        object.__setattr__(self, "deltas", deltas)

    @property
    def degree(self) -> int:
        """Grading with deg Y = 0, deg X = 1, deg delta_n = n."""
        return sum((n + 1) * e for n, e in enumerate(self.deltas)) + self.x

    @property
    def length(self) -> int:
        return sum(self.deltas) + self.x + self.y

    def is_unit(self) -> bool:
        return not self.deltas and self.x == 0 and self.y == 0

    def letters(self) -> tuple[Letter, ...]:
        word: list[Letter] = []
        for n, e in enumerate(self.deltas, start=1):
            word.extend([("d", n)] * e)
        word.extend([("X", 0)] * self.x)
        word.extend([("Y", 0)] * self.y)
        return tuple(word)

    def with_delta(self, n: int) -> "PBWMonomial":
        deltas = list(self.deltas) + [0] * max(0, n - len(self.deltas))
        deltas[n - 1] += 1
        return PBWMonomial(tuple(deltas), self.x, self.y)

    def render(self) -> str:
        parts = []
        for n, e in enumerate(self.deltas, start=1):
            if e:
                parts.append(f"d{n}" if e == 1 else f"d{n}^{e}")
        if self.x:
            parts.append("X" if self.x == 1 else f"X^{self.x}")
        if self.y:
            parts.append("Y" if self.y == 1 else f"Y^{self.y}")
        return " ".join(parts) or "1"

    def __str__(self) -> str:
        return self.render()


UNIT = PBWMonomial()


def monomial_x(power: int = 1) -> PBWMonomial:
    return PBWMonomial((), power, 0)


def monomial_y(power: int = 1) -> PBWMonomial:
    return PBWMonomial((), 0, power)


def monomial_delta(n: int, power: int = 1) -> PBWMonomial:
    if n < 1:
        raise ValueError("delta_n needs n >= 1")
    return PBWMonomial((0,) * (n - 1) + (power,), 0, 0)


class H1Elem:
    """Finite Q-linear combination of PBW monomials.

    Attributes:
        terms: Read-only mapping monomial -> nonzero Fraction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[PBWMonomial, Coefficient] | Iterable[tuple[PBWMonomial, Coefficient]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[PBWMonomial, Fraction] = {}
        for mono, c in items:
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(c)
        self._terms = {m: c for m, c in sorted(acc.items()) if c}

    @classmethod
    def one(cls) -> "H1Elem":
        return cls({UNIT: 1})

    @classmethod
    def zero(cls) -> "H1Elem":
        return cls()

    @classmethod
    def of(cls, mono: PBWMonomial, coeff: Coefficient = 1) -> "H1Elem":
        return cls({mono: coeff})

    @classmethod
    def X(cls) -> "H1Elem":
        return cls.of(monomial_x())

    @classmethod
    def Y(cls) -> "H1Elem":
        return cls.of(monomial_y())

    @classmethod
    def delta(cls, n: int) -> "H1Elem":
        return cls.of(monomial_delta(n))

    @property
    def terms(self) -> Mapping[PBWMonomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[PBWMonomial, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "H1Elem") -> "H1Elem":
        return H1Elem(list(self._terms.items()) + list(_as_elem(other)._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "H1Elem":
        return H1Elem({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "H1Elem") -> "H1Elem":
        return self + (-_as_elem(other))

    def __rsub__(self, other) -> "H1Elem":
        return _as_elem(other) - self

    def __mul__(self, other) -> "H1Elem":
        if isinstance(other, (int, Fraction)):
            return H1Elem({m: c * other for m, c in self._terms.items()})
        return pbw_mul(self, other)

    def __rmul__(self, other) -> "H1Elem":
        if isinstance(other, (int, Fraction)):
            return H1Elem({m: c * other for m, c in self._terms.items()})
        return pbw_mul(_as_elem(other), self)

    def __pow__(self, exponent: int) -> "H1Elem":
        result = H1Elem.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = H1Elem.one() * other
        if not isinstance(other, H1Elem):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._terms.items():
            body = mono.render()
            if body == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c} {body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"H1Elem({self.render()})"


def _as_elem(value) -> H1Elem:
    if isinstance(value, H1Elem):
        return value
    if isinstance(value, PBWMonomial):
        return H1Elem.of(value)
    if isinstance(value, (int, Fraction)):
        return H1Elem({UNIT: value})
    raise TypeError(f"cannot use {type(value).__name__} as an element of H1")


@lru_cache(maxsize=None)
def _times_letter(mono: PBWMonomial, letter: Letter) -> tuple[tuple[PBWMonomial, Fraction], ...]:
    """Normal-ordered expansion of mono * letter."""
    kind, n = letter
    a, b = mono.x, mono.y
    out: dict[PBWMonomial, Fraction] = {}
    if kind == "Y":
        out[PBWMonomial(mono.deltas, a, b + 1)] = Fraction(1)
    elif kind == "X":
        for i in range(b + 1):
            out[PBWMonomial(mono.deltas, a + 1, i)] = Fraction(comb(b, i))
    else:
        for i in range(a + 1):
            base = PBWMonomial(mono.deltas, 0, 0).with_delta(n + i)
            for j in range(b + 1):
                key = PBWMonomial(base.deltas, a - i, j)
                out[key] = out.get(key, Fraction(0)) + Fraction(comb(a, i) * comb(b, j) * n ** (b - j))
    return tuple((m, c) for m, c in out.items() if c)


@lru_cache(maxsize=None)
def monomial_product(left: PBWMonomial, right: PBWMonomial) -> tuple[tuple[PBWMonomial, Fraction], ...]:
    """Normal-ordered expansion of left * right."""
    current: dict[PBWMonomial, Fraction] = {left: Fraction(1)}
    for letter in right.letters():
        nxt: dict[PBWMonomial, Fraction] = {}
        for mono, c in current.items():
            for m, d in _times_letter(mono, letter):
                nxt[m] = nxt.get(m, Fraction(0)) + c * d
        current = {m: c for m, c in nxt.items() if c}
    return tuple(current.items())


def pbw_mul(u: H1Elem, v: H1Elem) -> H1Elem:
    """Product in H1, rewritten to PBW normal order."""
    u, v = _as_elem(u), _as_elem(v)
    acc: dict[PBWMonomial, Fraction] = {}
    for m1, c1 in u.items():
        for m2, c2 in v.items():
            for m, d in monomial_product(m1, m2):
                acc[m] = acc.get(m, Fraction(0)) + c1 * c2 * d
    return H1Elem(acc)


def commutator(u: H1Elem, v: H1Elem) -> H1Elem:
    return pbw_mul(u, v) - pbw_mul(v, u)


def letter_elem(letter: Letter) -> H1Elem:
    kind, n = letter
    if kind == "d":
        return H1Elem.delta(n)
    return H1Elem.X() if kind == "X" else H1Elem.Y()


def monomials_up_to(max_degree: int, max_y: int) -> list[PBWMonomial]:
    """All PBW monomials with grading degree <= max_degree and Y-power <= max_y."""
    found: list[PBWMonomial] = []

    def partitions(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for n in range(1, min(remaining, largest) + 1):
            for rest in partitions(remaining - n, n):
                yield (n,) + rest

    for parts in partitions(max_degree, max_degree):
        exps = [0] * (max(parts) if parts else 0)
        for n in parts:
            exps[n - 1] += 1
        used = sum(parts)
        for x in range(max_degree - used + 1):
            for y in range(max_y + 1):
                found.append(PBWMonomial(tuple(exps), x, y))
    return sorted(set(found))


__all__ = [
    "PBWMonomial",
    "H1Elem",
    "UNIT",
    "Letter",
    "monomial_x",
    "monomial_y",
    "monomial_delta",
    "monomial_product",
    "pbw_mul",
    "commutator",
    "letter_elem",
    "monomials_up_to",
]
