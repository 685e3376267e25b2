"""Elements of the modular Hecke algebra of level one.

An element F is a finitely supported function on the right cosets
Gamma(1) \\ GL2+(Q), each coset represented by its Hermite key
(:func:`src.exact.matrices.hnf_key`), with values in :class:`FormValue`.
The product is

    (F * G)_key(h2 h1) += F_h1 * (G_h2 | h1)

and F acts on a level-one form f by sum_alpha F_alpha * (f | alpha).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

from src.exact.cyclotomic import Cyclotomic
from src.exact.matrices import (
    S_MAT,
    GroupElem,
    Mat,
    hnf_cosets,
    hnf_key,
    primitive_hnf_cosets,
    smith_normal_form,
)
from src.hecke.values import FormValue, Scalar, value_equal
from src.utils.logger import get_logger

logger = get_logger(__name__)

KeyLike = Union[GroupElem, Mat, tuple]

_FLIP = Mat.diag(1, -1)


def coset_key(g: KeyLike) -> GroupElem:
    """Hermite key of the coset Gamma(1) g."""
    if isinstance(g, GroupElem):
        return hnf_key(g)
    if isinstance(g, Mat):
        return hnf_key(GroupElem.of(g))
    return hnf_key(GroupElem.of(Mat.from_rows(g)))


def _as_value(value) -> FormValue:
    return value if isinstance(value, FormValue) else FormValue.constant(value)


class HeckeElem:
    """Finitely supported map coset key -> FormValue.

    Attributes:
        values: Read-only mapping key -> nonzero value, ordered by key.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[KeyLike, object] | Iterable[tuple[KeyLike, object]] = ()):
        items = values.items() if isinstance(values, Mapping) else values
        acc: dict[GroupElem, FormValue] = {}
        for key, value in items:
            key = coset_key(key)
            value = _as_value(value)
            acc[key] = acc[key] + value if key in acc else value
        self._values = {k: v for k, v in sorted(acc.items()) if not v.is_zero()}

    @classmethod
    def zero(cls) -> "HeckeElem":
        return cls()

    @classmethod
    def identity(cls) -> "HeckeElem":
        return cls({GroupElem.identity(): 1})

    @classmethod
    def from_form(cls, f: FormValue) -> "HeckeElem":
        """f placed on the trivial coset."""
        return cls({GroupElem.identity(): f})

    @classmethod
    def single(cls, g: KeyLike, value=1) -> "HeckeElem":
        return cls({g: value})

    @property
    def values(self) -> Mapping[GroupElem, FormValue]:
        return dict(self._values)

    def items(self) -> Iterator[tuple[GroupElem, FormValue]]:
        return iter(self._values.items())

    def keys(self) -> list[GroupElem]:
        return list(self._values)

    def value_at(self, g: KeyLike) -> FormValue:
        return self._values.get(coset_key(g), FormValue.zero())

    def is_zero(self) -> bool:
        return not self._values

    def __len__(self) -> int:
        return len(self._values)

    def map_values(self, fn) -> "HeckeElem":
        return HeckeElem({k: fn(k, v) for k, v in self._values.items()})

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        return HeckeElem(list(self._values.items()) + list(other._values.items()))

    def __neg__(self) -> "HeckeElem":
        return HeckeElem({k: -v for k, v in self._values.items()})

    def __sub__(self, other: "HeckeElem") -> "HeckeElem":
        return self + (-other)

    def scale(self, value: Scalar) -> "HeckeElem":
        return HeckeElem({k: v.scale(value) for k, v in self._values.items()})

    def __mul__(self, other) -> "HeckeElem":
        if isinstance(other, (Cyclotomic, Fraction, int)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return convolve(self, other)

    def __rmul__(self, other) -> "HeckeElem":
        if isinstance(other, (Cyclotomic, Fraction, int)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self._values == other._values

    __hash__ = None  # type: ignore[assignment]

    def equals(self, other: "HeckeElem", order: Optional[int] = None) -> bool:
        """Key-by-key :func:`value_equal`, falling back to q-expansions."""
        keys = set(self._values) | set(other._values)
        return all(value_equal(self.value_at(k), other.value_at(k), order) for k in keys)

    def render(self) -> str:
        if not self._values:
            return "0"
        return " + ".join(f"[{v.render()}] U{k}" for k, v in self._values.items())

    def __repr__(self) -> str:
        return f"HeckeElem({self.render()})"


def convolve(left: HeckeElem, right: HeckeElem) -> HeckeElem:
    """Convolution product; pairs are visited in key order so the result is deterministic."""
    acc: list[tuple[GroupElem, FormValue]] = []
    for h1, f1 in left.items():
        for h2, f2 in right.items():
            acc.append((h2 * h1, f1 * f2.slash(h1)))
    return HeckeElem(acc)


def act_on_form(F: HeckeElem, f: FormValue) -> FormValue:
    """Hecke operator action sum_alpha F_alpha * (f | alpha)."""
    acc = FormValue.zero()
    for key, value in F.items():
        acc = acc + value * f.slash(key)
    return acc


def hecke_T(n: int) -> HeckeElem:
    """T(n): value 1 on each of the sigma_1(n) Hermite cosets of determinant n."""
    if n < 1:
        raise ValueError(f"Hecke index must be positive, got {n}")
    return HeckeElem({GroupElem.of(h): 1 for h in hnf_cosets(n)})


def j_embed(h: Mapping[KeyLike, Scalar]) -> HeckeElem:
    """Embed a scalar Hecke-ring element as constant values."""
    return HeckeElem({k: FormValue.constant(c) for k, c in h.items()})


def epsilon(F: HeckeElem) -> dict[GroupElem, Cyclotomic]:
    """Weight-0 part of each value, which is a constant."""
    out: dict[GroupElem, Cyclotomic] = {}
    for key, value in F.items():
        constant = value.component(0).terms.get(())
        if constant is not None:
            out[key] = constant
    return out


def _double_coset_split(h: Mat) -> Mat:
    """gamma2 in SL2(Z) with h = gamma1 * diag(n, 1) * gamma2."""
    u, _, v = smith_normal_form(h)
    if u.det() == -1:
        u, v = _FLIP @ u, v @ _FLIP
    # u h v = diag(1, n) = S diag(n, 1) S^-1
    return S_MAT.adj() @ v.adj()


def from_double_coset(n: int, f: FormValue, scalar=1) -> HeckeElem:
    """The element supported on Gamma(1) diag(n, 1) Gamma(1) determined by f.

    Each primitive Hermite coset h of determinant n is written as
    gamma1 * diag(n, 1) * gamma2 and receives the value f | gamma2.
    """
    if n < 1:
        raise ValueError(f"double coset index must be positive, got {n}")
    if not f.is_level_one():
        logger.warning("value %s is not a level-one form; coset values depend on the chosen split", f.render())
    out = {}
    for h in primitive_hnf_cosets(n):
        out[GroupElem.of(h, scalar)] = f.slash(_double_coset_split(h))
    return HeckeElem(out)


def sigma_z(z: int, F: HeckeElem) -> HeckeElem:
    """Multiply the value at each key by det(key)^z."""
    if isinstance(z, bool) or not isinstance(z, int):
        raise ValueError(f"sigma_z needs an integer exponent, got {z!r}")
    return F.map_values(lambda key, value: value.scale(key.det() ** z))


def projection_P(F: HeckeElem) -> FormValue:
    """Weight-2 part of the value on the trivial coset."""
    return F.value_at(GroupElem.identity()).component(2)


def is_cuspidal_at_infinity(F: HeckeElem, order: int = 4) -> bool:
    """True when every value vanishes at the cusp i*infinity."""
    return all(value.qexpand(order).constant_term().is_zero() for _, value in F.items())


__all__ = [
    "HeckeElem",
    "coset_key",
    "convolve",
    "act_on_form",
    "hecke_T",
    "j_embed",
    "epsilon",
    "from_double_coset",
    "sigma_z",
    "projection_P",
    "is_cuspidal_at_infinity",
]
