"""Inner perturbations of the H1 action by a convolution 1-cocycle.

Given weight-2 values t, m and a rational lambda, the map

    u(P(delta) X^n Y^l) = lambda^l P(m1, m2, ...) t_n
    m1 = m,  m(k+1) = X(mk) + m Y(mk)
    t0 = 1,  t1 = t,  t(n+1) = X(tn) + m Y(tn) + t tn

is a 1-cocycle, u(h h') = sum u(h_(1)) h_(2)(u(h')), with values on the
trivial coset. Its convolution inverse is

    v(P(delta) X^n Y^l) = (-lambda)^l P(n1, n2, ...) s_n
    nk = -X^(k-1)(m),  s0 = 1,  s1 = -t + lambda m,  s(j+1) = X(sj) + sj s1

and h acts on A(Gamma(1)) by a -> sum u(h_(1)) h_(2)(a) v(h_(3)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from src.exact.rational import as_rational
from src.hecke.action import act_on_value, apply_delta, apply_x, apply_y, hopf_act, inner_bracket, omega4
from src.hecke.elements import HeckeElem, convolve
from src.hecke.values import FormValue
from src.hopf.algebra import H1Elem, PBWMonomial
from src.hopf.coalgebra import coproduct_monomial, iterated_coproduct
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _check_weight_two(name: str, value: FormValue) -> None:
    found = value.weights()
    if found - {2}:
        raise ValueError(f"{name} must be a weight-2 value, got weights {sorted(found)}")


@dataclass(frozen=True, eq=False)
class Perturbation:
    """The cocycle u built from (t, lambda, m) together with its inverse.

    Attributes:
        t: Weight-2 value paired with X.
        lam: Rational value of u on Y.
        m: Weight-2 value of u on delta_1.
    """

    t: FormValue
    lam: Fraction
    m: FormValue
    _sequences: dict = field(default_factory=dict, repr=False)
    _inverse: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", as_rational(self.lam))
        _check_weight_two("t", self.t)
        _check_weight_two("m", self.m)

    def _derive(self, value: FormValue) -> FormValue:
        """X + m Y on a trivial-coset value."""
        return value.serre_x() + self.m * value.grade_y()

    def _sequence(self, name: str, index: int, start: Callable[[], list[FormValue]], step) -> FormValue:
        seq = self._sequences.setdefault(name, start())
        while len(seq) <= index:
            seq.append(step(seq))
        return seq[index]

    def m_seq(self, k: int) -> FormValue:
        if k < 1:
            raise ValueError("m-sequence starts at index 1")
        return self._sequence("m", k, lambda: [FormValue.zero(), self.m], lambda s: self._derive(s[-1]))

    def t_seq(self, n: int) -> FormValue:
        return self._sequence(
            "t",
            n,
            lambda: [FormValue.constant(1), self.t],
            lambda s: self._derive(s[-1]) + self.t * s[-1],
        )

    def n_seq(self, k: int) -> FormValue:
        if k < 1:
            raise ValueError("n-sequence starts at index 1")
        return self._sequence("n", k, lambda: [FormValue.zero(), -self.m], lambda s: s[-1].serre_x())

    def s_seq(self, n: int) -> FormValue:
        s1 = self.m.scale(self.lam) - self.t
        return self._sequence(
            "s",
            n,
            lambda: [FormValue.constant(1), s1],
            lambda s: s[-1].serre_x() + s[-1] * s1,
        )

    # the cocycle -------------------------------------------------------

    def u_monomial(self, mono: PBWMonomial) -> FormValue:
        value = FormValue.constant(self.lam**mono.y) * self.t_seq(mono.x)
        for k, e in enumerate(mono.deltas, start=1):
            if e:
                value = value * self.m_seq(k) ** e
        return value

    def u(self, h: H1Elem) -> FormValue:
        acc = FormValue.zero()
        for mono, c in h.items():
            acc = acc + self.u_monomial(mono).scale(c)
        return acc

    def u_inv_monomial(self, mono: PBWMonomial) -> FormValue:
        value = FormValue.constant((-self.lam) ** mono.y) * self.s_seq(mono.x)
        for k, e in enumerate(mono.deltas, start=1):
            if e:
                value = value * self.n_seq(k) ** e
        return value

    def u_inv(self, h: H1Elem) -> FormValue:
        acc = FormValue.zero()
        for mono, c in h.items():
            acc = acc + self.u_inv_monomial(mono).scale(c)
        return acc

    def u_inv_generic_monomial(self, mono: PBWMonomial) -> FormValue:
        """Convolution inverse solved from u * v = epsilon, one monomial at a time."""
        if mono in self._inverse:
            return self._inverse[mono]
        if mono.is_unit():
            value = FormValue.constant(1)
        else:
            value = FormValue.zero()
            for (h1, h2), c in coproduct_monomial(mono).items():
                if h1.is_unit():
                    continue
                value = value - (self.u_monomial(h1) * self.u_inv_generic_monomial(h2)).scale(c)
        self._inverse[mono] = value
        return value

    def u_inv_generic(self, h: H1Elem) -> FormValue:
        acc = FormValue.zero()
        for mono, c in h.items():
            acc = acc + self.u_inv_generic_monomial(mono).scale(c)
        return acc

    def convolution(self, left, right, h: H1Elem) -> FormValue:
        """(left * right)(h) = sum left(h_(1)) right(h_(2)) for maps on monomials."""
        acc = FormValue.zero()
        for mono, c in h.items():
            for (h1, h2), d in coproduct_monomial(mono).items():
                acc = acc + (left(h1) * right(h2)).scale(c * d)
        return acc

    def cocycle_defect(self, h: H1Elem, h_prime: H1Elem) -> FormValue:
        """u(h h') - sum u(h_(1)) h_(2)(u(h')); zero for a 1-cocycle."""
        target = self.u(h_prime)
        acc = FormValue.zero()
        for mono, c in h.items():
            for (h1, h2), d in coproduct_monomial(mono).items():
                acc = acc + (self.u_monomial(h1) * act_on_value(H1Elem.of(h2), target)).scale(c * d)
        return self.u(h * h_prime) - acc

    # the perturbed action ---------------------------------------------

    def act(self, h: H1Elem, a: HeckeElem) -> HeckeElem:
        """sum u(h_(1)) h_(2)(a) v(h_(3)) from the triple coproduct."""
        acc = HeckeElem.zero()
        for (h1, h2, h3), c in iterated_coproduct(h, 3).items():
            left = self.u_monomial(h1)
            right = self.u_inv_monomial(h3)
            if left.is_zero() or right.is_zero():
                continue
            middle = hopf_act(H1Elem.of(h2), a)
            term = convolve(convolve(HeckeElem.from_form(left), middle), HeckeElem.from_form(right))
            acc = acc + term.scale(c)
        return acc

    def x_tilde(self, a: HeckeElem) -> HeckeElem:
        """X(a) + [t - lambda m, a] - lambda delta_1(a) + m Y(a)."""
        shift = self.t - self.m.scale(self.lam)
        return (
            apply_x(a)
            + inner_bracket(shift, a)
            - apply_delta(1, a).scale(self.lam)
            + convolve(HeckeElem.from_form(self.m), apply_y(a))
        )

    def delta1_tilde(self, a: HeckeElem) -> HeckeElem:
        return apply_delta(1, a) + inner_bracket(self.m, a)

    def y_tilde(self, a: HeckeElem) -> HeckeElem:
        return apply_y(a)

    def delta2p_potential(self) -> FormValue:
        """X(m) + m^2 / 2 - omega_4, whose inner derivation is the perturbed delta_2'."""
        return self.m.serre_x() + (self.m * self.m).scale(Fraction(1, 2)) - omega4()

    def delta2p_tilde(self, a: HeckeElem) -> HeckeElem:
        return inner_bracket(self.delta2p_potential(), a)


def perturb(t: FormValue, lam, m: FormValue) -> Perturbation:
    logger.debug("building perturbation with lambda=%s", lam)
    return Perturbation(t, as_rational(lam), m)


__all__ = ["Perturbation", "perturb"]
