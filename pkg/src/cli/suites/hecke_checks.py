"""Hecke-algebra identities on the q-computable fragment, including the
Hopf action and its inner perturbations."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from src.cli.registry import check
from src.exact import GroupElem, Mat, hnf_cosets
from src.hecke import (
    FormValue,
    HeckeElem,
    act_on_form,
    apply_delta,
    apply_x,
    apply_y,
    epsilon,
    hecke_T,
    hopf_act,
    inner_bracket,
    j_embed,
    omega4,
    perturb,
    schwarzian_sigma,
    value_equal,
)
from src.hopf import H1Elem, counit, delta2_prime, monomials_up_to
from src.models.checks import CheckResult
from src.models.config import RunConfig
from src.utils.sampling import random_upper

X, Y, D1 = H1Elem.X(), H1Elem.Y(), H1Elem.delta(1)
BETA2 = Mat(2, 0, 0, 1)
MAX_COSET_DET = 12
COPRIME_PAIRS = ((2, 3), (2, 5), (3, 4))
FRAGMENT_ORDER = 40


def _random_value(rng: np.random.Generator) -> FormValue:
    kind = int(rng.integers(6))
    if kind < 4:
        return FormValue.form(("E4", "E6", "eta4", "Delta")[kind])
    if kind == 4:
        return FormValue.mu(random_upper(rng, 6))
    return FormValue.constant(Fraction(int(rng.integers(1, 5)), int(rng.integers(1, 3))))


def _random_element(rng: np.random.Generator) -> HeckeElem:
    return HeckeElem.single(random_upper(rng, MAX_COSET_DET), _random_value(rng))


@check("hecke", "t2_eigenvalues", "T(2) E4 = 9/2 E4 and T(2) Delta = -3/4 Delta")
def t2_eigenvalues(config: RunConfig) -> CheckResult:
    e4, delta = FormValue.form("E4"), FormValue.form("Delta")
    ok = value_equal(act_on_form(hecke_T(2), e4), e4.scale(Fraction(9, 2)), config.order) and value_equal(
        act_on_form(hecke_T(2), delta), delta.scale(Fraction(-3, 4)), config.order
    )
    return CheckResult.from_bool("hecke.t2_eigenvalues", ok, verified_order=str(config.order))


@check("hecke", "multiplicative", "T(m) T(n) = T(mn) for coprime m, n")
def multiplicative(config: RunConfig) -> CheckResult:
    for m, n in COPRIME_PAIRS:
        if hecke_T(m) * hecke_T(n) != hecke_T(m * n):
            return CheckResult.from_bool("hecke.multiplicative", False, detail=f"fails for ({m}, {n})")
    return CheckResult.from_bool("hecke.multiplicative", True)


@check("hecke", "epsilon_j", "epsilon(j(h)) = h on weight-0 elements")
def epsilon_j(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    for _ in range(config.samples):
        h = {}
        for _ in range(int(rng.integers(1, 4))):
            key = GroupElem.of(random_upper(rng, MAX_COSET_DET))
            h[key] = h.get(key, 0) + Fraction(int(rng.integers(1, 7)), int(rng.integers(1, 4)))
        if epsilon(j_embed(h)) != h:
            return CheckResult.from_bool("hecke.epsilon_j", False, detail=f"fails on {h}")
    return CheckResult.from_bool("hecke.epsilon_j", True)


@check("hecke", "leibniz", "Y, delta_1 and X satisfy their Leibniz rules on products")
def leibniz(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    order = min(config.order, FRAGMENT_ORDER)
    for _ in range(config.fragment_pairs):
        a, b = _random_element(rng), _random_element(rng)
        ab = a * b
        ok = (
            apply_y(ab) == apply_y(a) * b + a * apply_y(b)
            and apply_delta(1, ab).equals(apply_delta(1, a) * b + a * apply_delta(1, b), order)
            and apply_x(ab).equals(apply_x(a) * b + a * apply_x(b) + apply_delta(1, a) * apply_y(b), order)
        )
        if not ok:
            return CheckResult.from_bool("hecke.leibniz", False, detail=f"fails on {a.render()} ; {b.render()}")
    return CheckResult.from_bool(
        "hecke.leibniz", True, detail=f"{config.fragment_pairs} pairs", verified_order=str(order)
    )


@check("hecke", "delta_commutators", "delta_{n+1} = [X, delta_n] for n = 1, 2")
def delta_commutators(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    order = min(config.order, FRAGMENT_ORDER)
    for _ in range(config.fragment_pairs):
        F = _random_element(rng) * _random_element(rng)
        for n in (1, 2):
            bracket = apply_x(apply_delta(n, F)) - apply_delta(n, apply_x(F))
            if not bracket.equals(apply_delta(n + 1, F), order):
                return CheckResult.from_bool("hecke.delta_commutators", False, detail=f"n={n} on {F.render()}")
    return CheckResult.from_bool(
        "hecke.delta_commutators", True, detail=f"{config.fragment_pairs} pairs", verified_order=str(order)
    )


@check("hecke", "inner_schwarzian", "X(mu_g) - mu_g^2 / 2 = omega_4|g - omega_4")
def inner_schwarzian(config: RunConfig) -> CheckResult:
    mats = [h for n in range(2, MAX_COSET_DET + 1) for h in hnf_cosets(n)][:20]
    w = omega4()
    for g in mats:
        if not value_equal(schwarzian_sigma(g), w.slash(g) - w, config.order):
            return CheckResult.from_bool("hecke.inner_schwarzian", False, detail=f"fails for {g}")
    return CheckResult.from_bool("hecke.inner_schwarzian", True, verified_order=str(config.order))


@check("hecke", "delta2_prime_inner", "delta_2'(a) = -[omega_4, a]")
def delta2_prime_inner(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    for _ in range(config.samples):
        a = _random_element(rng)
        if not hopf_act(delta2_prime(), a).equals(-inner_bracket(omega4(), a), config.order):
            return CheckResult.from_bool("hecke.delta2_prime_inner", False, detail=f"fails on {a.render()}")
    return CheckResult.from_bool("hecke.delta2_prime_inner", True)


def _sample_perturbation():
    return perturb(FormValue.zero(), 1, FormValue.mu(BETA2))


@check("hecke", "perturbation_cocycle", "u(hk) = sum u(h_(1)) h_(2)(u(k)) through degree 3", slow=True)
def perturbation_cocycle(config: RunConfig) -> CheckResult:
    u = _sample_perturbation()
    monomials = monomials_up_to(3, 1)
    for h in monomials:
        for k in monomials:
            if h.degree + k.degree > 3:
                continue
            if not value_equal(u.cocycle_defect(H1Elem.of(h), H1Elem.of(k)), FormValue.zero(), config.order):
                return CheckResult.from_bool(
                    "hecke.perturbation_cocycle", False, detail=f"fails on ({h.render()}, {k.render()})"
                )
    return CheckResult.from_bool("hecke.perturbation_cocycle", True)


@check("hecke", "perturbation_inverse", "u * u^-1 = counit and u(delta_2') = X(m) + m^2 / 2")
def perturbation_inverse(config: RunConfig) -> CheckResult:
    u = _sample_perturbation()
    for mono in monomials_up_to(3, 1):
        h = H1Elem.of(mono)
        if u.convolution(u.u_monomial, u.u_inv_generic_monomial, h) != FormValue.constant(counit(h)):
            return CheckResult.from_bool("hecke.perturbation_inverse", False, detail=f"fails on {mono.render()}")
    m = u.m
    ok = u.u(delta2_prime()) == m.serre_x() + (m * m).scale(Fraction(1, 2))
    return CheckResult.from_bool("hecke.perturbation_inverse", ok)


@check("hecke", "perturbed_generators", "closed forms of the perturbed X, delta_1, Y")
def perturbed_generators(config: RunConfig) -> CheckResult:
    u = _sample_perturbation()
    rng = np.random.default_rng(config.seed)
    for _ in range(config.samples):
        a = _random_element(rng)
        ok = (
            u.act(X, a).equals(u.x_tilde(a), config.order)
            and u.act(D1, a).equals(u.delta1_tilde(a), config.order)
            and u.act(Y, a) == u.y_tilde(a)
        )
        if not ok:
            return CheckResult.from_bool("hecke.perturbed_generators", False, detail=f"fails on {a.render()}")
    return CheckResult.from_bool("hecke.perturbed_generators", True)
