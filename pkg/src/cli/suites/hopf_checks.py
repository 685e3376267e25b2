"""Exact identities of H1 and its Hopf-cyclic complex."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from src.cli.registry import check
from src.hopf import (
    B,
    Cochain,
    H1Elem,
    b,
    coproduct,
    distinguished,
    monomials_up_to,
    normalize,
    tau,
    tensor_mul,
    twisted_antipode,
)
from src.models.checks import CheckResult
from src.models.config import RunConfig

D1, D2 = H1Elem.delta(1), H1Elem.delta(2)


def _random_cochain(degree: int, rng: np.random.Generator, n_terms: int = 2) -> Cochain:
    pool = [m for m in monomials_up_to(2, 1) if not m.is_unit()]
    acc = Cochain.zero(degree)
    for _ in range(n_terms):
        key = tuple(pool[int(rng.integers(len(pool)))] for _ in range(degree))
        acc = acc + Cochain(degree, {key: Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 3)))})
    return acc


@check("hopf", "b_delta1", "b(delta_1) = 0")
def b_delta1(config: RunConfig) -> CheckResult:
    return CheckResult.from_bool("hopf.b_delta1", b(D1).is_zero())


@check("hopf", "tau_delta1", "tau_1(delta_1) = -delta_1")
def tau_delta1(config: RunConfig) -> CheckResult:
    return CheckResult.from_bool("hopf.tau_delta1", tau(D1).to_elem() == -D1)


@check("hopf", "godbillon_vey", "b(c) = 0 and B(c) = delta_2 - delta_1^2 / 2")
def godbillon_vey(config: RunConfig) -> CheckResult:
    c = distinguished()["c"]
    ok = b(c).is_zero() and B(c).to_elem() == D2 - D1 * D1 * Fraction(1, 2)
    return CheckResult.from_bool("hopf.godbillon_vey", ok)


@check("hopf", "transverse_fundamental", "b(F) = 0, tau_2(F) = F, B(F) = 0")
def transverse_fundamental(config: RunConfig) -> CheckResult:
    F = distinguished()["F"]
    ok = b(F).is_zero() and tau(F) == F and B(F).is_zero()
    return CheckResult.from_bool("hopf.transverse_fundamental", ok)


@check("hopf", "twisted_antipode", "twisted antipode squares to the identity through degree 4")
def twisted_antipode_involutive(config: RunConfig) -> CheckResult:
    for mono in monomials_up_to(4, 1):
        u = H1Elem.of(mono)
        if twisted_antipode(twisted_antipode(u)) != u:
            return CheckResult.from_bool("hopf.twisted_antipode", False, detail=f"fails on {mono.render()}")
    return CheckResult.from_bool("hopf.twisted_antipode", True)


@check("hopf", "coproduct_multiplicative", "Delta(uv) = Delta(u) Delta(v)")
def coproduct_multiplicative(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    pool = monomials_up_to(3, 2)
    for _ in range(config.samples * 5):
        u, v = (H1Elem.of(pool[int(rng.integers(len(pool)))]) for _ in range(2))
        if coproduct(u * v) != tensor_mul(coproduct(u), coproduct(v)):
            return CheckResult.from_bool("hopf.coproduct_multiplicative", False, detail=f"fails on {u!r}, {v!r}")
    return CheckResult.from_bool("hopf.coproduct_multiplicative", True)


@check("hopf", "mixed_complex", "b^2 = 0, B^2 = 0, bB + Bb = 0 on random cochains")
def mixed_complex(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    for _ in range(max(config.samples // 2, 1)):
        for degree in (1, 2):
            c = _random_cochain(degree, rng)
            if not b(b(c)).is_zero():
                return CheckResult.from_bool("hopf.mixed_complex", False, detail=f"b^2 fails on {c!r}")
        for degree in (2, 3):
            c = _random_cochain(degree, rng)
            if not normalize(B(B(c))).is_zero():
                return CheckResult.from_bool("hopf.mixed_complex", False, detail=f"B^2 fails on {c!r}")
        c = _random_cochain(2, rng)
        if not normalize(b(B(c)) + B(b(c))).is_zero():
            return CheckResult.from_bool("hopf.mixed_complex", False, detail=f"bB + Bb fails on {c!r}")
    return CheckResult.from_bool("hopf.mixed_complex", True)
