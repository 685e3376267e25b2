"""The Euler 2-cocycle rho, Eisenstein-class constant terms and the module identities."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from src.cli.registry import check
from src.eisenstein import cocycle_defect, euler_rho, mu_constant_term, mu_symbolic, refine, slash_class
from src.exact import GroupElem, Mat, hnf_cosets
from src.models.checks import CheckResult
from src.models.config import RunConfig
from src.qseries import mu_series
from src.utils.sampling import random_eis_class, random_gl2_plus, random_sl2

MAX_UPPER_DET = 24
UPPER_SAMPLES = 30
CLASS_TRIPLES = 100
CLASS_MAX_ENTRY = 8


@check("euler", "reference_value", "rho(diag(1, 2), T) = -1/12")
def reference_value(config: RunConfig) -> CheckResult:
    value = euler_rho(Mat(1, 0, 0, 2), Mat(1, 1, 0, 1))
    return CheckResult.from_bool("euler.reference_value", value == Fraction(-1, 12), detail=str(value))


@check("euler", "cocycle", "rho(g2, g3) - rho(g1 g2, g3) + rho(g1, g2 g3) - rho(g1, g2) = 0")
def cocycle(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    failed = 0
    first = ""
    for _ in range(config.triples):
        g1, g2, g3 = (random_gl2_plus(rng, config.max_entry) for _ in range(3))
        defect = cocycle_defect(euler_rho, g1, g2, g3)
        if defect != 0:
            failed += 1
            first = first or f"({g1}, {g2}, {g3}) -> {defect}"
    detail = f"{config.triples - failed}/{config.triples} triples pass" + (f"; first failure {first}" if first else "")
    return CheckResult.from_bool("euler.cocycle", failed == 0, detail=detail)


@check("euler", "modular_vanishing", "rho(gamma, g) = 0 for gamma in SL2(Z)")
def modular_vanishing(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    for _ in range(config.pairs):
        gamma, g = random_sl2(rng, config.max_entry), random_gl2_plus(rng, config.max_entry)
        if euler_rho(gamma, g) != 0:
            return CheckResult.from_bool("euler.modular_vanishing", False, detail=f"rho({gamma}, {g}) != 0")
    return CheckResult.from_bool("euler.modular_vanishing", True)


@check("euler", "constant_terms", "a0(mu_g) from classes equals the constant term of mu_g")
def constant_terms(config: RunConfig) -> CheckResult:
    mats = [reps[i] for n in range(2, MAX_UPPER_DET + 1) for reps in [hnf_cosets(n)] for i in (0, -1)]
    mats = mats[:UPPER_SAMPLES]
    for g in mats:
        series = mu_series(g, 4).constant_term()
        if series != mu_constant_term(g):
            return CheckResult.from_bool(
                "euler.constant_terms", False, detail=f"{g}: {mu_constant_term(g)} vs {series}"
            )
    return CheckResult.from_bool("euler.constant_terms", True, detail=f"{len(mats)} matrices")


def _class_failures(config: RunConfig, count: int, label: str, holds) -> CheckResult:
    """Run ``holds(rng)`` ``count`` times; it returns None or a description of the failure."""
    rng = np.random.default_rng(config.seed)
    failed = 0
    first = ""
    for _ in range(count):
        problem = holds(rng)
        if problem:
            failed += 1
            first = first or problem
    detail = f"{count - failed}/{count} samples pass" + (f"; first failure {first}" if first else "")
    return CheckResult.from_bool(label, failed == 0, detail=detail)


def _class_entry(config: RunConfig) -> int:
    return min(config.max_entry, CLASS_MAX_ENTRY)


@check("euler", "action_compatibility", "(c | g1) | g2 = c | (g1 g2) in the Eisenstein module")
def action_compatibility(config: RunConfig) -> CheckResult:
    bound = _class_entry(config)

    def holds(rng):
        c = random_eis_class(rng)
        g1, g2 = random_gl2_plus(rng, bound), random_gl2_plus(rng, bound)
        if slash_class(slash_class(c, g1), g2) != slash_class(c, g1 @ g2):
            return f"({c}, {g1}, {g2})"
        return None

    return _class_failures(config, min(config.triples, CLASS_TRIPLES), "euler.action_compatibility", holds)


@check("euler", "scalar_trivial", "c | nI = c for the scalar matrices n I")
def scalar_trivial(config: RunConfig) -> CheckResult:
    def holds(rng):
        c = random_eis_class(rng)
        n = int(rng.integers(2, 5))
        if slash_class(c, Mat(n, 0, 0, n)) != c or slash_class(c, GroupElem.of(Mat.identity(), n)) != c:
            return f"({c}, {n})"
        return None

    return _class_failures(config, config.samples, "euler.scalar_trivial", holds)


@check("euler", "mu_cocycle", "mu(g1 g2) = mu(g1) | g2 + mu(g2) in the Eisenstein module")
def mu_cocycle(config: RunConfig) -> CheckResult:
    bound = _class_entry(config)

    def holds(rng):
        g1, g2 = random_gl2_plus(rng, bound), random_gl2_plus(rng, bound)
        if mu_symbolic(g1 @ g2) != slash_class(mu_symbolic(g1), g2) + mu_symbolic(g2):
            return f"({g1}, {g2})"
        return None

    return _class_failures(config, config.pairs, "euler.mu_cocycle", holds)


@check("euler", "refine_slash_commute", "refine(c | g, n) = refine(c, n) | g")
def refine_slash_commute(config: RunConfig) -> CheckResult:
    bound = _class_entry(config)

    def holds(rng):
        c = random_eis_class(rng)
        g = random_gl2_plus(rng, bound)
        n = int(rng.integers(2, 4))
        if refine(slash_class(c, g), n) != slash_class(refine(c, n), g):
            return f"({c}, {g}, {n})"
        return None

    return _class_failures(config, config.samples, "euler.refine_slash_commute", holds)
