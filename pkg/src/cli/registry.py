"""Name-keyed registry of verification checks and the suite runner."""

from __future__ import annotations

import sys
from typing import Callable, Dict, List

from tqdm import tqdm

from src.exact.errors import ModHeckeError
from src.models.checks import CheckResult, CheckSpec, Report
from src.models.config import RunConfig
from src.utils.logger import get_logger

logger = get_logger(__name__)

SUITES = ("hopf", "hecke", "euler", "curve", "analytic")

_REGISTRY: Dict[str, CheckSpec] = {}


def register_check(spec: CheckSpec) -> None:
    """Register a single CheckSpec under its id.

    Args:
        spec (CheckSpec): The check to register. Its suite must be one of ``SUITES``.

    Raises:
        ValueError: if the suite is unknown or the id is already taken.
    """
    if spec.suite not in SUITES:
        raise ValueError(f"unknown suite {spec.suite!r}")
    if spec.check_id in _REGISTRY:
        raise ValueError(f"check {spec.check_id!r} is already registered")
    _REGISTRY[spec.check_id] = spec


def check(suite: str, name: str, anchor: str = "", slow: bool = False) -> Callable:
    """Decorator form of :func:`register_check`; the id becomes ``<suite>.<name>``."""

    def wrap(fn: Callable[[RunConfig], CheckResult]) -> Callable[[RunConfig], CheckResult]:
        register_check(CheckSpec(check_id=f"{suite}.{name}", suite=suite, anchor=anchor, slow=slow, run=fn))
        return fn

    return wrap


def get_check(check_id: str) -> CheckSpec:
    """Return the named ``CheckSpec``.

    Raises ``KeyError`` if the id is not registered.
    """
    return _REGISTRY[check_id]


def all_checks() -> Dict[str, CheckSpec]:
    """Return a shallow copy of the registry mapping."""
    return dict(_REGISTRY)


def checks_for_suite(suite: str) -> List[CheckSpec]:
    """Registered checks of ``suite`` (or of every suite for ``"all"``), sorted by id."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES + ('all',))}")
    return sorted(
        (s for s in _REGISTRY.values() if suite == "all" or s.suite == suite),
        key=lambda s: s.check_id,
    )


def run_check(spec: CheckSpec, config: RunConfig) -> CheckResult:
    """Run one check; library errors become a failed result instead of aborting the suite."""
    if spec.slow and not config.include_slow:
        return spec.skipped()
    try:
        result = spec.run(config)
    except (ModHeckeError, ArithmeticError) as exc:
        logger.warning("%s raised %s: %s", spec.check_id, type(exc).__name__, exc)
        return CheckResult(check_id=spec.check_id, anchor=spec.anchor, status="fail", detail=f"{type(exc).__name__}: {exc}")
    if not result.anchor and spec.anchor:
        result = result.model_copy(update={"anchor": spec.anchor})
    if result.status == "fail":
        logger.warning("%s failed %s", spec.check_id, result.detail)
    else:
        logger.info("%s %s", spec.check_id, result.status)
    return result


def run_checks(name: str, specs: List[CheckSpec], config: RunConfig, progress: bool = True) -> Report:
    results = [
        run_check(spec, config)
        for spec in tqdm(specs, desc=f"verify {name}", unit="check", file=sys.stderr, disable=not progress)
    ]
    return Report(suite=name, checks=results).sorted()


def run_suite(suite: str, config: RunConfig, progress: bool = True) -> Report:
    """Run every registered check of ``suite`` in canonical order."""
    return run_checks(suite, checks_for_suite(suite), config, progress)


__all__ = [
    "SUITES",
    "register_check",
    "check",
    "get_check",
    "all_checks",
    "checks_for_suite",
    "run_check",
    "run_checks",
    "run_suite",
]
