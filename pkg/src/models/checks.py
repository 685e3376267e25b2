"""Pydantic models for verification results and suite reports."""

from __future__ import annotations

from typing import Callable, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Status = Literal["pass", "fail", "skipped"]


class CheckResult(BaseModel):
    """Outcome of one identity check.

    Fields:
        check_id: Stable identifier, unique within a suite.
        anchor: Short description of the identity being checked.
        status: pass, fail or skipped.
        verified_order: Exponent through which a series identity was checked.
        residual: Largest numeric deviation observed, for floating-point checks.
        tolerance: Tolerance the residual was compared against.
        detail: Free-form note, e.g. the first failing sample.
    """

    check_id: str = Field(description="Stable identifier of the check")
    anchor: str = Field("", description="What identity the check verifies")
    status: Status = Field(description="pass, fail or skipped")
    verified_order: Optional[str] = Field(None, description="q-order through which the identity holds")
    residual: Optional[float] = Field(None, description="Largest numeric deviation")
    tolerance: Optional[float] = Field(None, description="Numeric tolerance")
    detail: str = Field("", description="Additional information")

    model_config = ConfigDict(frozen=True)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @classmethod
    def from_bool(cls, check_id: str, ok: bool, anchor: str = "", **extra) -> "CheckResult":
        return cls(check_id=check_id, anchor=anchor, status="pass" if ok else "fail", **extra)

    @classmethod
    def numeric(cls, check_id: str, residual: float, tolerance: float, anchor: str = "", **extra) -> "CheckResult":
        status = "pass" if residual <= tolerance else "fail"
        return cls(
            check_id=check_id,
            anchor=anchor,
            status=status,
            residual=float(residual),
            tolerance=float(tolerance),
            **extra,
        )


class Report(BaseModel):
    """All checks of one suite, sorted by check id."""

    suite: str = Field(description="Suite name")
    checks: List[CheckResult] = Field(default_factory=list)

    def sorted(self) -> "Report":
        return Report(suite=self.suite, checks=sorted(self.checks, key=lambda c: c.check_id))

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out


class CheckSpec(BaseModel):
    """A registered check: metadata plus the callable that runs it.

    Attributes:
        check_id: Registry key, ``<suite>.<name>``.
        suite: Suite the check belongs to.
        anchor: Identity being verified, copied into the result.
        slow: Skipped unless the run includes slow checks.
        run: Callable taking a RunConfig and returning a CheckResult.
    """

    check_id: str
    suite: str
    anchor: str = ""
    slow: bool = False
    run: Callable[..., CheckResult] = Field(exclude=True)

    model_config = ConfigDict(frozen=True)

    def skipped(self) -> CheckResult:
        return CheckResult(check_id=self.check_id, anchor=self.anchor, status="skipped", detail="slow check")


__all__ = ["CheckResult", "CheckSpec", "Report", "Status"]
