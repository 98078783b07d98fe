"""Verification report types shared by every verify_* entry point."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named identity check.

    max_residual is a decimal string; exact passes report "0".  On failure,
    counterexample holds the first offending indices and both side values,
    already stringified by the caller.
    """

    name: str
    passed: bool
    max_residual: str = "0"
    counterexample: Mapping[str, Any] | None = None

    @classmethod
    def exact_pass(cls, name: str) -> "CheckResult":
        return cls(name=name, passed=True, max_residual="0")

    @classmethod
    def float_pass(cls, name: str, residual: float) -> "CheckResult":
        return cls(name=name, passed=True, max_residual=f"{residual:.17g}")

    @classmethod
    def failure(
        cls, name: str, residual: str, indices: Any, lhs: str, rhs: str
    ) -> "CheckResult":
        return cls(
            name=name,
            passed=False,
            max_residual=residual,
            counterexample={"indices": indices, "lhs": lhs, "rhs": rhs},
        )

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "max_residual": self.max_residual,
        }
        if self.counterexample is not None:
            out["counterexample"] = dict(self.counterexample)
        return out


@dataclass(frozen=True)
class VerificationReport:
    """A suite name, a parameter echo, and the list of check outcomes."""

    suite: str
    params: Mapping[str, Any] = field(default_factory=dict)
    checks: Sequence[CheckResult] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": dict(self.params),
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_dict() for c in self.checks],
        }

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            suite=self.suite,
            params=dict(self.params),
            checks=tuple(self.checks) + tuple(other.checks),
        )
