"""Check results shared by the verification drivers and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    check: str
    passed: bool
    witness: object = None
    residual_degree: int | None = None
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"check": self.check, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.residual_degree is not None:
            out["residual_degree"] = self.residual_degree
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    name: str
    checks: list = field(default_factory=list)

    def add(self, check, passed, **kw) -> CheckResult:
        r = CheckResult(check, bool(passed), **kw)
        self.checks.append(r)
        return r

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(
                CheckResult(prefix + c.check, c.passed, c.witness, c.residual_degree, c.detail)
            )

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "report": self.name,
            "status": "pass" if self.ok else "fail",
            "checks": [c.to_json() for c in self.checks],
        }

    def __str__(self):
        lines = [f"{self.name}: {'pass' if self.ok else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.check}" + (f" ({c.detail})" if c.detail else ""))
        return "\n".join(lines)
