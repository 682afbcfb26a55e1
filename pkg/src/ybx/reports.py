"""Uniform pass/fail reporting for the law checkers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    """One verified law instance: identifier, law tag, outcome, first witness, timing."""

    check_id: str
    law: str
    passed: bool
    witness: tuple | None = None
    witnesses: tuple = ()
    detail: str = ""
    seconds: float = 0.0

    def to_obj(self) -> dict:
        obj = {
            "id": self.check_id,
            "law": self.law,
            "pass": self.passed,
            "seconds": round(self.seconds, 6),
        }
        if self.witness is not None:
            obj["witness"] = list(self.witness)
        if self.witnesses:
            obj["witnesses"] = [list(w) for w in self.witnesses]
        if self.detail:
            obj["detail"] = self.detail
        return obj

    def render(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        line = f"{head}  {self.check_id}  [{self.law}]"
        if self.detail:
            line += f"  {self.detail}"
        if not self.passed and self.witness is not None:
            line += f"  witness={self.witness}"
        return line


@dataclass(frozen=True)
class Report:
    """An ordered collection of checks with an overall verdict."""

    checks: tuple[Check, ...]

    @classmethod
    def of(cls, *checks: Check) -> "Report":
        return cls(tuple(checks))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def merge(self, other: "Report") -> "Report":
        return Report(self.checks + other.checks)

    def find(self, check_id: str) -> Check:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_obj(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_obj() for c in self.checks]}

    def render_text(self) -> str:
        lines = [c.render() for c in self.checks]
        verdict = "all checks passed" if self.passed else "law failure"
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({verdict})")
        return "\n".join(lines)
