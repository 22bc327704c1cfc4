"""Verdict containers returned by every checker."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Failure:
    check: str
    witness: object

    def __str__(self):
        return f"{self.check}: {self.witness!r}"


@dataclass
class Report:
    """Outcome of a checker: how many cases ran and which ones failed.

    Only the first failure of each named check is kept, so a witness is the
    smallest one in enumeration order.
    """

    name: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def case(self, check: str, passed: bool, witness: object = None) -> bool:
        self.cases += 1
        if not passed and all(f.check != check for f in self.failures):
            self.failures.append(Failure(check, witness))
        return passed

    def fail(self, check: str, witness: object) -> None:
        self.case(check, False, witness)

    def absorb(self, other: Report) -> Report:
        self.cases += other.cases
        for f in other.failures:
            self.failures.append(Failure(f"{other.name}/{f.check}", f.witness))
        self.notes.extend(other.notes)
        return self

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"[{status}] {self.name}: {self.cases} cases, {len(self.failures)} failures"]
        lines.extend(f"    {f}" for f in self.failures)
        lines.extend(f"    note: {n}" for n in self.notes)
        return "\n".join(lines)
