"""Pass/fail records produced by the verification harness."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass
class CheckRecord:
    name: str
    weights: tuple[int, ...]
    count: int
    passed: bool
    counterexample: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "weights": list(self.weights),
            "count": self.count,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }

    def line(self) -> str:
        w = "(" + ",".join(map(str, self.weights)) + ")"
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {w} {self.name} [{self.count}]"
        if self.counterexample is not None:
            detail = ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
            text += f" counterexample: {detail}"
        return text


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def total_checks(self) -> int:
        return sum(r.count for r in self.records)

    def add(self, name, weights, count, counterexample=None) -> CheckRecord:
        rec = CheckRecord(name, tuple(weights), count, counterexample is None,
                          counterexample)
        self.records.append(rec)
        return rec

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.records.extend(other.records)
        return self

    @classmethod
    def merge(cls, reports: Iterable["VerificationReport"]) -> "VerificationReport":
        """Concatenate reports in a deterministic order (weights, then name)."""
        records = [r for rep in reports for r in rep.records]
        records.sort(key=lambda r: (len(r.weights), r.weights, r.name))
        return cls(records)

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": self.total_checks,
            "records": [r.to_dict() for r in self.records],
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status}: {len(self.records)} records, {self.total_checks} "
                f"atomic checks, {len(self.failures)} failing")
