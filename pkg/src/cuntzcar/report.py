"""Structured pass/fail reports produced by the verification suites."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Check:
    identity: str
    status: str
    samples: tuple[int, ...] = ()
    counterexample: Any = None
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"identity": self.identity, "status": self.status,
                               "samples": list(self.samples)}
        if self.counterexample is not None:
            out["counterexample"] = str(self.counterexample)
        if self.detail:
            out["detail"] = self.detail
        return out


def check(identity: str, ok: bool, samples: tuple[int, ...] = (),
          counterexample: Any = None, **detail) -> Check:
    """Build a :class:`Check`; the counterexample is dropped when ``ok``."""
    return Check(identity, PASS if ok else FAIL, tuple(samples),
                 None if ok else counterexample, detail)


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, c: Check) -> None:
        self.checks.append(c)

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    def summary(self) -> dict[str, dict[str, int]]:
        """Per-identity status counts, in first-seen order."""
        table: dict[str, Counter] = {}
        for c in self.checks:
            table.setdefault(c.identity, Counter())[c.status] += 1
        return {name: dict(counts) for name, counts in table.items()}

    def to_dict(self, include_checks: bool = False) -> dict:
        out = {"title": self.title, "passed": self.passed,
               "total": len(self.checks), "summary": self.summary(),
               "failures": [c.to_dict() for c in self.failures()]}
        if self.info:
            out["info"] = self.info
        if include_checks:
            out["checks"] = [c.to_dict() for c in self.checks]
        return out

    def format(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks)} checks)"]
        for name, counts in self.summary().items():
            status = "ok" if set(counts) == {PASS} else "FAILED"
            shown = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
            lines.append(f"  [{status}] {name}: {shown}")
        for key, value in self.info.items():
            lines.append(f"  {key}: {value}")
        for c in self.failures()[:10]:
            lines.append(f"  ! {c.identity} samples={list(c.samples)} "
                         f"counterexample={c.counterexample}")
        return "\n".join(lines)
