"""Pass/fail bookkeeping shared by the identity checks and suites."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)
    elapsed: float = 0.0

    def check(self, name: str, ok: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def finish(self) -> Report:
        self.elapsed = time.perf_counter() - self.started
        return self

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        bad = self.failures
        return (f"{self.name}: {len(self.checks) - len(bad)}/{len(self.checks)} passed"
                + (f", first failure: {bad[0].name}" if bad else ""))
