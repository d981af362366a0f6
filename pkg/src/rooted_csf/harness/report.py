"""Verification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class Failure:
    instance: int
    input: str
    message: str
    reproduce: str

    def to_json(self) -> dict:
        return {"instance": self.instance, "input": self.input, "message": self.message, "reproduce": self.reproduce}


@dataclass
class Report:
    suite: str
    max_n: int
    seed: int
    instances: int = 0
    checks: int = 0
    failures: List[Failure] = field(default_factory=list)
    guard_breaches: List[Failure] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    wall_time_s: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "max_n": self.max_n,
            "seed": self.seed,
            "instances": self.instances,
            "checks": self.checks,
            "passed": self.passed,
            "failures": [f.to_json() for f in self.failures],
            "guard_breaches": [f.to_json() for f in self.guard_breaches],
            "notes": list(self.notes),
        }
        if timing:
            out["wall_time_s"] = self.wall_time_s
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"{self.suite}: {status}  max_n={self.max_n} instances={self.instances} "
            f"checks={self.checks} failures={len(self.failures)} guard={len(self.guard_breaches)}"
            + (f" time={self.wall_time_s:.2f}s" if self.wall_time_s is not None else "")
        ]
        lines.extend(f"  note: {note}" for note in self.notes)
        for f in self.failures[:20]:
            lines.append(f"  [{f.instance}] {f.message}\n      input: {f.input}\n      rerun: {f.reproduce}")
        for f in self.guard_breaches[:20]:
            lines.append(f"  [{f.instance}] guard: {f.message}")
        return "\n".join(lines)
