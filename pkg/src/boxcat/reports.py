"""Machine-readable run reports for the batch frontend.

A report is a list of named checks with pass/fail status and witness
details; serialization is deterministic apart from the timing field, and
the process exit status is 0 exactly when the overall verdict is pass.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field


@dataclass
class RunReport:
    command: str
    inputs: dict = dc_field(default_factory=dict)
    checks: list = dc_field(default_factory=list)
    started: float = dc_field(default_factory=time.monotonic)
    timing_ms: float = 0.0

    def add(self, name: str, ok: bool, **details):
        self.checks.append({
            "name": name,
            "status": "pass" if ok else "fail",
            "details": details,
        })
        return ok

    def add_report(self, name: str, rep, **extra):
        """Fold a module-level Report (ok/failures/details) into a check."""
        details = dict(rep.details)
        details.update(extra)
        if rep.failures:
            details["failures"] = list(rep.failures)
        return self.add(name, rep.ok, **details)

    @property
    def verdict(self) -> str:
        return "pass" if all(c["status"] == "pass" for c in self.checks) else "fail"

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == "pass" else 1

    def finish(self):
        self.timing_ms = round((time.monotonic() - self.started) * 1000.0, 3)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "checks": self.checks,
            "verdict": self.verdict,
            "timing_ms": self.timing_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=_jsonable,
                          separators=(",", ": "), indent=1)

    def summary(self) -> str:
        lines = [f"[{self.command}] {len(self.checks)} checks"]
        for c in self.checks:
            mark = "ok " if c["status"] == "pass" else "FAIL"
            lines.append(f"  {mark} {c['name']}")
            if c["status"] != "pass":
                for f in c["details"].get("failures", []):
                    lines.append(f"       {f}")
        lines.append(f"verdict: {self.verdict} ({self.timing_ms} ms)")
        return "\n".join(lines)


def _jsonable(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, (tuple, frozenset)):
        return list(x)
    return str(x)
