"""Structured verification reports: stable JSON schema and a text view.

Exit-code contract: a run is successful iff summary.fail == 0; checks with
status "expected-fail" document identities that are supposed to break (the
failure is the finding) and do not fail the run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

REPORT_VERSION = "0.1.0"

PASS = "pass"
FAIL = "fail"
EXPECTED_FAIL = "expected-fail"


@dataclass
class Check:
    id: str
    statement: str
    status: str
    witness: str | None = None


@dataclass
class Report:
    suite: str
    parameters: dict
    checks: list[Check] = field(default_factory=list)
    timing_ms: int = 0
    version: str = REPORT_VERSION

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, EXPECTED_FAIL: 0}
        for c in self.checks:
            counts[c.status] += 1
        return {"pass": counts[PASS], "fail": counts[FAIL], "expected_fail": counts[EXPECTED_FAIL]}

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json_dict(self) -> dict:
        checks = []
        for c in self.checks:
            entry = {"id": c.id, "statement": c.statement, "status": c.status}
            if c.witness is not None:
                entry["witness"] = c.witness
            checks.append(entry)
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "checks": checks,
            "summary": self.summary,
            "timing_ms": self.timing_ms,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "Report":
        data = json.loads(text)
        checks = [
            Check(
                id=c["id"],
                statement=c["statement"],
                status=c["status"],
                witness=c.get("witness"),
            )
            for c in data["checks"]
        ]
        return Report(
            suite=data["suite"],
            parameters=data["parameters"],
            checks=checks,
            timing_ms=data.get("timing_ms", 0),
            version=data.get("version", REPORT_VERSION),
        )

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines.append(f"parameters: {params}" if params else "parameters: -")
        tag = {PASS: "PASS", FAIL: "FAIL", EXPECTED_FAIL: "XFAIL"}
        for c in self.checks:
            line = f"  [{tag[c.status]}] {c.id}: {c.statement}"
            if c.witness is not None:
                line += f"  | witness: {c.witness}"
            lines.append(line)
        s = self.summary
        lines.append(
            f"summary: pass={s['pass']} fail={s['fail']} expected_fail={s['expected_fail']}"
        )
        return "\n".join(lines) + "\n"


def combine(reports: list[Report], suite: str, parameters: dict) -> Report:
    """Concatenate sub-suite reports, prefixing check ids by the sub-suite."""
    checks = []
    timing = 0
    for r in reports:
        timing += r.timing_ms
        for c in r.checks:
            checks.append(Check(f"{r.suite}.{c.id}", c.statement, c.status, c.witness))
    return Report(suite=suite, parameters=parameters, checks=checks, timing_ms=timing)
