"""Structured verdict records shared by the library and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    name: str
    verdict: str            # "pass" | "fail" | "info" | "error" | "unstable"
    rule: str = ""          # named criterion the check instantiates
    payload: dict = field(default_factory=dict)   # canonical strings only

    def as_dict(self):
        return {"name": self.name, "verdict": self.verdict,
                "rule": self.rule, "payload": dict(self.payload)}


class Report:
    """Ordered collection of check records with pass/fail semantics."""

    def __init__(self, command: str):
        self.command = command
        self.records: list[CheckRecord] = []

    def add(self, name, verdict, rule="", **payload) -> CheckRecord:
        rec = CheckRecord(name, verdict, rule,
                          {k: str(v) for k, v in payload.items()})
        self.records.append(rec)
        return rec

    def extend(self, other: "Report", prefix: str = ""):
        for rec in other.records:
            self.records.append(CheckRecord(
                prefix + rec.name, rec.verdict, rec.rule, dict(rec.payload)))

    @property
    def passed(self) -> bool:
        return all(r.verdict not in ("fail", "error", "unstable")
                   for r in self.records)

    def failures(self):
        return [r for r in self.records if r.verdict in ("fail", "error", "unstable")]

    def as_dict(self):
        return {"command": self.command,
                "status": "pass" if self.passed else "fail",
                "checks": [r.as_dict() for r in self.records]}

    def render(self) -> str:
        lines = [f"# {self.command}"]
        for r in self.records:
            bits = [f"{r.name}: {r.verdict}"]
            if r.rule:
                bits.append(f"[{r.rule}]")
            for k, v in r.payload.items():
                bits.append(f"{k}={v}")
            lines.append("  ".join(bits))
        lines.append(f"status: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def __repr__(self):
        return f"<Report {self.command}: {'pass' if self.passed else 'fail'}>"
