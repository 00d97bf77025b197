"""Pass/fail reports produced by the exhaustive checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    ok: bool
    witness: Any = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{self.name:<28} {status}"
        if not self.ok and self.witness is not None:
            out += f"  witness={self.witness}"
        return out


@dataclass
class Report:
    subject: str
    checks: list[Check]
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    @property
    def witness(self):
        bad = self.first_failure()
        return None if bad is None else bad.witness

    def render(self) -> str:
        lines = [f"[{self.subject}]"] + ["  " + c.line() for c in self.checks]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "ok": c.ok,
                 "witness": None if c.witness is None else _plain(c.witness)}
                for c in self.checks
            ],
        }


def _plain(obj):
    if isinstance(obj, (list, tuple)):
        return [_plain(o) for o in obj]
    if hasattr(obj, "item"):
        return obj.item()
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    return str(obj)
