"""Per-check pass/fail reports shared by the theorem checkers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "n/a"


def fmt_point(x) -> str:
    return "(" + ",".join(str(a) for a in x) + ")"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass
class CheckReport:
    """Ordered collection of named checks with an optional witness each.

    A check is ``pass``, ``fail`` or ``n/a`` (hypothesis not met).  Extra
    key-value facts that are reported but not asserted go to ``values``.
    """

    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    def add(self, name: str, ok, detail: str = "") -> bool:
        if ok is None:
            status = SKIP
        else:
            status = PASS if ok else FAIL
        self.checks.append(Check(name, status, "" if status == PASS else detail))
        return bool(ok) or ok is None

    def skip(self, name: str, detail: str = ""):
        self.checks.append(Check(name, SKIP, detail))

    def merge(self, other: "CheckReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.detail))
        for k, v in other.values.items():
            self.values[prefix + k] = v

    def __getitem__(self, name: str) -> str:
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def get(self, name: str, default=None):
        try:
            return self[name]
        except KeyError:
            return default

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def as_dict(self) -> dict:
        out = {}
        for c in self.checks:
            out[c.name] = c.status
            if c.detail:
                out[c.name + ".witness"] = c.detail
        out.update(self.values)
        return out

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.name}={c.status}"
            if c.detail:
                line += f"  # {c.detail}"
            lines.append(line)
        for k, v in self.values.items():
            lines.append(f"{k}={v}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, default=str) + "\n"
