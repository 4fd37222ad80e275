"""Machine-diffable key=value reports with PASS/FAIL/SKIP checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


def fmt_value(v: Any) -> str:
    if v is None:
        return "skipped"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


@dataclass
class Report:
    title: str
    values: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, str] = field(default_factory=dict)

    def set(self, key: str, value: Any) -> None:
        self.values[key] = value

    def check(self, name: str, ok: bool | None) -> bool:
        """Record a check; ``None`` means the inputs were unavailable (SKIP)."""
        self.checks[name] = SKIP if ok is None else (PASS if ok else FAIL)
        return bool(ok)

    @property
    def status(self) -> str:
        states = set(self.checks.values())
        if FAIL in states:
            return FAIL
        if SKIP in states:
            return SKIP
        return PASS

    @property
    def ok(self) -> bool:
        return FAIL not in self.checks.values()

    def format(self) -> str:
        lines = [f"# {self.title}"]
        lines += [f"{k}={fmt_value(v)}" for k, v in self.values.items()]
        lines += [f"check.{k}={v}" for k, v in self.checks.items()]
        return "\n".join(lines) + "\n"
