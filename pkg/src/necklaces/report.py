"""A tiny pass/fail report shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckEntry:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class CheckReport:
    title: str
    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = ""):
        self.entries.append(CheckEntry(label, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.ok]

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            status = "ok" if e.ok else "FAIL"
            suffix = f"  {e.detail}" if e.detail else ""
            out.append(f"[{status}] {e.label}{suffix}")
        return out

    def __str__(self):
        body = "\n".join(self.lines())
        verdict = "pass" if self.ok else "FAIL"
        return f"{self.title}: {verdict}\n{body}" if body else f"{self.title}: {verdict}"
