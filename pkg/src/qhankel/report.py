"""Verification records produced by identity checks.

Every check reduces to an exact equality of two ring elements.  A report
keeps both sides in canonical text so a failure is directly inspectable,
plus a free-form detail string for the parameter draw that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    n: int
    ok: bool
    lhs: str
    rhs: str
    detail: str = ""
    elapsed_ms: float | None = None

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "ok": self.ok,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
        }
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        text = f"[{status}] {self.identity} n={self.n}"
        if self.detail:
            text += f" ({self.detail})"
        if not self.ok:
            text += f"\n    lhs = {self.lhs}\n    rhs = {self.rhs}"
        if self.elapsed_ms is not None:
            text += f" [{self.elapsed_ms:.1f} ms]"
        return text


def compare(identity: str, n: int, lhs, rhs, detail: str = "") -> VerifyReport:
    """Exact-equality report; both sides rendered in canonical text."""
    return VerifyReport(
        identity=identity,
        n=n,
        ok=(lhs == rhs),
        lhs=str(lhs),
        rhs=str(rhs),
        detail=detail,
    )
