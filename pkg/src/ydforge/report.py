"""Check results with basis-tuple witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Sequence


from .linalg import Matrix, multi_index

REPORT_VERSION = 1


class StructureError(ValueError):
    """A structure violates a precondition; carries an optional report."""

    def __init__(self, message: str, report: "Report | None" = None):
        super().__init__(message)
        self.report = report


@dataclass
class Finding:
    check: str
    anchor: str
    ok: bool
    witness: dict | None = None
    detail: str | None = None

    def to_json(self) -> dict:
        out = {"check_name": self.check, "anchor": self.anchor, "ok": self.ok, "witness": self.witness}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    command: str
    findings: list[Finding] = dc_field(default_factory=list)
    header: dict = dc_field(default_factory=dict)
    not_applicable: bool = False

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.findings)

    @property
    def failures(self) -> list[Finding]:
        return [f for f in self.findings if not f.ok]

    @property
    def empty(self) -> bool:
        """True when no finding failed (the axiom-report sense of empty)."""
        return not self.failures

    @property
    def verdict(self) -> str:
        if self.not_applicable and not self.findings:
            return "not_applicable"
        return "pass" if self.ok else "fail"

    def add(self, finding: Finding) -> Finding:
        self.findings.append(finding)
        return finding

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for f in other.findings:
            self.findings.append(Finding(prefix + f.check, f.anchor, f.ok, f.witness, f.detail))
        return self

    def note(self, check: str, anchor: str, ok: bool, detail: str | None = None, witness: dict | None = None):
        return self.add(Finding(check, anchor, ok, witness, detail))

    def to_json(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "command": self.command,
            "verdict": self.verdict,
            "header": self.header,
            "findings": [f.to_json() for f in self.findings],
        }

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.verdict.upper()}"]
        for k, v in self.header.items():
            lines.append(f"  # {k}: {v}")
        for f in self.findings:
            mark = "ok  " if f.ok else "FAIL"
            line = f"  [{mark}] {f.check}  <{f.anchor}>"
            if f.detail:
                line += f"  {f.detail}"
            lines.append(line)
            if f.witness and not f.ok:
                lines.append(f"         witness: {json.dumps(f.witness)}")
        return "\n".join(lines)


def compare_maps(
    check: str,
    anchor: str,
    lhs: Matrix,
    rhs: Matrix,
    domain: Sequence[int] | None = None,
) -> Finding:
    """Compare two maps column by column; a column is one basis tuple.

    The witness names the first differing basis tuple of the domain, both
    evaluated sides, and how many tuples fail in total.
    """
    if lhs.shape != rhs.shape:
        return Finding(check, anchor, False, None, f"shape mismatch {lhs.shape} vs {rhs.shape}")
    diff = lhs - rhs
    bad = diff.nonzero_columns()
    if not bad:
        return Finding(check, anchor, True)
    j = bad[0]
    dims = list(domain) if domain else [lhs.cols]
    witness = {
        "basis_tuple": list(multi_index(dims, j)),
        "lhs": [str(v) for v in lhs.column_values(j)],
        "rhs": [str(v) for v in rhs.column_values(j)],
        "failing_tuples": len(bad),
    }
    return Finding(check, anchor, False, witness)


def expect(report: Report, check: str, anchor: str, lhs: Matrix, rhs: Matrix, domain=None) -> bool:
    return report.add(compare_maps(check, anchor, lhs, rhs, domain)).ok
