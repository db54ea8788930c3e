"""Verification reports and canonical JSON serialisation.

Every checker in this package returns a VerificationReport: a list of
claims with pass/fail status and, for failures, a witness that can be
replayed.  Reports serialise to canonical JSON (sorted keys, rationals
as "num/den" strings) so identical runs produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import Scalar, rational_str
from .linalg import Matrix

SCHEMA_VERSION = 1


@dataclass
class ClaimResult:
    claim_id: str
    status: str  # "pass" | "fail" | "skipped"
    witness: object = None
    ms: float = 0.0

    def to_jsonable(self):
        # timing is deliberately left out so identical runs emit identical bytes
        out = {"claim_id": self.claim_id, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    claims: list[ClaimResult] = field(default_factory=list)

    def add(self, claim_id: str, ok: bool, witness=None, ms: float = 0.0) -> None:
        if any(c.claim_id == claim_id for c in self.claims):
            raise ValueError(f"duplicate claim id {claim_id!r}")
        if not ok and witness is None:
            witness = {}
        self.claims.append(ClaimResult(claim_id, "pass" if ok else "fail", witness, ms))

    def add_skipped(self, claim_id: str, reason: str) -> None:
        self.claims.append(ClaimResult(claim_id, "skipped", {"reason": reason}))

    def merge(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.claims:
            cid = f"{prefix}{c.claim_id}" if prefix else c.claim_id
            if any(x.claim_id == cid for x in self.claims):
                raise ValueError(f"duplicate claim id {cid!r}")
            self.claims.append(ClaimResult(cid, c.status, c.witness, c.ms))

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def failures(self) -> list[ClaimResult]:
        return [c for c in self.claims if c.status == "fail"]

    def to_jsonable(self):
        return {
            "ok": self.ok,
            "claims": [c.to_jsonable() for c in self.claims],
        }

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.claims:
            lines.append(f"[{c.status.upper():>4}] {c.claim_id}")
        return lines


def jsonable(obj):
    """Convert package objects to plain JSON-compatible data."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, Scalar):
        return [rational_str(c) for c in obj.coords]
    if isinstance(obj, Matrix):
        return {
            "rows": obj.rows,
            "cols": obj.cols,
            "entries": [jsonable(e) for e in obj.entries],
        }
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if hasattr(obj, "to_jsonable"):
        return jsonable(obj.to_jsonable())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def emit_json(obj) -> bytes:
    """Canonical JSON bytes: sorted keys, no whitespace, UTF-8."""
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":")).encode()


def document(field_ctx, basis_convention: str, payload: dict) -> dict:
    """Standard top-level wrapper for serialised structures."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": {
            "conductor": field_ctx.conductor,
            "cyclotomic_poly": [rational_str(c) for c in field_ctx.poly],
        },
        "basis_convention": basis_convention,
    }
    doc.update(payload)
    return doc
