"""Recompute every catalog entry and compare with the published tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import Algebra, chi_invariant, is_nilpotent
from .catalog import expected_results, get_entry, instantiate, label_vector, verification_runs
from .cohomology import cohomology
from .linalg import Subspace, span
from .scalar import Scalar, format_scalar

MATCH = "match"
MISMATCH = "mismatch"
FLAGGED = "flagged-discrepancy"

# comparison field -> discrepancy flag that excuses it
_FLAG_OF = {"chi": None, "dim_h0": "h0", "h0_span": "h0", "dim_z1": "z1", "dim_b1": "b1",
            "dim_h1": "h1", "h1_classes": "h1"}


@dataclass
class Computed:
    chi: tuple
    nilpotent: bool
    dim_h0: int
    h0_span: Subspace
    dim_z1: int
    dim_b1: int
    dim_h1: int


def compute_invariants(A: Algebra) -> Computed:
    h0 = cohomology(A, 0)
    h1 = cohomology(A, 1)
    return Computed(
        chi=chi_invariant(A),
        nilpotent=is_nilpotent(A),
        dim_h0=h0.z_dim,
        h0_span=h0.z_basis,
        dim_z1=h1.z_dim,
        dim_b1=h1.b_dim,
        dim_h1=h1.h_dim,
    )


@dataclass
class ReportRow:
    name: str
    alpha: Optional[Scalar]
    computed: dict
    expected: dict
    checks: dict  # field -> bool
    flags: tuple
    status: str
    notes: str = ""

    def mismatched(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def field_status(self) -> dict:
        """Per-field verdict; a failed field excused by a discrepancy flag is ``FLAGGED``."""
        out = {}
        for key, ok in self.checks.items():
            if ok:
                out[key] = MATCH
            elif _FLAG_OF[key] in self.flags:
                out[key] = FLAGGED
            else:
                out[key] = MISMATCH
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "alpha": None if self.alpha is None else format_scalar(self.alpha),
            "computed": self.computed,
            "expected": self.expected,
            "checks": self.checks,
            "field_status": self.field_status(),
            "flags": list(self.flags),
            "status": self.status,
        }


@dataclass
class VerifyReport:
    rows: list = field(default_factory=list)

    def counts(self) -> dict:
        out = {MATCH: 0, MISMATCH: 0, "flagged": 0}
        for r in self.rows:
            out["flagged" if r.status == FLAGGED else r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(r.status != MISMATCH for r in self.rows)

    def h0_range(self) -> tuple:
        dims = [r.computed["dim_h0"] for r in self.rows]
        return (min(dims), max(dims))

    def h1_range(self) -> tuple:
        dims = [r.computed["dim_h1"] for r in self.rows]
        return (min(dims), max(dims))

    def to_json(self) -> dict:
        return {
            "entries": [r.to_json() for r in self.rows],
            "summary": {
                **self.counts(),
                "rows": len(self.rows),
                "families": len({r.name for r in self.rows}),
                "h0_range": list(self.h0_range()),
                "h1_range": list(self.h1_range()),
            },
        }


def _labels_of(sub: Subspace) -> list[str]:
    """Basis of a subspace as short strings like ``e2`` or ``e1+2e4``."""
    out = []
    for v in sub.basis:
        parts = []
        for k, x in enumerate(v):
            if not x:
                continue
            coeff = format_scalar(x)
            if coeff == "1":
                term = f"e{k + 1}"
            elif coeff == "-1":
                term = f"-e{k + 1}"
            elif x.is_real():
                term = f"{coeff}e{k + 1}"
            else:
                term = f"({coeff})e{k + 1}"
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        out.append("".join(parts))
    return out


def verify_entry(name: str, alpha=None) -> ReportRow:
    entry = get_entry(name)
    A = instantiate(name, alpha)
    exp = expected_results(name, alpha)
    got = compute_invariants(A)
    exp_h0 = span([label_vector(lbl) for lbl in exp.h0_span_labels], A.dim)
    checks = {
        "chi": got.chi == entry.chi_family,
        "dim_h0": got.dim_h0 == exp_h0.dim,
        "h0_span": got.h0_span == exp_h0,
        "dim_z1": got.dim_z1 == exp.dim_z1,
        "dim_b1": got.dim_b1 == exp.dim_b1,
        "dim_h1": got.dim_h1 == exp.dim_h1,
        "h1_classes": got.dim_h1 == exp.h1_class_count,
    }
    bad = [k for k, ok in checks.items() if not ok]
    unexcused = [k for k in bad if _FLAG_OF[k] not in exp.discrepancy_flags]
    if unexcused:
        status = MISMATCH
    elif exp.discrepancy_flags:
        status = FLAGGED
    else:
        status = MATCH
    computed = {
        "chi": list(got.chi),
        "nilpotent": got.nilpotent,
        "dim_h0": got.dim_h0,
        "h0_span": _labels_of(got.h0_span),
        "dim_z1": got.dim_z1,
        "dim_b1": got.dim_b1,
        "dim_h1": got.dim_h1,
    }
    expected = {
        "chi": list(entry.chi_family),
        "dim_h0": exp_h0.dim,
        "h0_span": list(exp.h0_span_labels),
        "dim_z1": exp.dim_z1,
        "dim_b1": exp.dim_b1,
        "dim_h1": exp.dim_h1,
        "h1_classes": exp.h1_class_count,
    }
    return ReportRow(name, exp.alpha, computed, expected, checks, exp.discrepancy_flags, status, entry.notes)


def verify_catalog(runs=None) -> VerifyReport:
    """Rows in catalog order, one per (entry, default alpha)."""
    runs = verification_runs() if runs is None else runs
    return VerifyReport([verify_entry(name, alpha) for name, alpha in runs])
