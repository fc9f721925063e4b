"""Report documents and rendering.

Every machine-readable document is a tree of dicts, lists, strings,
integers, booleans, and nulls — floating point never appears. Canonical
serialization (sorted keys, fixed separators) makes equal documents
byte-identical, which the determinism checks rely on.
"""

from __future__ import annotations

import json
from typing import Any

from .covers import ConsistencyResult, CoverProfile
from .engine import ObstructionReport, PlaneAuditReport, ProofTrace
from .gf2 import SubsetCertificate
from .manifolds import BudgetReport, ManifoldProfile
from .surfaces import TubedSurface

__all__ = [
    "canonical_json",
    "report_document",
    "audit_document",
    "budget_document",
    "cover_document",
    "tube_document",
    "certificate_document",
    "render_report_text",
    "render_audit_text",
    "render_budget_text",
    "render_cover_text",
    "render_tube_text",
]


def _check_no_floats(value: Any, path: str = "$") -> None:
    if isinstance(value, float):
        raise TypeError(f"float at {path} — documents must be exact")
    if isinstance(value, dict):
        for k, v in value.items():
            _check_no_floats(v, f"{path}.{k}")
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            _check_no_floats(v, f"{path}[{i}]")


def canonical_json(document: Any) -> str:
    """Serialize with sorted keys and fixed separators; rejects floats."""
    _check_no_floats(document)
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=True)


def _trace_document(trace: ProofTrace) -> list[dict[str, Any]]:
    return [
        {
            "label": s.label,
            "lhs": s.lhs,
            "rel": s.rel,
            "rhs": s.rhs,
            "anchor": s.anchor,
        }
        for s in trace
    ]


def report_document(report: ObstructionReport) -> dict[str, Any]:
    """Machine-readable form of an excess-check report."""
    return {
        "verdict": report.verdict.value,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "trace": _trace_document(report.trace),
        "assumptions": list(report.assumptions),
        "failed_hypothesis": report.failed_hypothesis,
        "notes": list(report.notes),
    }


def audit_document(audit: PlaneAuditReport) -> dict[str, Any]:
    """Machine-readable form of a plane-family audit."""
    return {
        "verdict": audit.verdict.value,
        "member_count": audit.member_count,
        "b2_f2": audit.b2_f2,
        "d_of_m": audit.d_of_m,
        "b_of_m": audit.b_of_m,
        "majority_sign": audit.majority_sign.value,
        "majority_indices": list(audit.majority_indices),
        "zero_sum_indices": (
            None if audit.zero_sum_indices is None else list(audit.zero_sum_indices)
        ),
        "exact_used": audit.exact_used,
        "subfamily_report": (
            None
            if audit.subfamily_report is None
            else report_document(audit.subfamily_report)
        ),
        "trace": _trace_document(audit.trace),
        "assumptions": list(audit.assumptions),
        "notes": list(audit.notes),
    }


def budget_document(profile: ManifoldProfile, budget: BudgetReport) -> dict[str, Any]:
    return {
        "profile": profile.name,
        "signature": profile.signature,
        "euler_characteristic": profile.euler_characteristic,
        "b1_f2": profile.b1_f2,
        "b2_f2": budget.b2_f2,
        "d_of_m": budget.d_of_m,
        "b_of_m": budget.b_of_m,
    }


def cover_document(
    cover: CoverProfile, consistency: ConsistencyResult
) -> dict[str, Any]:
    return {
        "sigma_n": cover.sigma_n,
        "chi_n": cover.chi_n,
        "b1_f2_upper": cover.b1_f2_upper,
        "b2_f2_upper": cover.b2_f2_upper,
        "ramification_euler": cover.ramification_euler,
        "consistency_ok": consistency.ok,
        "consistency_witness": consistency.witness,
    }


def tube_document(tubed: TubedSurface) -> dict[str, Any]:
    return {
        "genus": tubed.genus,
        "euler_number": tubed.euler_number,
        "euler_characteristic": tubed.euler_characteristic,
        "mod2_class": tubed.mod2_class.to01(),
    }


def certificate_document(cert: SubsetCertificate) -> dict[str, Any]:
    return {"indices": list(cert.sorted_indices()), "size": cert.size}


def _render_trace(trace: ProofTrace, indent: str = "  ") -> list[str]:
    lines = []
    for i, s in enumerate(trace, start=1):
        lines.append(f"{indent}{i}. {s.label}: {s.lhs} {s.rel} {s.rhs}  [{s.anchor}]")
    return lines


def render_report_text(report: ObstructionReport, indent: str = "") -> str:
    lines = [f"{indent}verdict: {report.verdict.value}"]
    if report.failed_hypothesis is not None:
        lines.append(f"{indent}failed hypothesis: {report.failed_hypothesis}")
    lines.append(f"{indent}excess (lhs): {report.lhs}")
    lines.append(f"{indent}budget (rhs): {report.rhs}")
    lines.append(f"{indent}trace:")
    lines.extend(_render_trace(report.trace, indent + "  "))
    lines.append(f"{indent}assumptions:")
    lines.extend(f"{indent}  - {a}" for a in report.assumptions)
    if report.notes:
        lines.append(f"{indent}notes:")
        lines.extend(f"{indent}  - {n}" for n in report.notes)
    return "\n".join(lines)


def render_audit_text(audit: PlaneAuditReport) -> str:
    lines = [
        f"verdict: {audit.verdict.value}",
        f"members: {audit.member_count}",
        f"b2_f2: {audit.b2_f2}",
        f"excess budget D: {audit.d_of_m}",
        f"plane budget B: {audit.b_of_m}",
        f"majority sign: {audit.majority_sign.value}",
        "majority indices: "
        + (",".join(str(i) for i in audit.majority_indices) or "none"),
    ]
    if audit.zero_sum_indices is None:
        lines.append("zero-sum subfamily: not forced")
    else:
        lines.append(
            "zero-sum subfamily: "
            + (",".join(str(i) for i in audit.zero_sum_indices) or "none")
        )
    lines.append(f"zero-sum mode: {'exact' if audit.exact_used else 'constructive'}")
    lines.append("trace:")
    lines.extend(_render_trace(audit.trace))
    if audit.subfamily_report is not None:
        lines.append("subfamily check:")
        lines.append(render_report_text(audit.subfamily_report, indent="  "))
    lines.append("assumptions:")
    lines.extend(f"  - {a}" for a in audit.assumptions)
    if audit.notes:
        lines.append("notes:")
        lines.extend(f"  - {n}" for n in audit.notes)
    return "\n".join(lines)


def render_budget_text(profile: ManifoldProfile, budget: BudgetReport) -> str:
    return "\n".join(
        [
            f"profile: {profile.name}",
            f"signature: {profile.signature}",
            f"euler_characteristic: {profile.euler_characteristic}",
            f"b1_f2: {profile.b1_f2}",
            f"b2_f2: {budget.b2_f2}",
            f"d_of_m: {budget.d_of_m}",
            f"b_of_m: {budget.b_of_m}",
        ]
    )


def render_cover_text(cover: CoverProfile, consistency: ConsistencyResult) -> str:
    lines = [
        f"sigma_n: {cover.sigma_n}",
        f"chi_n: {cover.chi_n}",
        f"b1_f2_upper: {cover.b1_f2_upper}",
        f"b2_f2_upper: {cover.b2_f2_upper}",
        f"ramification_euler: {cover.ramification_euler}",
    ]
    if consistency.ok:
        lines.append("consistency: ok")
    else:
        lines.append(f"consistency: violated ({consistency.witness})")
    return "\n".join(lines)


def render_tube_text(tubed: TubedSurface) -> str:
    return "\n".join(
        [
            f"genus: {tubed.genus}",
            f"euler_number: {tubed.euler_number}",
            f"euler_characteristic: {tubed.euler_characteristic}",
            f"mod2_class: {tubed.mod2_class.to01() or '(empty)'}",
        ]
    )
