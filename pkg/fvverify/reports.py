"""
The verification pipeline and its report.
"""
from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from config.limits import get_full_verify_limit
from coxeter.chains import check_group_guard
from coxeter.exceptions import ConsistencyError, GroupTooLargeError
from coxeter.involutions import involution_classes
from matroid.orders import SIMPLES_LAST

from .checks import (
    Context,
    chain_matches_bruteforce,
    conjugate_representative_check,
    decomposition_audit,
    fv_basis,
    invariant_dimension,
    special_classes,
    top_degree_check,
)
from .exceptions import VerificationError

logger = logging.getLogger(__name__)

SCOPE_TOP = "top"
SCOPE_FULL = "full"


@dataclass
class InvariantReport:
    type: str
    group_order: int
    scope: str
    degrees: List[int] = field(default_factory=list)
    shapes: List[dict] = field(default_factory=list)
    basis: List[dict] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def special_count(self) -> int:
        return len(self.basis)


class _Timer:
    def __init__(self, report: InvariantReport, name: str):
        self.report = report
        self.name = name

    def __enter__(self):
        self.started = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.report.timings[self.name] = round(time.monotonic() - self.started, 3)
        return False


def verify(
    type_text: str,
    scope: str = SCOPE_FULL,
    order_selector: str = SIMPLES_LAST,
    threads: Optional[int] = None,
    allow_large: bool = False,
) -> InvariantReport:
    ctx = Context.for_type(type_text, order_selector=order_selector, threads=threads, allow_large=allow_large)
    rs = ctx.rs
    if scope == SCOPE_FULL:
        limit = get_full_verify_limit()
        if rs.order > limit and not allow_large:
            raise GroupTooLargeError("full verification", rs.order, limit)
    elif scope == SCOPE_TOP:
        check_group_guard(rs, "top-degree check", allow_large)
    else:
        raise ValueError(f"unknown scope {scope!r}, expected {SCOPE_TOP} or {SCOPE_FULL}")

    report = InvariantReport(type=ctx.type_name, group_order=rs.order, scope=scope)
    logger.info("[VERIFY] start type=%s scope=%s order=%s", report.type, scope, ctx.order.name)

    with _Timer(report, "top_degree"):
        top = top_degree_check(ctx)
    report.checks["top_degree"] = top.consistent
    report.notes.append(f"minus_one={top.minus_one} av_aS_nonzero={top.av_aS_nonzero}")
    if scope == SCOPE_TOP:
        return _finish(report)

    with _Timer(report, "dimensions"):
        try:
            report.degrees = [invariant_dimension(ctx, p) for p in range(rs.rank + 1)]
        except VerificationError as exc:
            _failed(report, "dimension_count", exc)

    with _Timer(report, "shapes"):
        try:
            special = special_classes(ctx)
            report.checks["shape_flags"] = True
        except VerificationError as exc:
            _failed(report, "shape_flags", exc)
            special = None
    if special is None:
        # shapes, basis and audit all hang on the shape records
        _chain_equivalence(ctx, report)
        return _finish(report)
    for record in ctx.records:
        if record.special and not record.minus_one:
            report.notes.append(
                f"w_I for I={list(record.representative)} passes the special test without the (-1)-condition"
            )

    basis = []
    with _Timer(report, "basis"):
        try:
            basis = fv_basis(ctx, special)
            report.checks["basis_rank"] = True
        except VerificationError as exc:
            _failed(report, "basis_rank", exc)
    report.basis = [
        {"shape": list(record.representative), "support_size": len(av), "nonzero": not av.is_zero()}
        for record, av in basis
    ]
    if report.checks.get("dimension_count", True):
        report.checks["dimension_count"] = len(special) == sum(report.degrees) == len(basis)

    with _Timer(report, "involutions"):
        try:
            classes = involution_classes(rs, ctx.classes, allow_large)
            report.checks["involution_classes"] = sum(c.special for c in classes) == len(special)
        except ConsistencyError as exc:
            _failed(report, "involution_classes", exc)

    entries = []
    with _Timer(report, "audit"):
        if not report.degrees:
            _failed(report, "decomposition_audit", "skipped, invariant dimensions unavailable")
        else:
            try:
                entries, balanced = decomposition_audit(ctx, report.degrees)
                report.checks["decomposition_audit"] = balanced and all(e.ok for e in entries)
            except VerificationError as exc:
                _failed(report, "decomposition_audit", exc)
    fixed = {e.representative: e.fixed_dimension for e in entries}
    top_dim = report.degrees[rs.rank] if report.degrees else None
    report.shapes = [
        {
            "rep": list(record.representative),
            "minus_one": record.minus_one,
            "special": record.special,
            "fixed_dim": fixed.get(record.representative, top_dim),
        }
        for record in ctx.records
    ]

    _chain_equivalence(ctx, report)

    with _Timer(report, "representatives"):
        report.checks["conjugate_representatives"] = all(conjugate_representative_check(ctx, basis).values())

    return _finish(report)


def _failed(report: InvariantReport, check: str, reason) -> None:
    report.checks[check] = False
    report.notes.append(f"{check}: {reason}")
    logger.warning("[VERIFY] type=%s check=%s failed reason=%s", report.type, check, reason)


def _chain_equivalence(ctx: Context, report: InvariantReport) -> None:
    with _Timer(report, "chain_equivalence"):
        a_s = ctx.algebra.simple_monomial(range(1, ctx.rs.rank + 1))
        report.checks["chain_equivalence"] = chain_matches_bruteforce(ctx, a_s)


def _finish(report: InvariantReport) -> InvariantReport:
    logger.info(
        "[VERIFY] done type=%s scope=%s passed=%s checks=%s",
        report.type,
        report.scope,
        report.passed,
        report.checks,
    )
    return report


def report_to_dict(report: InvariantReport) -> dict:
    return {
        "type": report.type,
        "group_order": report.group_order,
        "scope": report.scope,
        "passed": report.passed,
        "degrees": report.degrees,
        "shapes": report.shapes,
        "basis": report.basis,
        "checks": report.checks,
        "notes": report.notes,
        "timings": report.timings,
    }


def report_to_json(report: InvariantReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)


def report_to_text(report: InvariantReport) -> str:
    lines = [
        f"type: {report.type}",
        f"|W|: {report.group_order}",
        f"scope: {report.scope}",
        f"result: {'PASS' if report.passed else 'FAIL'}",
    ]
    if report.degrees:
        lines.append("invariant dimensions: " + ", ".join(str(d) for d in report.degrees))
        lines.append(f"m: {len(report.basis)}")
    for shape in report.shapes:
        rep = "{" + ",".join(str(i) for i in shape["rep"]) + "}"
        lines.append(
            f"shape {rep}: minus_one={shape['minus_one']} special={shape['special']} fixed_dim={shape['fixed_dim']}"
        )
    for name, ok in report.checks.items():
        lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
