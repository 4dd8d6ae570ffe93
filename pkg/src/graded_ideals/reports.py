"""
Text and JSON rendering for CLI output.

JSON output is sorted and indented so that identical inputs give identical
bytes; the only varying field is ``generated_at``, which callers can switch off.
"""

import json
from datetime import datetime, timezone
from typing import Iterable, List, Optional, Sequence

from graded_ideals.classify import ClassificationTable
from graded_ideals.euclid_witness import WitnessFact
from graded_ideals.ideal_lattice import GradedIdeal
from graded_ideals.localization import LocalizedRing
from graded_ideals.ring_core import GradedRing
from graded_ideals.theorem_suite import TheoremReport


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def timestamp(enabled: bool = True) -> Optional[str]:
    return datetime.now(timezone.utc).isoformat(timespec="seconds") if enabled else None


def _ideal_text(ideal: GradedIdeal) -> str:
    ring = ideal.ring
    gens = ", ".join(ring.format(g) for g in ideal.generators)
    return f"({gens})" if gens else "(0)"


# ----------------------------------------------------------------------
# classify
# ----------------------------------------------------------------------


def classification_text(table: ClassificationTable) -> str:
    lines = [
        f"ring: {table.ring.label}",
        f"ideal: {_ideal_text(table.ideal)}",
        f"S: {table.mult_set}",
    ]
    if table.grade_set != table.mult_set:
        lines.append(f"S ∩ R_e: {table.grade_set}")
    lines.extend(cert.describe(table.ring) for cert in table.rows)
    for note in table.inconsistencies:
        lines.append(f"inconsistent: {note}")
    return "\n".join(lines) + "\n"


def classification_document(table: ClassificationTable, generated_at: Optional[str]) -> dict:
    return {"generated_at": generated_at, "classification": table.to_dict()}


# ----------------------------------------------------------------------
# radical / localize / enumerate
# ----------------------------------------------------------------------


def radical_record(ideal: GradedIdeal, radical: GradedIdeal) -> dict:
    return {
        "ring": ideal.ring.label,
        "ideal": [list(g.coords) for g in ideal.generators],
        "radical": [list(g.coords) for g in radical.generators],
        "radical_size": radical.size,
    }


def radical_text(ideal: GradedIdeal, radical: GradedIdeal) -> str:
    return f"Grad({_ideal_text(ideal)}) = {_ideal_text(radical)} in {ideal.ring.label} ({radical.size} elements)\n"


def localization_record(local: LocalizedRing, extended: Optional[GradedIdeal] = None) -> dict:
    record = {
        "ring": local.source.label,
        "mult_set": [list(x.coords) for x in local.mult_set.elements()],
        "kernel": [list(g.coords) for g in local.kernel.generators],
        "local_ring": local.ring.label,
        "order": local.order,
    }
    if extended is not None:
        record["extended_ideal"] = [list(g.coords) for g in extended.generators]
        record["extended_ideal_proper"] = extended.is_proper
    return record


def localization_text(local: LocalizedRing, extended: Optional[GradedIdeal] = None) -> str:
    lines = [
        f"S^-1 {local.source.label} with S = {local.mult_set}",
        f"kernel: {_ideal_text(local.kernel)}",
        f"ring: {local.ring.label} (order {local.order})",
    ]
    if extended is not None:
        lines.append(f"S^-1 P: {_ideal_text(extended)}{'' if extended.is_proper else ' (whole ring)'}")
    return "\n".join(lines) + "\n"


def enumeration_record(ring: GradedRing, ideals: Sequence[GradedIdeal]) -> dict:
    return {
        "ring": ring.label,
        "order": ring.order,
        "grade_group": str(ring.grade_group),
        "homogeneous": len(ring.homogeneous_elements()),
        "ideals": [
            {"generators": [list(g.coords) for g in p.generators], "size": p.size, "proper": p.is_proper}
            for p in ideals
        ],
    }


def enumeration_text(ring: GradedRing, ideals: Sequence[GradedIdeal]) -> str:
    lines = [
        f"{ring.label}: order {ring.order}, graded by {ring.grade_group}, "
        f"{len(ring.homogeneous_elements())} homogeneous elements, {len(ideals)} graded ideals"
    ]
    lines.extend(f"  {_ideal_text(p)}  size={p.size}" for p in ideals)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# witness facts
# ----------------------------------------------------------------------


def witness_text(facts: Iterable[WitnessFact]) -> str:
    return "".join(f"{f.fact_id:<24}{'pass' if f.passed else 'FAIL':<6}{f.statement}\n" for f in facts)


def witness_document(facts: Iterable[WitnessFact], generated_at: Optional[str]) -> dict:
    return {
        "generated_at": generated_at,
        "facts": [
            {"id": f.fact_id, "source": f.source, "statement": f.statement, "passed": f.passed} for f in facts
        ],
    }


# ----------------------------------------------------------------------
# theorem suite
# ----------------------------------------------------------------------


def theorems_text(reports: Iterable[TheoremReport]) -> str:
    lines: List[str] = []
    for report in reports:
        lines.append(
            f"{report.theorem_id}  {report.status}  tested={report.tested}  nonvacuous={report.nonvacuous}"
        )
        for note in report.notes:
            lines.append(f"    {note}")
        if report.counterexample is not None:
            cx = report.counterexample
            lines.append(f"    counterexample: {cx.instance_id}")
            if cx.detail:
                lines.append(f"    {cx.detail}")
            for evidence in cx.evidence:
                lines.append(f"    {evidence.certificate.describe(evidence.ideal.ring)}")
    return "\n".join(lines) + "\n"


def theorems_document(reports: Iterable[TheoremReport], corpus: str, include_timing: bool = True) -> dict:
    """JSON document for a suite run; ``include_timing=False`` drops every time-dependent field."""
    return {
        "generated_at": timestamp(include_timing),
        "corpus": corpus,
        "reports": [r.to_dict(include_timing=include_timing) for r in reports],
    }
