"""
JSON ring-spec documents read by the CLI.

A document names one ring and, optionally, an ideal and a multiplicative set
by their generators. Elements are coordinate vectors over the ring basis
(``[6, 6]`` is 6+6i in Z_12[i]); a bare integer means that multiple of 1.

Example::

    {
      "ring": {"kind": "gaussian", "n": 12},
      "ideal": [],
      "mult_set": [[3, 0]],
      "grade": 0
    }
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from graded_ideals.errors import GradingError, SpecDocumentError
from graded_ideals.ideal_lattice import GradedIdeal, ideal_from_generators
from graded_ideals.mult_set import MultSet, closure
from graded_ideals.ring_core import (
    Grade,
    GradedRing,
    GradeGroup,
    direct_product,
    make_cyclic_graded,
    make_gaussian_quotient,
    make_poly_quotient,
    quotient_ring,
)

logger = logging.getLogger(__name__)

ElementSpec = Union[int, List[int]]
GradeSpec = Union[int, List[int]]


class RingSpec(BaseModel):
    """One ring; ``left``/``right`` for products, ``base``/``ideal`` for quotients."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["cyclic", "poly_quotient", "gaussian", "product", "quotient"]
    n: Optional[int] = Field(default=None, ge=2)
    grade_orders: Optional[List[int]] = None
    one_grade: Optional[GradeSpec] = None
    modulus_poly: Optional[List[int]] = None
    x_grade: Optional[GradeSpec] = None
    var: str = "x"
    left: Optional[RingSpec] = None
    right: Optional[RingSpec] = None
    base: Optional[RingSpec] = None
    ideal: Optional[List[ElementSpec]] = None

    @model_validator(mode="after")
    def check_kind_fields(self) -> RingSpec:
        required = {
            "cyclic": ["n"],
            "poly_quotient": ["n", "modulus_poly", "x_grade"],
            "gaussian": ["n"],
            "product": ["left", "right"],
            "quotient": ["base", "ideal"],
        }[self.kind]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"ring kind {self.kind!r} needs {', '.join(missing)}")
        if self.grade_orders is not None and any(o < 1 for o in self.grade_orders):
            raise ValueError(f"grade orders must be positive, got {self.grade_orders}")
        return self


class RingSpecDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ring: RingSpec
    ideal: Optional[List[ElementSpec]] = None
    mult_set: Optional[List[ElementSpec]] = None
    grade: Optional[GradeSpec] = None


RingSpec.model_rebuild()


@dataclass
class ParsedSpec:
    document: RingSpecDocument
    ring: GradedRing
    ideal: Optional[GradedIdeal]
    mult_set: Optional[MultSet]
    grade: Optional[Grade]


def _group(orders: Optional[List[int]], default: GradeGroup) -> GradeGroup:
    if orders is None:
        return default
    return GradeGroup(tuple(orders)) if orders else GradeGroup.trivial()


def _check_grade(group: GradeGroup, value: GradeSpec, what: str) -> Grade:
    try:
        return group.normalize(value)
    except GradingError as e:
        raise SpecDocumentError(f"{what} {value} does not name a grade of {group}") from e


def build_ring(spec: RingSpec) -> GradedRing:
    """Construct the ring a ``RingSpec`` describes."""
    if spec.kind == "cyclic":
        group = _group(spec.grade_orders, GradeGroup.trivial())
        assignment = None
        if spec.one_grade is not None:
            assignment = {1: _check_grade(group, spec.one_grade, "one_grade")}
        return make_cyclic_graded(spec.n, group, assignment)  # type: ignore[arg-type]
    if spec.kind == "poly_quotient":
        group = _group(spec.grade_orders, GradeGroup.cyclic(2))
        x_grade = _check_grade(group, spec.x_grade, "x_grade")  # type: ignore[arg-type]
        return make_poly_quotient(spec.n, spec.modulus_poly, x_grade, group, var=spec.var)  # type: ignore[arg-type]
    if spec.kind == "gaussian":
        return make_gaussian_quotient(spec.n)  # type: ignore[arg-type]
    if spec.kind == "product":
        return direct_product(build_ring(spec.left), build_ring(spec.right))  # type: ignore[arg-type]
    base = build_ring(spec.base)  # type: ignore[arg-type]
    ring, _ = quotient_ring(base, ideal_from_generators(base, spec.ideal))  # type: ignore[arg-type]
    return ring


def parse_spec(text: str) -> ParsedSpec:
    """
    Validate a spec document and build its ring, ideal and set.

    Args:
        text: JSON document

    Returns:
        ParsedSpec; ideal and set are None when the document omits them

    Raises:
        SpecDocumentError: malformed JSON, schema violations or unknown grades
    """
    try:
        document = RingSpecDocument.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise SpecDocumentError(f"Spec is not valid JSON: {e}") from e
    except ValidationError as e:
        raise SpecDocumentError(f"Invalid ring spec: {e}") from e

    ring = build_ring(document.ring)
    ideal = ideal_from_generators(ring, document.ideal) if document.ideal is not None else None
    mult_set = closure(ring, document.mult_set) if document.mult_set is not None else None
    grade = _check_grade(ring.grade_group, document.grade, "grade") if document.grade is not None else None
    logger.debug(f"Parsed spec for {ring.label}")
    return ParsedSpec(document=document, ring=ring, ideal=ideal, mult_set=mult_set, grade=grade)


def load_spec(path: Union[str, Path]) -> ParsedSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SpecDocumentError(f"Cannot read spec file {path}: {e}") from e
    return parse_spec(text)


def dump_spec(document: RingSpecDocument) -> str:
    """Canonical JSON text of a document; ``parse_spec`` accepts it unchanged."""
    return json.dumps(document.model_dump(exclude_none=True), indent=2, sort_keys=True) + "\n"
