"""
Ideal-property predicates with replayable certificates.

Every predicate has the shape

    there is s in S such that for all ordered pairs (x, y) of the domain,
    [xy != 0 and] xy ∈ P  implies  sx ∈ P or sy ∈ Q

where the domain is h(R) (or a single component R_g), Q is Grad(P) for the
primary family and P for the prime family, and S = {1} for the classical
predicates. A true verdict records the first working s in canonical element
order; a false verdict records one violating pair for every candidate s.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from graded_ideals.errors import DisjointnessError, MultiplicativeSetError, NotProperError, RingMismatchError
from graded_ideals.ideal_lattice import (
    GradedIdeal,
    colon_slice_indices,
    enumerate_graded_ideals,
    grad_radical,
)
from graded_ideals.mult_set import MultSet, restrict_to_identity
from graded_ideals.ring_core import Grade, GradedRing, RingElem

logger = logging.getLogger(__name__)

GRADED_PRIME = "graded_prime"
GRADED_WEAKLY_PRIME = "graded_weakly_prime"
GRADED_PRIMARY = "graded_primary"
GRADED_WEAKLY_PRIMARY = "graded_weakly_primary"
GRADED_S_PRIME = "graded_S_prime"
GRADED_WEAKLY_S_PRIME = "graded_weakly_S_prime"
GRADED_S_PRIMARY = "graded_S_primary"
GRADED_WEAKLY_S_PRIMARY = "graded_weakly_S_primary"
G_S_PRIME = "g_S_prime"
G_WEAKLY_S_PRIME = "g_weakly_S_prime"
G_S_PRIMARY = "g_S_primary"
G_WEAKLY_S_PRIMARY = "g_weakly_S_primary"
IDEALWISE_LITERAL = "idealwise_weakly_S_primary_literal"
IDEALWISE_CORRECTED = "idealwise_weakly_S_primary_corrected"
G_SLICEWISE = "g_slicewise_weakly_S_primary"
G_COLON_CRITERION = "g_colon_criterion"


@dataclass(frozen=True)
class PropertyShape:
    weakly: bool
    radical_conclusion: bool
    s_parameterized: bool
    per_grade: bool


PROPERTIES: Dict[str, PropertyShape] = {
    GRADED_PRIME: PropertyShape(False, False, False, False),
    GRADED_WEAKLY_PRIME: PropertyShape(True, False, False, False),
    GRADED_PRIMARY: PropertyShape(False, True, False, False),
    GRADED_WEAKLY_PRIMARY: PropertyShape(True, True, False, False),
    GRADED_S_PRIME: PropertyShape(False, False, True, False),
    GRADED_WEAKLY_S_PRIME: PropertyShape(True, False, True, False),
    GRADED_S_PRIMARY: PropertyShape(False, True, True, False),
    GRADED_WEAKLY_S_PRIMARY: PropertyShape(True, True, True, False),
    G_S_PRIME: PropertyShape(False, False, True, True),
    G_WEAKLY_S_PRIME: PropertyShape(True, False, True, True),
    G_S_PRIMARY: PropertyShape(False, True, True, True),
    G_WEAKLY_S_PRIMARY: PropertyShape(True, True, True, True),
}


@dataclass(frozen=True)
class CounterPair:
    """(x, y) satisfies the hypothesis while sx ∉ P and sy ∉ Q."""

    s: Optional[RingElem]
    x: RingElem
    y: RingElem


@dataclass(frozen=True)
class CounterIdeals:
    """Graded ideals (I, J) satisfying the hypothesis while sI ⊄ P and sJ ⊄ Q."""

    s: Optional[RingElem]
    first: GradedIdeal
    second: GradedIdeal


@dataclass(frozen=True)
class CounterElement:
    """An element a of R_g outside (P :_{R_g} s) whose colon breaks both alternatives."""

    s: RingElem
    a: RingElem


Counter = Union[CounterPair, CounterIdeals, CounterElement]


@dataclass(frozen=True)
class Certificate:
    property: str
    verdict: bool
    witness_s: Optional[RingElem] = None
    counters: Tuple[Counter, ...] = ()
    grade: Optional[Grade] = None
    trace_size: int = 0
    vacuous: bool = False

    @property
    def counter(self) -> Optional[Counter]:
        return self.counters[0] if self.counters else None

    def to_dict(self, ring: GradedRing) -> dict:
        """Coordinate-vector form used by reports."""
        record: dict = {
            "property": self.property,
            "verdict": self.verdict,
            "grade": list(self.grade) if self.grade is not None else None,
            "trace_size": self.trace_size,
            "vacuous": self.vacuous,
            "witness": list(self.witness_s.coords) if self.witness_s is not None else None,
        }
        counters = []
        for c in self.counters:
            if isinstance(c, CounterPair):
                counters.append({"s": _coords(c.s), "x": list(c.x.coords), "y": list(c.y.coords)})
            elif isinstance(c, CounterIdeals):
                counters.append({
                    "s": _coords(c.s),
                    "I": [list(g.coords) for g in c.first.generators],
                    "J": [list(g.coords) for g in c.second.generators],
                })
            else:
                counters.append({"s": _coords(c.s), "a": list(c.a.coords)})
        record["counters"] = counters
        return record

    def describe(self, ring: GradedRing) -> str:
        """Short human-readable summary."""
        text = f"{self.property}: {str(self.verdict).lower()}"
        if self.grade is not None:
            text = f"{self.property}[g={_grade_text(self.grade)}]: {str(self.verdict).lower()}"
        if self.verdict and self.witness_s is not None and PROPERTIES.get(self.property, _S_SHAPE).s_parameterized:
            text += f", witness s={ring.format(self.witness_s)}"
        if self.vacuous:
            text += " (vacuous)"
        c = self.counter
        if isinstance(c, CounterPair):
            text += f", counter=({ring.format(c.x)},{ring.format(c.y)})"
        elif isinstance(c, CounterIdeals):
            text += f", counter I={c.first}, J={c.second}"
        elif isinstance(c, CounterElement):
            text += f", counter a={ring.format(c.a)}"
        return text


_S_SHAPE = PropertyShape(True, True, True, False)


def _coords(x: Optional[RingElem]) -> Optional[List[int]]:
    return list(x.coords) if x is not None else None


def _grade_text(g: Grade) -> str:
    return str(g[0]) if len(g) == 1 else str(tuple(g))


# ----------------------------------------------------------------------
# Preconditions
# ----------------------------------------------------------------------


def _require_proper(ideal: GradedIdeal) -> None:
    if not ideal.is_proper:
        raise NotProperError(f"ideal not proper: {ideal} is all of {ideal.ring.label}")


def _require_set(ideal: GradedIdeal, mult_set: MultSet) -> None:
    if mult_set.ring is not ideal.ring:
        raise RingMismatchError(f"{mult_set} and {ideal} live in different rings")
    if ideal.members & mult_set.members:
        raise DisjointnessError(f"{ideal} meets the multiplicative set {mult_set}")


def _require_identity_set(mult_set: MultSet) -> None:
    if not mult_set.in_identity_component:
        raise MultiplicativeSetError(f"{mult_set} is not contained in R_e")


# ----------------------------------------------------------------------
# Pair search
# ----------------------------------------------------------------------


def _pair_search(
    ideal: GradedIdeal,
    conclusion: GradedIdeal,
    domain: np.ndarray,
    candidates: Sequence[int],
    weakly: bool,
) -> Tuple[Optional[int], List[Tuple[int, int, int]], int, bool]:
    """Returns (witness, counters, pairs examined, vacuous)."""
    t = ideal.ring.tables
    products = t.mul[np.ix_(domain, domain)]
    hypothesis = ideal.mask[products]
    if weakly:
        hypothesis &= products != t.zero
    if not hypothesis.any():
        return int(candidates[0]), [], hypothesis.size, True

    counters = []
    trace = 0
    for s in candidates:
        shifted = t.mul[int(s), domain]
        left = ideal.mask[shifted]
        right = conclusion.mask[shifted]
        bad = hypothesis & ~left[:, None] & ~right[None, :]
        trace += hypothesis.size
        if not bad.any():
            return int(s), [], trace, False
        i, j = np.argwhere(bad)[0]
        counters.append((int(s), int(domain[i]), int(domain[j])))
    return None, counters, trace, False


def check_property(
    name: str,
    ideal: GradedIdeal,
    mult_set: Optional[MultSet] = None,
    grade: Optional[Union[int, Sequence[int]]] = None,
) -> Certificate:
    """Evaluate one of the pair predicates in PROPERTIES."""
    shape = PROPERTIES[name]
    ring = ideal.ring
    t = ring.tables
    _require_proper(ideal)

    if shape.s_parameterized:
        if mult_set is None:
            raise MultiplicativeSetError(f"{name} needs a multiplicative set")
        _require_set(ideal, mult_set)
        candidates: Sequence[int] = mult_set.indices.tolist()
    else:
        candidates = [t.one]

    g: Optional[Grade] = None
    if shape.per_grade:
        assert mult_set is not None
        _require_identity_set(mult_set)
        g = ring.grade_group.normalize(ring.grade_group.identity if grade is None else grade)
        domain = t.slices[g].astype(np.int64)
    else:
        domain = t.homogeneous.astype(np.int64)

    conclusion = grad_radical(ideal) if shape.radical_conclusion else ideal
    witness, counters, trace, vacuous = _pair_search(ideal, conclusion, domain, candidates, shape.weakly)
    s_elem = (lambda s: ring.elem(s)) if shape.s_parameterized else (lambda s: None)
    return Certificate(
        property=name,
        verdict=witness is not None,
        witness_s=ring.elem(witness) if witness is not None and shape.s_parameterized else None,
        counters=tuple(CounterPair(s_elem(s), ring.elem(x), ring.elem(y)) for s, x, y in counters),
        grade=g,
        trace_size=trace,
        vacuous=vacuous,
    )


def is_graded_prime(ideal: GradedIdeal) -> Certificate:
    return check_property(GRADED_PRIME, ideal)


def is_graded_weakly_prime(ideal: GradedIdeal) -> Certificate:
    return check_property(GRADED_WEAKLY_PRIME, ideal)


def is_graded_primary(ideal: GradedIdeal) -> Certificate:
    return check_property(GRADED_PRIMARY, ideal)


def is_graded_weakly_primary(ideal: GradedIdeal) -> Certificate:
    """0 ≠ xy ∈ P with x, y ∈ h(R) forces x ∈ P or y ∈ Grad(P)."""
    return check_property(GRADED_WEAKLY_PRIMARY, ideal)


def is_graded_weakly_s_primary(ideal: GradedIdeal, mult_set: MultSet) -> Certificate:
    """
    Graded weakly S-primary test.

    Args:
        ideal: Proper graded ideal P
        mult_set: Multiplicative set S ⊆ h(R) with P ∩ S = ∅

    Returns:
        Certificate with the first working s, or one counter pair per s
    """
    return check_property(GRADED_WEAKLY_S_PRIMARY, ideal, mult_set)


def is_graded_s_primary(ideal: GradedIdeal, mult_set: MultSet) -> Certificate:
    return check_property(GRADED_S_PRIMARY, ideal, mult_set)


def is_graded_weakly_s_prime(ideal: GradedIdeal, mult_set: MultSet) -> Certificate:
    return check_property(GRADED_WEAKLY_S_PRIME, ideal, mult_set)


def is_graded_s_prime(ideal: GradedIdeal, mult_set: MultSet) -> Certificate:
    return check_property(GRADED_S_PRIME, ideal, mult_set)


def is_g_weakly_s_primary(ideal: GradedIdeal, mult_set: MultSet, grade: Union[int, Sequence[int]]) -> Certificate:
    """Same as the graded weakly S-primary test with x, y restricted to R_g and S ⊆ R_e."""
    return check_property(G_WEAKLY_S_PRIMARY, ideal, mult_set, grade)


def is_g_s_primary(ideal: GradedIdeal, mult_set: MultSet, grade: Union[int, Sequence[int]]) -> Certificate:
    return check_property(G_S_PRIMARY, ideal, mult_set, grade)


def is_g_weakly_s_prime(ideal: GradedIdeal, mult_set: MultSet, grade: Union[int, Sequence[int]]) -> Certificate:
    return check_property(G_WEAKLY_S_PRIME, ideal, mult_set, grade)


def is_g_s_prime(ideal: GradedIdeal, mult_set: MultSet, grade: Union[int, Sequence[int]]) -> Certificate:
    return check_property(G_S_PRIME, ideal, mult_set, grade)


# ----------------------------------------------------------------------
# Ideal-level forms
# ----------------------------------------------------------------------


def idealwise_weakly_s_primary(ideal: GradedIdeal, mult_set: MultSet, corrected: bool) -> Certificate:
    """
    Ideal-pair form of the weakly S-primary condition.

    The literal form asks, for all graded I, J with IJ ⊆ P, that sI ⊆ P or
    sJ ⊆ P. The corrected form only looks at 0 ≠ IJ ⊆ P and relaxes the second
    alternative to sJ ⊆ Grad(P).
    """
    ring = ideal.ring
    t = ring.tables
    _require_proper(ideal)
    _require_set(ideal, mult_set)
    ideals = enumerate_graded_ideals(ring)
    conclusion = grad_radical(ideal) if corrected else ideal

    hypothesis_pairs = []
    for i, j in itertools.product(range(len(ideals)), repeat=2):
        products = t.mul[np.ix_(ideals[i].indices, ideals[j].indices)]
        if not ideal.mask[products].all():
            continue
        if corrected and (products == t.zero).all():
            continue
        hypothesis_pairs.append((i, j))

    name = IDEALWISE_CORRECTED if corrected else IDEALWISE_LITERAL
    trace = len(ideals) ** 2
    if not hypothesis_pairs:
        return Certificate(name, True, ring.elem(mult_set.indices[0]), trace_size=trace, vacuous=True)

    counters = []
    for s in mult_set.indices:
        left = [bool(ideal.mask[t.mul[s, q.indices]].all()) for q in ideals]
        right = [bool(conclusion.mask[t.mul[s, q.indices]].all()) for q in ideals]
        trace += len(hypothesis_pairs)
        failing = next(((i, j) for i, j in hypothesis_pairs if not left[i] and not right[j]), None)
        if failing is None:
            return Certificate(name, True, ring.elem(s), trace_size=trace)
        counters.append(CounterIdeals(ring.elem(s), ideals[failing[0]], ideals[failing[1]]))
    return Certificate(name, False, counters=tuple(counters), trace_size=trace)


def slicewise_g_weakly_s_primary(
    ideal: GradedIdeal, mult_set: MultSet, grade: Union[int, Sequence[int]]
) -> Certificate:
    """∃s ∀ graded I, J: 0 ≠ I_g J_g ⊆ P implies sI_g ⊆ P or sJ_g ⊆ P."""
    ring = ideal.ring
    t = ring.tables
    _require_proper(ideal)
    _require_set(ideal, mult_set)
    _require_identity_set(mult_set)
    g = ring.grade_group.normalize(grade)
    ideals = enumerate_graded_ideals(ring)
    slices = [q.slice_indices(g) for q in ideals]

    hypothesis_pairs = []
    for i, j in itertools.product(range(len(ideals)), repeat=2):
        products = t.mul[np.ix_(slices[i], slices[j])]
        if ideal.mask[products].all() and (products != t.zero).any():
            hypothesis_pairs.append((i, j))

    trace = len(ideals) ** 2
    if not hypothesis_pairs:
        return Certificate(G_SLICEWISE, True, ring.elem(mult_set.indices[0]), grade=g, trace_size=trace, vacuous=True)
    counters = []
    for s in mult_set.indices:
        inside = [bool(ideal.mask[t.mul[s, sl]].all()) for sl in slices]
        trace += len(hypothesis_pairs)
        failing = next(((i, j) for i, j in hypothesis_pairs if not inside[i] and not inside[j]), None)
        if failing is None:
            return Certificate(G_SLICEWISE, True, ring.elem(s), grade=g, trace_size=trace)
        counters.append(CounterIdeals(ring.elem(s), ideals[failing[0]], ideals[failing[1]]))
    return Certificate(G_SLICEWISE, False, counters=tuple(counters), grade=g, trace_size=trace)


def colon_criterion_g(ideal: GradedIdeal, mult_set: MultSet, grade: Union[int, Sequence[int]]) -> Certificate:
    """∃s ∀a ∈ R_g outside (P :_{R_g} s): (P :_{R_g} a) ⊆ (P :_{R_g} s) or (P :_{R_g} a) = (0 :_{R_g} a)."""
    ring = ideal.ring
    t = ring.tables
    _require_proper(ideal)
    _require_set(ideal, mult_set)
    _require_identity_set(mult_set)
    g = ring.grade_group.normalize(grade)
    component = t.slices[g]
    zero_mask = np.zeros(t.order, dtype=bool)
    zero_mask[t.zero] = True
    colons = {int(a): set(colon_slice_indices(ideal, int(a), g).tolist()) for a in component}
    annihilators = {int(a): set(component[zero_mask[t.mul[int(a), component]]].tolist()) for a in component}

    counters = []
    trace = 0
    for s in mult_set.indices:
        by_s = set(colon_slice_indices(ideal, int(s), g).tolist())
        failing = None
        for a in component:
            a = int(a)
            if a in by_s:
                continue
            trace += 1
            if not (colons[a] <= by_s or colons[a] == annihilators[a]):
                failing = a
                break
        if failing is None:
            return Certificate(G_COLON_CRITERION, True, ring.elem(s), grade=g, trace_size=trace)
        counters.append(CounterElement(ring.elem(s), ring.elem(failing)))
    return Certificate(G_COLON_CRITERION, False, counters=tuple(counters), grade=g, trace_size=trace)


# ----------------------------------------------------------------------
# Full classification
# ----------------------------------------------------------------------


@dataclass
class ClassificationTable:
    ring: GradedRing
    ideal: GradedIdeal
    mult_set: MultSet
    grade_set: MultSet
    rows: List[Certificate] = field(default_factory=list)
    inconsistencies: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.inconsistencies

    def row(self, name: str, grade: Optional[Union[int, Sequence[int]]] = None) -> Certificate:
        g = self.ring.grade_group.normalize(grade) if grade is not None else None
        for cert in self.rows:
            if cert.property == name and cert.grade == g:
                return cert
        raise KeyError(f"No row {name} (grade {g})")

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.label,
            "ideal": [list(g.coords) for g in self.ideal.generators],
            "mult_set": [list(x.coords) for x in self.mult_set.elements()],
            "rows": [cert.to_dict(self.ring) for cert in self.rows],
            "inconsistencies": list(self.inconsistencies),
        }


_IMPLICATIONS = [
    (GRADED_PRIME, GRADED_PRIMARY),
    (GRADED_PRIMARY, GRADED_WEAKLY_PRIMARY),
    (GRADED_WEAKLY_PRIMARY, GRADED_WEAKLY_S_PRIMARY),
    (GRADED_PRIME, GRADED_S_PRIME),
    (GRADED_S_PRIME, GRADED_S_PRIMARY),
    (GRADED_S_PRIMARY, GRADED_WEAKLY_S_PRIMARY),
    (GRADED_WEAKLY_S_PRIME, GRADED_WEAKLY_S_PRIMARY),
    (GRADED_PRIME, GRADED_WEAKLY_PRIME),
    (GRADED_WEAKLY_PRIME, GRADED_WEAKLY_PRIMARY),
]


def classify_full(ring: GradedRing, ideal: GradedIdeal, mult_set: MultSet) -> ClassificationTable:
    """Run every predicate on (P, S), plus per-grade rows with S ∩ R_e."""
    if ideal.ring is not ring:
        raise RingMismatchError(f"{ideal} does not live in {ring.label}")
    _require_proper(ideal)
    _require_set(ideal, mult_set)

    grade_set = restrict_to_identity(mult_set)
    table = ClassificationTable(ring=ring, ideal=ideal, mult_set=mult_set, grade_set=grade_set)
    table.rows.extend([
        is_graded_prime(ideal),
        is_graded_primary(ideal),
        is_graded_weakly_prime(ideal),
        is_graded_weakly_primary(ideal),
        is_graded_s_prime(ideal, mult_set),
        is_graded_weakly_s_prime(ideal, mult_set),
        is_graded_s_primary(ideal, mult_set),
        is_graded_weakly_s_primary(ideal, mult_set),
        idealwise_weakly_s_primary(ideal, mult_set, corrected=False),
        idealwise_weakly_s_primary(ideal, mult_set, corrected=True),
    ])
    for g in ring.grade_group.elements():
        table.rows.extend([
            is_g_s_primary(ideal, grade_set, g),
            is_g_weakly_s_primary(ideal, grade_set, g),
            is_g_weakly_s_prime(ideal, grade_set, g),
        ])

    verdicts = {(c.property, c.grade): c.verdict for c in table.rows}
    for strong, weak in _IMPLICATIONS:
        if verdicts[(strong, None)] and not verdicts[(weak, None)]:
            table.inconsistencies.append(f"{strong} holds but {weak} does not")
    for g in ring.grade_group.elements():
        if verdicts[(G_S_PRIMARY, g)] and not verdicts[(G_WEAKLY_S_PRIMARY, g)]:
            table.inconsistencies.append(f"{G_S_PRIMARY} holds but {G_WEAKLY_S_PRIMARY} does not in grade {g}")
        if mult_set.in_identity_component and verdicts[(GRADED_WEAKLY_S_PRIMARY, None)] and not verdicts[(G_WEAKLY_S_PRIMARY, g)]:
            table.inconsistencies.append(f"{GRADED_WEAKLY_S_PRIMARY} holds but {G_WEAKLY_S_PRIMARY} fails in grade {g}")
    if table.inconsistencies:
        logger.warning(f"Inconsistent classification of {ideal} in {ring.label}: {table.inconsistencies}")
    return table


# ----------------------------------------------------------------------
# Replay
# ----------------------------------------------------------------------


def replay_certificate(cert: Certificate, ideal: GradedIdeal, mult_set: Optional[MultSet] = None) -> bool:
    """
    Re-check a certificate element by element through the public ring API.

    A true verdict is replayed by re-testing the recorded witness on every pair;
    a false verdict by checking that every candidate s has a recorded counter
    and that each counter really violates the property.
    """
    ring = ideal.ring
    if cert.property in (IDEALWISE_LITERAL, IDEALWISE_CORRECTED, G_SLICEWISE, G_COLON_CRITERION):
        assert mult_set is not None
        return _replay_ideal_level(cert, ideal, mult_set)

    shape = PROPERTIES[cert.property]
    conclusion = grad_radical(ideal) if shape.radical_conclusion else ideal
    if shape.per_grade:
        assert cert.grade is not None
        domain = ring.component_elements(cert.grade)
    else:
        domain = ring.homogeneous_elements()
    candidates = mult_set.elements() if shape.s_parameterized and mult_set is not None else [ring.one]

    def violates(s: RingElem, x: RingElem, y: RingElem) -> bool:
        xy = ring.mul(x, y)
        if not ideal.contains(xy) or (shape.weakly and xy == ring.zero):
            return False
        return not ideal.contains(ring.mul(s, x)) and not conclusion.contains(ring.mul(s, y))

    if cert.verdict:
        s = cert.witness_s if shape.s_parameterized else ring.one
        if s is None or (shape.s_parameterized and s not in candidates):
            return False
        return not any(violates(s, x, y) for x in domain for y in domain)

    seen = set()
    for c in cert.counters:
        if not isinstance(c, CounterPair):
            return False
        s = c.s if c.s is not None else ring.one
        if not violates(s, c.x, c.y):
            return False
        seen.add(s)
    return seen == set(candidates)


def _replay_ideal_level(cert: Certificate, ideal: GradedIdeal, mult_set: MultSet) -> bool:
    ring = ideal.ring
    ideals = enumerate_graded_ideals(ring)
    radical = grad_radical(ideal)

    def all_in(target: GradedIdeal, s: RingElem, elems: List[RingElem]) -> bool:
        return all(target.contains(ring.mul(s, x)) for x in elems)

    def pair_violates(s: RingElem, first: GradedIdeal, second: GradedIdeal) -> bool:
        if cert.property == G_SLICEWISE:
            assert cert.grade is not None
            left = [x for x in first.elements() if ring.grade_of(x) == cert.grade or x == ring.zero]
            right = [y for y in second.elements() if ring.grade_of(y) == cert.grade or y == ring.zero]
            products = [ring.mul(x, y) for x in left for y in right]
            if not all(ideal.contains(p) for p in products) or all(p == ring.zero for p in products):
                return False
            return not all_in(ideal, s, left) and not all_in(ideal, s, right)
        left, right = first.elements(), second.elements()
        products = [ring.mul(x, y) for x in left for y in right]
        if not all(ideal.contains(p) for p in products):
            return False
        if cert.property == IDEALWISE_CORRECTED:
            if all(p == ring.zero for p in products):
                return False
            return not all_in(ideal, s, left) and not all_in(radical, s, right)
        return not all_in(ideal, s, left) and not all_in(ideal, s, right)

    def element_violates(s: RingElem, a: RingElem) -> bool:
        assert cert.grade is not None
        component = ring.component_elements(cert.grade)
        by_s = {r for r in component if ideal.contains(ring.mul(r, s))}
        if a in by_s:
            return False
        by_a = {r for r in component if ideal.contains(ring.mul(r, a))}
        killed = {r for r in component if ring.mul(r, a) == ring.zero}
        return not (by_a <= by_s or by_a == killed)

    candidates = mult_set.elements()
    if cert.verdict:
        s = cert.witness_s
        if s is None or s not in candidates:
            return False
        if cert.property == G_COLON_CRITERION:
            assert cert.grade is not None
            return not any(element_violates(s, a) for a in ring.component_elements(cert.grade))
        return not any(pair_violates(s, i, j) for i in ideals for j in ideals)

    seen = set()
    for c in cert.counters:
        if isinstance(c, CounterIdeals):
            if c.s is None or not pair_violates(c.s, c.first, c.second):
                return False
            seen.add(c.s)
        elif isinstance(c, CounterElement):
            if not element_violates(c.s, c.a):
                return False
            seen.add(c.s)
        else:
            return False
    return seen == set(candidates)
