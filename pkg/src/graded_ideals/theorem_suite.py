"""
Executable registry of the graded weakly S-primary results, checked by brute
force over a corpus of small graded rings.

Each registry entry turns the corpus into a list of trials. A trial evaluates
the hypothesis of its result on one instance (nonvacuous when it holds) and the
conclusion. One failing nonvacuous trial makes the result falsified, and the
trial is kept on the report so the counterexample can be re-evaluated later
from scratch.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from graded_ideals.classify import (
    GRADED_PRIMARY,
    GRADED_S_PRIMARY,
    GRADED_WEAKLY_PRIMARY,
    GRADED_WEAKLY_S_PRIMARY,
    GRADED_WEAKLY_S_PRIME,
    G_S_PRIMARY,
    G_WEAKLY_S_PRIMARY,
    G_WEAKLY_S_PRIME,
    Certificate,
    check_property,
    colon_criterion_g,
    idealwise_weakly_s_primary,
    replay_certificate,
    slicewise_g_weakly_s_primary,
)
from graded_ideals.config import get_settings
from graded_ideals.constants import STATUS_FALSIFIED, STATUS_VACUOUS, STATUS_VERIFIED
from graded_ideals.corpus import Corpus, Inclusion, Projection, RingEntry, instance_id
from graded_ideals.errors import MultiplicativeSetError, UnknownTheoremError
from graded_ideals.ideal_lattice import (
    GradedIdeal,
    colon_elem,
    colon_stable,
    enumerate_graded_ideals,
    grad_radical,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    maximal_disjoint_ideal,
    power_slice_product,
    product_ideal,
    whole,
    zero,
)
from graded_ideals.localization import (
    LocalizedRing,
    contract_ideal,
    extend_ideal,
    is_graded_domain,
    is_graded_field,
    localize,
)
from graded_ideals.morphisms import GradedHom, image_ideal, preimage_ideal
from graded_ideals.mult_set import (
    MultSet,
    closure,
    from_members,
    image,
    is_disjoint,
    product_set,
    restrict_to_identity,
    saturation_star,
)
from graded_ideals.ring_core import Grade, GradedRing, RingElem, make_gaussian_quotient

logger = logging.getLogger(__name__)

# Rings with more graded ideals than this are skipped by the three-ideal corollary
TRIPLE_IDEAL_LIMIT = 16


@dataclass(frozen=True)
class Evidence:
    """A certificate together with the inputs needed to replay it."""

    certificate: Certificate
    ideal: GradedIdeal
    mult_set: Optional[MultSet] = None

    @property
    def verdict(self) -> bool:
        return self.certificate.verdict

    def replays(self) -> bool:
        return replay_certificate(self.certificate, self.ideal, self.mult_set)

    def to_dict(self) -> dict:
        record = self.certificate.to_dict(self.ideal.ring)
        record["ring"] = self.ideal.ring.label
        record["ideal"] = str(self.ideal)
        record["mult_set"] = str(self.mult_set) if self.mult_set is not None else None
        return record


@dataclass(frozen=True)
class Verdict:
    nonvacuous: bool
    holds: bool = True
    detail: str = ""
    evidence: Tuple[Evidence, ...] = ()
    regime: Optional[str] = None


SKIP = Verdict(nonvacuous=False)


@dataclass(frozen=True)
class Trial:
    instance_id: str
    evaluate: Callable[[Judge], Verdict]


@dataclass
class Counterexample:
    instance_id: str
    detail: str
    evidence: Tuple[Evidence, ...]
    trial: Trial

    def to_dict(self) -> dict:
        return {
            "instance": self.instance_id,
            "detail": self.detail,
            "certificates": [e.to_dict() for e in self.evidence],
        }


@dataclass
class TheoremReport:
    theorem_id: str
    description: str
    label: str
    tested: int
    nonvacuous: int
    status: str
    counterexample: Optional[Counterexample] = None
    wall_time: float = 0.0
    notes: List[str] = field(default_factory=list)

    def to_dict(self, include_timing: bool = True) -> dict:
        record = {
            "id": self.theorem_id,
            "description": self.description,
            "label": self.label,
            "status": self.status,
            "tested": self.tested,
            "nonvacuous": self.nonvacuous,
            "notes": list(self.notes),
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }
        if include_timing:
            record["wall_time"] = round(self.wall_time, 4)
        return record


@dataclass(frozen=True)
class TheoremEntry:
    theorem_id: str
    description: str
    trials: Callable[[Corpus], Iterable[Trial]]
    label: str = "literal"


class Judge:
    """Memoized predicate evaluation shared by the trials of one run."""

    def __init__(self) -> None:
        self._cache: Dict[tuple, object] = {}

    def _memo(self, key: tuple, compute: Callable[[], object]) -> object:
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def check(
        self,
        name: str,
        ideal: GradedIdeal,
        mult_set: Optional[MultSet] = None,
        grade: Optional[Grade] = None,
    ) -> Evidence:
        cert = self._memo(("check", name, ideal, mult_set, grade), lambda: check_property(name, ideal, mult_set, grade))
        return Evidence(cert, ideal, mult_set)  # type: ignore[arg-type]

    def weakly(self, ideal: GradedIdeal, mult_set: MultSet) -> Evidence:
        return self.check(GRADED_WEAKLY_S_PRIMARY, ideal, mult_set)

    def g_weakly(self, ideal: GradedIdeal, mult_set: MultSet, grade: Grade) -> Evidence:
        return self.check(G_WEAKLY_S_PRIMARY, ideal, mult_set, grade)

    def idealwise(self, ideal: GradedIdeal, mult_set: MultSet, corrected: bool) -> Evidence:
        cert = self._memo(
            ("idealwise", ideal, mult_set, corrected),
            lambda: idealwise_weakly_s_primary(ideal, mult_set, corrected),
        )
        return Evidence(cert, ideal, mult_set)  # type: ignore[arg-type]

    def slicewise(self, ideal: GradedIdeal, mult_set: MultSet, grade: Grade) -> Evidence:
        cert = self._memo(
            ("slicewise", ideal, mult_set, grade),
            lambda: slicewise_g_weakly_s_primary(ideal, mult_set, grade),
        )
        return Evidence(cert, ideal, mult_set)  # type: ignore[arg-type]

    def colon_criterion(self, ideal: GradedIdeal, mult_set: MultSet, grade: Grade) -> Evidence:
        cert = self._memo(
            ("colon_criterion", ideal, mult_set, grade),
            lambda: colon_criterion_g(ideal, mult_set, grade),
        )
        return Evidence(cert, ideal, mult_set)  # type: ignore[arg-type]

    def localized(self, mult_set: MultSet) -> LocalizedRing:
        return self._memo(("local", mult_set), lambda: localize(mult_set.ring, mult_set))  # type: ignore[return-value]

    def star(self, mult_set: MultSet) -> MultSet:
        return self._memo(("star", mult_set), lambda: saturation_star(mult_set))  # type: ignore[return-value]

    def colon(self, ideal: GradedIdeal, s: RingElem) -> GradedIdeal:
        return self._memo(("colon", ideal, s), lambda: colon_elem(ideal, s))  # type: ignore[return-value]

    def stable_colon(self, ideal: GradedIdeal, s: RingElem) -> GradedIdeal:
        return self._memo(("stable_colon", ideal, s), lambda: colon_stable(ideal, s))  # type: ignore[return-value]

    def image_set(self, f: GradedHom, mult_set: MultSet) -> MultSet:
        return self._memo(("image_set", id(f), mult_set), lambda: image(f, mult_set))  # type: ignore[return-value]

    def image_ideal(self, f: GradedHom, ideal: GradedIdeal) -> GradedIdeal:
        return self._memo(("image_ideal", id(f), ideal), lambda: image_ideal(f, ideal))  # type: ignore[return-value]

    def product(self, a: GradedIdeal, b: GradedIdeal) -> GradedIdeal:
        return self._memo(("product", a, b), lambda: ideal_product(a, b))  # type: ignore[return-value]

    def cofinal(self, s1: MultSet, s2: MultSet) -> bool:
        """Every s ∈ S2 has t ∈ S2 with st ∈ S1."""

        def compute() -> bool:
            t = s1.ring.tables
            mask = np.zeros(t.order, dtype=bool)
            mask[list(s1.members)] = True
            return bool(mask[t.mul[np.ix_(s2.indices, s2.indices)]].any(axis=1).all())

        return self._memo(("cofinal", s1, s2), compute)  # type: ignore[return-value]


# ----------------------------------------------------------------------
# Trial helpers
# ----------------------------------------------------------------------


def _fmt(ring: GradedRing, x: Optional[RingElem]) -> str:
    return "-" if x is None else ring.format(x)


def _grade_label(g: Grade) -> str:
    return f"g={g[0] if len(g) == 1 else g}"


def _over_instances(fn: Callable[..., Verdict]) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for inst in corpus.instances():
            yield Trial(inst.instance_id, partial(fn, P=inst.ideal, S=inst.mult_set))

    return trials


def _over_graded_instances(fn: Callable[..., Verdict]) -> Callable[[Corpus], Iterator[Trial]]:
    """Instances with S ⊆ R_e, once per grade."""

    def trials(corpus: Corpus) -> Iterator[Trial]:
        for inst in corpus.instances():
            if not inst.mult_set.in_identity_component:
                continue
            for g in inst.ring.grade_group.elements():
                yield Trial(f"{inst.instance_id} | {_grade_label(g)}", partial(fn, P=inst.ideal, S=inst.mult_set, g=g))

    return trials


def _set_pairs(entry: RingEntry, identity_only: bool = False) -> Iterator[Tuple[MultSet, MultSet]]:
    """(S1, S2) with S1 strictly inside S2."""
    sets = entry.identity_sets if identity_only else entry.sets
    for s1 in sets:
        for s2 in sets:
            if s1.members < s2.members:
                yield s1, s2


def _regime(mult_set: MultSet) -> str:
    return "regular S" if mult_set.consists_of_regular else "non-regular S"


# ----------------------------------------------------------------------
# graded weakly S-primary ideals
# ----------------------------------------------------------------------


def _prop1(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    if not S.consists_of_units:
        return SKIP
    a = judge.weakly(P, S)
    b = judge.check(GRADED_WEAKLY_PRIMARY, P)
    return Verdict(True, a.verdict == b.verdict, f"weakly S-primary={a.verdict}, weakly primary={b.verdict}", (a, b))


def _prop2(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    radical = grad_radical(P)
    if not is_disjoint(radical, S):
        return SKIP
    a = judge.weakly(P, S)
    b = judge.check(GRADED_WEAKLY_S_PRIME, radical, S)
    return Verdict(
        True, a.verdict == b.verdict,
        f"P weakly S-primary={a.verdict}, Grad(P)={radical} weakly S-prime={b.verdict}", (a, b),
    )


def _local_weakly_primary(judge: Judge, P: GradedIdeal, S: MultSet) -> Tuple[bool, GradedIdeal, LocalizedRing]:
    local = judge.localized(S)
    extended = extend_ideal(local, P)
    if not extended.is_proper:
        return False, extended, local
    return judge.check(GRADED_WEAKLY_PRIMARY, extended).verdict, extended, local


def _thm1(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    a = judge.weakly(P, S)
    if not a.verdict:
        return SKIP
    ok, extended, local = _local_weakly_primary(judge, P, S)
    return Verdict(True, ok, f"S^-1 P = {extended} in {local.ring.label}", (a,))


def _lem1(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    a = judge.weakly(P, S)
    if not a.verdict:
        return SKIP
    ring = P.ring
    s = a.certificate.witness_s
    assert s is not None
    base = grad_radical(judge.colon(P, s))
    power, seen, n = s, {s}, 1
    while True:
        power, n = ring.mul(power, s), n + 1
        if power in seen:
            break
        seen.add(power)
        if grad_radical(judge.colon(P, power)) != base:
            return Verdict(True, False, f"Grad((P:s)) != Grad((P:s^{n})) for s={ring.format(s)}", (a,))
    return Verdict(True, True, f"s={ring.format(s)}", (a,))


def _first_weakly_primary_colon(judge: Judge, P: GradedIdeal, S: MultSet) -> Optional[RingElem]:
    for s in S.elements():
        colon = judge.colon(P, s)
        if colon.is_proper and judge.check(GRADED_WEAKLY_PRIMARY, colon).verdict:
            return s
    return None


def _prop3(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    a = judge.weakly(P, S)
    s = _first_weakly_primary_colon(judge, P, S)
    return Verdict(
        True, a.verdict == (s is not None),
        f"weakly S-primary={a.verdict}, (P:s) weakly primary for s={_fmt(P.ring, s)}", (a,), _regime(S),
    )


def _prop4(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    if not S.consists_of_regular:
        return SKIP
    a = judge.weakly(P, S)
    local_ok = _local_weakly_primary(judge, P, S)[0]
    colons = {t: judge.colon(P, t) for t in S.elements()}
    dominating = any(all(c.issubset(colons[s]) for c in colons.values()) for s in colons)
    return Verdict(
        True, a.verdict == (local_ok and dominating),
        f"weakly S-primary={a.verdict}, S^-1 P weakly primary={local_ok}, dominating colon={dominating}", (a,),
    )


def _contraction_colon(judge: Judge, P: GradedIdeal, S: MultSet) -> Optional[RingElem]:
    local = judge.localized(S)
    contracted = contract_ideal(local, extend_ideal(local, P))
    for s in S.elements():
        if judge.colon(P, s) == contracted:
            return s
    return None


def _thm2(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    a = judge.weakly(P, S)
    local_ok = _local_weakly_primary(judge, P, S)[0]
    s = _contraction_colon(judge, P, S)
    stable = s is not None and judge.colon(P, s) == judge.stable_colon(P, s)
    rhs = local_ok and stable
    return Verdict(
        True, a.verdict == rhs,
        f"weakly S-primary={a.verdict}, S^-1 P weakly primary={local_ok}, "
        f"contraction=(P:s)=(P:s^inf) for s={_fmt(P.ring, s)}",
        (a,), _regime(S),
    )


def _thm2_stable_colon(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    """An s with contraction(S^-1 P) = (P:s) also has (P:s) = (P:s^n) for every n."""
    s = _contraction_colon(judge, P, S)
    if s is None:
        return SKIP
    colon, stable = judge.colon(P, s), judge.stable_colon(P, s)
    return Verdict(True, colon == stable, f"s={_fmt(P.ring, s)}, (P:s)={colon}, (P:s^inf)={stable}", regime=_regime(S))


def _thm3(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    first = judge.weakly(P, S)
    second = _first_weakly_primary_colon(judge, P, S) is not None
    third = _local_weakly_primary(judge, P, S)[0] and _contraction_colon(judge, P, S) is not None
    return Verdict(
        True, first.verdict == second == third,
        f"(i)={first.verdict}, (ii)={second}, (iii)={third}", (first,), _regime(S),
    )


def _prop5_trials(corpus: Corpus) -> Iterator[Trial]:
    for entry in corpus.rings:
        for P, S in entry.disjoint_pairs():
            for I in entry.ideals:
                if I.members & S.members:
                    yield Trial(instance_id(entry.ring, P, S, f"I={I}"), partial(_prop5, P=P, S=S, I=I))


def _prop5(judge: Judge, P: GradedIdeal, S: MultSet, I: GradedIdeal) -> Verdict:
    a = judge.weakly(P, S)
    if not a.verdict:
        return SKIP
    meet = ideal_intersection(P, I)
    b = judge.weakly(meet, S)
    return Verdict(True, b.verdict, f"P ∩ I = {meet}", (a, b))


def _chain_trials(fn: Callable[..., Verdict], identity_only: bool, cofinal: bool) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for entry in corpus.rings:
            for s1, s2 in _set_pairs(entry, identity_only):
                for P in entry.proper_ideals:
                    if not is_disjoint(P, s2):
                        continue
                    base = f"{entry.label} | P={P} | S1={s1} | S2={s2}"
                    if identity_only:
                        for g in entry.ring.grade_group.elements():
                            yield Trial(f"{base} | {_grade_label(g)}", partial(fn, P=P, S1=s1, S2=s2, g=g))
                    else:
                        yield Trial(base, partial(fn, P=P, S1=s1, S2=s2))

    return trials


def _rem2(judge: Judge, P: GradedIdeal, S1: MultSet, S2: MultSet) -> Verdict:
    a = judge.weakly(P, S1)
    if not a.verdict:
        return SKIP
    b = judge.weakly(P, S2)
    return Verdict(True, b.verdict, "", (a, b))


def _prop6(judge: Judge, P: GradedIdeal, S1: MultSet, S2: MultSet) -> Verdict:
    if not judge.cofinal(S1, S2):
        return SKIP
    a = judge.weakly(P, S2)
    if not a.verdict:
        return SKIP
    b = judge.weakly(P, S1)
    return Verdict(True, b.verdict, "", (a, b))


def _prop7(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    star = judge.star(S)
    if not is_disjoint(P, star):
        return SKIP
    a = judge.weakly(P, S)
    b = judge.weakly(P, star)
    return Verdict(True, a.verdict == b.verdict, f"S*={star}", (a, b))


def _ideal_pair_trials(fn: Callable[..., Verdict], per_grade: bool = False) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for entry in corpus.rings:
            sets = entry.identity_sets if per_grade else entry.sets
            for S in sets:
                ideals = [p for p in entry.proper_ideals if is_disjoint(p, S)]
                for P1, P2 in itertools.combinations(ideals, 2):
                    base = f"{entry.label} | P1={P1} | P2={P2} | S={S}"
                    if per_grade:
                        for g in entry.ring.grade_group.elements():
                            yield Trial(f"{base} | {_grade_label(g)}", partial(fn, P1=P1, P2=P2, S=S, g=g))
                    else:
                        yield Trial(base, partial(fn, P1=P1, P2=P2, S=S))

    return trials


def _lem2(judge: Judge, P1: GradedIdeal, P2: GradedIdeal, S: MultSet) -> Verdict:
    a, b = judge.weakly(P1, S), judge.weakly(P2, S)
    if not (a.verdict and b.verdict):
        return SKIP
    left = ideal_intersection(grad_radical(P1), grad_radical(P2))
    right = grad_radical(ideal_intersection(P1, P2))
    return Verdict(True, left == right, f"Grad(P1) ∩ Grad(P2) = {left}, Grad(P1 ∩ P2) = {right}", (a, b))


def _prop8(judge: Judge, P1: GradedIdeal, P2: GradedIdeal, S: MultSet) -> Verdict:
    if grad_radical(P1) != grad_radical(P2):
        return SKIP
    a, b = judge.weakly(P1, S), judge.weakly(P2, S)
    if not (a.verdict and b.verdict):
        return SKIP
    c = judge.weakly(ideal_intersection(P1, P2), S)
    return Verdict(True, c.verdict, "", (a, b, c))


def _lem3_trials(corpus: Corpus) -> Iterator[Trial]:
    for product in corpus.products:
        ring = product.entry.ring
        for P1 in product.left.ideals:
            for P2 in product.right.ideals:
                yield Trial(f"{ring.label} | P1={P1} | P2={P2}", partial(_lem3, ring=ring, P1=P1, P2=P2))


def _lem3(judge: Judge, ring: GradedRing, P1: GradedIdeal, P2: GradedIdeal) -> Verdict:
    R1, R2 = whole(P1.ring), whole(P2.ring)
    checks = {
        "(i)": grad_radical(product_ideal(ring, P1, R2)) == product_ideal(ring, grad_radical(P1), R2),
        "(ii)": grad_radical(product_ideal(ring, R1, P2)) == product_ideal(ring, R1, grad_radical(P2)),
        "(iii)": grad_radical(product_ideal(ring, P1, P2)) == product_ideal(ring, grad_radical(P1), grad_radical(P2)),
    }
    failed = [k for k, ok in checks.items() if not ok]
    return Verdict(True, not failed, f"failing parts: {failed}" if failed else "")


def _product_set_triples(corpus: Corpus) -> Iterator[Tuple[RingEntry, RingEntry, RingEntry, MultSet, MultSet, MultSet]]:
    for product in corpus.products:
        for s1 in product.left.sets:
            for s2 in product.right.sets:
                try:
                    S = product_set(product.entry.ring, s1, s2)
                except MultiplicativeSetError:
                    continue
                yield product.entry, product.left, product.right, s1, s2, S


def _thm4_trials(part: str) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for entry, left, right, s1, s2, S in _product_set_triples(corpus):
            base = f"{entry.label} | S1={s1} | S2={s2}"
            if part == "i":
                for P1 in left.proper_ideals:
                    if is_disjoint(P1, s1):
                        yield Trial(f"{base} | P1={P1}", partial(_thm4_i, ring=entry.ring, P1=P1, S1=s1, S=S))
            elif part == "ii":
                for P2 in right.proper_ideals:
                    if is_disjoint(P2, s2):
                        yield Trial(f"{base} | P2={P2}", partial(_thm4_ii, ring=entry.ring, P2=P2, S2=s2, S=S))
            else:
                for P1 in left.ideals:
                    for P2 in right.ideals:
                        if part in ("iii", "iii_converse"):
                            if not (P1.is_proper and P2.is_proper):
                                continue
                        elif not (P1.is_proper or P2.is_proper):
                            continue
                        if (P1.is_proper and not is_disjoint(P1, s1)) or (P2.is_proper and not is_disjoint(P2, s2)):
                            continue
                        fn = {"iii": _thm4_iii, "iii_converse": _thm4_iii_converse, "thm5": _thm5}[part]
                        yield Trial(
                            f"{base} | P1={P1} | P2={P2}",
                            partial(fn, ring=entry.ring, P1=P1, P2=P2, S1=s1, S2=s2, S=S),
                        )

    return trials


def _thm4_i(judge: Judge, ring: GradedRing, P1: GradedIdeal, S1: MultSet, S: MultSet) -> Verdict:
    a = judge.weakly(P1, S1)
    big = product_ideal(ring, P1, whole(ring.factors[1]))  # type: ignore[index]
    b = judge.weakly(big, S)
    return Verdict(True, a.verdict == b.verdict, f"P1 weakly S1-primary={a.verdict}, P1 x R2 weakly S-primary={b.verdict}", (a, b))


def _thm4_ii(judge: Judge, ring: GradedRing, P2: GradedIdeal, S2: MultSet, S: MultSet) -> Verdict:
    a = judge.weakly(P2, S2)
    big = product_ideal(ring, whole(ring.factors[0]), P2)  # type: ignore[index]
    b = judge.weakly(big, S)
    return Verdict(True, a.verdict == b.verdict, f"P2 weakly S2-primary={a.verdict}, R1 x P2 weakly S-primary={b.verdict}", (a, b))


def _thm4_sides(judge: Judge, ring: GradedRing, P1: GradedIdeal, P2: GradedIdeal, S1: MultSet, S2: MultSet, S: MultSet) -> Tuple[Evidence, Evidence, Evidence]:
    return judge.weakly(P1, S1), judge.weakly(P2, S2), judge.weakly(product_ideal(ring, P1, P2), S)


def _thm4_iii(judge: Judge, ring: GradedRing, P1: GradedIdeal, P2: GradedIdeal, S1: MultSet, S2: MultSet, S: MultSet) -> Verdict:
    a, b, c = _thm4_sides(judge, ring, P1, P2, S1, S2, S)
    if not c.verdict:
        return SKIP
    return Verdict(True, a.verdict and b.verdict, f"P1: {a.verdict}, P2: {b.verdict}", (a, b, c))


def _thm4_iii_converse(judge: Judge, ring: GradedRing, P1: GradedIdeal, P2: GradedIdeal, S1: MultSet, S2: MultSet, S: MultSet) -> Verdict:
    a, b, c = _thm4_sides(judge, ring, P1, P2, S1, S2, S)
    if not (a.verdict and b.verdict):
        return SKIP
    return Verdict(True, c.verdict, f"P1 x P2 weakly S-primary={c.verdict}", (a, b, c))


def _thm5(judge: Judge, ring: GradedRing, P1: GradedIdeal, P2: GradedIdeal, S1: MultSet, S2: MultSet, S: MultSet) -> Verdict:
    lhs = judge.weakly(product_ideal(ring, P1, P2), S)
    w1 = P1.is_proper and judge.weakly(P1, S1).verdict
    w2 = P2.is_proper and judge.weakly(P2, S2).verdict
    rhs = (not P1.is_proper and w2) or (not P2.is_proper and w1) or (w1 and w2)
    return Verdict(True, lhs.verdict == rhs, f"(i)={lhs.verdict}, (ii)={rhs}", (lhs,))


def _prop9(judge: Judge, P: GradedIdeal, S: MultSet, corrected: bool) -> Verdict:
    a = judge.weakly(P, S)
    b = judge.idealwise(P, S, corrected)
    return Verdict(True, a.verdict == b.verdict, f"elementwise={a.verdict}, idealwise={b.verdict}", (a, b))


def _coro1_trials(corpus: Corpus) -> Iterator[Trial]:
    for entry in corpus.rings:
        if len(entry.ideals) > TRIPLE_IDEAL_LIMIT:
            continue
        for P, S in entry.disjoint_pairs():
            yield Trial(instance_id(entry.ring, P, S, "n=3"), partial(_coro1, P=P, S=S))


def _coro1(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    ring = P.ring
    t = ring.tables
    ideals = enumerate_graded_ideals(ring)
    triples = [
        (i, j, k)
        for i, j, k in itertools.product(range(len(ideals)), repeat=3)
        if judge.product(judge.product(ideals[i], ideals[j]), ideals[k]).issubset(P)
    ]
    witness = None
    for s in S.indices:
        inside = [bool(P.mask[t.mul[s, q.indices]].all()) for q in ideals]
        if all(inside[i] or inside[j] or inside[k] for i, j, k in triples):
            witness = ring.elem(s)
            break
    a = judge.weakly(P, S)
    return Verdict(True, a.verdict == (witness is not None), f"elementwise={a.verdict}, three-ideal witness={_fmt(ring, witness)}", (a,))


def _projection_trials(fn: Callable[..., Verdict], identity_only: bool = False) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for proj in corpus.projections:
            sets = proj.entry.identity_sets if identity_only else proj.entry.sets
            for P in proj.entry.proper_ideals:
                if not proj.kernel.issubset(P):
                    continue
                for S in sets:
                    if not is_disjoint(P, S):
                        continue
                    base = f"{proj.hom.name} | P={P} | S={S}"
                    if identity_only:
                        for g in proj.entry.ring.grade_group.elements():
                            yield Trial(f"{base} | {_grade_label(g)}", partial(fn, proj=proj, P=P, S=S, g=g))
                    else:
                        yield Trial(base, partial(fn, proj=proj, P=P, S=S))

    return trials


def _pushforward(judge: Judge, proj: Projection, P: GradedIdeal, S: MultSet) -> Tuple[GradedIdeal, MultSet]:
    return judge.image_ideal(proj.hom, P), judge.image_set(proj.hom, S)


def _prop10_i(judge: Judge, proj: Projection, P: GradedIdeal, S: MultSet) -> Verdict:
    a = judge.weakly(P, S)
    if not a.verdict:
        return SKIP
    fP, fS = _pushforward(judge, proj, P, S)
    if not is_disjoint(fP, fS):
        return Verdict(True, False, f"f(P)={fP} meets f(S)={fS}", (a,))
    b = judge.weakly(fP, fS)
    return Verdict(True, b.verdict, f"f(P)={fP}, f(S)={fS}", (a, b))


def _coro2_iii(judge: Judge, proj: Projection, P: GradedIdeal, S: MultSet, weakly: bool) -> Verdict:
    fP, fS = _pushforward(judge, proj, P, S)
    if not is_disjoint(fP, fS):
        return SKIP
    a = judge.weakly(fP, fS)
    b = judge.check(GRADED_S_PRIMARY, proj.kernel, S)
    if not (a.verdict and b.verdict):
        return SKIP
    c = judge.weakly(P, S) if weakly else judge.check(GRADED_S_PRIMARY, P, S)
    return Verdict(True, c.verdict, f"I={proj.kernel}", (a, b, c))


def _inclusion_trials(fn: Callable[..., Verdict], per_grade: bool = False) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for inc in corpus.inclusions:
            for I in inc.entry.proper_ideals:
                for S in inc.component.sets:
                    base = f"{inc.hom.name} | I={I} | S={S}"
                    if per_grade:
                        for g in inc.entry.ring.grade_group.elements():
                            yield Trial(f"{base} | {_grade_label(g)}", partial(fn, inc=inc, I=I, S=S, g=g))
                    else:
                        yield Trial(base, partial(fn, inc=inc, I=I, S=S))

    return trials


def _prop10_ii(judge: Judge, inc: Inclusion, I: GradedIdeal, S: MultSet) -> Verdict:
    fS = judge.image_set(inc.hom, S)
    if not is_disjoint(I, fS):
        return SKIP
    a = judge.weakly(I, fS)
    if not a.verdict:
        return SKIP
    pre = preimage_ideal(inc.hom, I)
    b = judge.weakly(pre, S)
    return Verdict(True, b.verdict, f"f^-1(I)={pre}", (a, b))


def _coro2_ii_trials(corpus: Corpus) -> Iterator[Trial]:
    for inc in corpus.inclusions:
        for P, S in inc.entry.disjoint_pairs():
            if S.in_identity_component:
                yield Trial(instance_id(inc.entry.ring, P, S, "P ∩ R_e"), partial(_coro2_ii, inc=inc, P=P, S=S))


def _pullback_set(inc: Inclusion, S: MultSet) -> MultSet:
    values = inc.hom.values
    return from_members(inc.component.ring, [i for i in range(len(values)) if int(values[i]) in S.members])


def _coro2_ii(judge: Judge, inc: Inclusion, P: GradedIdeal, S: MultSet) -> Verdict:
    a = judge.weakly(P, S)
    if not a.verdict:
        return SKIP
    meet = preimage_ideal(inc.hom, P)
    b = judge.weakly(meet, _pullback_set(inc, S))
    return Verdict(True, b.verdict, f"P ∩ R_e = {meet}", (a, b))


def _prop11_trials(literal: bool) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for entry in corpus.rings:
            for S in entry.sets:
                ideals = [p for p in entry.proper_ideals if is_disjoint(p, S)]
                for P, I in itertools.product(ideals, repeat=2):
                    if literal and not I.issubset(P):
                        continue
                    total = ideal_sum(P, I)
                    if not total.is_proper or not is_disjoint(total, S):
                        continue
                    yield Trial(f"{entry.label} | P={P} | I={I} | S={S}", partial(_prop11, P=P, I=I, S=S))

    return trials


def _prop11(judge: Judge, P: GradedIdeal, I: GradedIdeal, S: MultSet) -> Verdict:
    a, b = judge.weakly(P, S), judge.weakly(I, S)
    if not (a.verdict and b.verdict):
        return SKIP
    total = ideal_sum(P, I)
    c = judge.weakly(total, S)
    return Verdict(True, c.verdict, f"P+I={total}", (a, b, c))


def _lem4(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    maximal = maximal_disjoint_ideal(P.ring, P, S)
    a = judge.check(GRADED_PRIMARY, maximal)
    return Verdict(True, a.verdict, f"maximal ideal over I avoiding S: {maximal}", (a,))


def _ring_set_trials(fn: Callable[..., Verdict], chain_only: bool = False) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for entry in corpus.rings:
            if chain_only and not _is_chain(entry):
                continue
            for S in entry.sets:
                yield Trial(f"{entry.label} | S={S}", partial(fn, entry=entry, S=S))

    return trials


def _prop12(judge: Judge, entry: RingEntry, S: MultSet) -> Verdict:
    ring = entry.ring
    zero_ideal = zero(ring)
    candidates = [p for p in entry.proper_ideals if is_disjoint(p, S)]
    weakly = {p for p in candidates if judge.weakly(p, S).verdict}
    s_primary = {p for p in candidates if judge.check(GRADED_S_PRIMARY, p, S).verdict}
    first = weakly == {zero_ideal}
    second = s_primary == {zero_ideal}
    third = is_graded_domain(ring) and is_graded_field(judge.localized(S).ring)
    return Verdict(True, first == second == third, f"(i)={first}, (ii)={second}, (iii)={third}")


def _thm6(judge: Judge, entry: RingEntry, S: MultSet) -> Verdict:
    candidates = [p for p in entry.proper_ideals if is_disjoint(p, S)]
    lhs = all(judge.check(GRADED_PRIMARY, p).verdict for p in candidates if judge.weakly(p, S).verdict)
    rhs = is_graded_domain(entry.ring) and all(
        judge.check(GRADED_PRIMARY, p).verdict for p in candidates if judge.check(GRADED_S_PRIMARY, p, S).verdict
    )
    failing = next((p for p in candidates if judge.weakly(p, S).verdict and not judge.check(GRADED_PRIMARY, p).verdict), None)
    evidence = (judge.weakly(failing, S), judge.check(GRADED_PRIMARY, failing)) if failing is not None else ()
    return Verdict(True, lhs == rhs, f"left side={lhs}, right side={rhs}", evidence)


def _is_chain(entry: RingEntry) -> bool:
    """Graded ideals totally ordered by inclusion."""
    return all(a.issubset(b) for a, b in zip(entry.ideals, entry.ideals[1:]))


def _thm7_probe(judge: Judge, entry: RingEntry, S: MultSet) -> Verdict:
    candidates = [p for p in entry.proper_ideals if is_disjoint(p, S)]
    failing = next((p for p in candidates if not judge.weakly(p, S).verdict), None)
    if failing is None:
        return Verdict(True, True, f"{len(candidates)} disjoint ideals")
    return Verdict(True, False, f"P={failing} is not weakly S-primary", (judge.weakly(failing, S),))


def _thm10_probe(judge: Judge, entry: RingEntry, S: MultSet) -> Verdict:
    if not S.in_identity_component:
        return SKIP
    for p in entry.proper_ideals:
        if not is_disjoint(p, S):
            continue
        for g in entry.ring.grade_group.elements():
            cert = judge.g_weakly(p, S, g)
            if not cert.verdict:
                return Verdict(True, False, f"P={p} fails in {_grade_label(g)}", (cert,))
    return Verdict(True, True)


# ----------------------------------------------------------------------
# per-grade variants
# ----------------------------------------------------------------------


def _lem5(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    if not S.in_identity_component:
        return SKIP
    a = judge.weakly(P, S)
    if not a.verdict:
        return SKIP
    for g in P.ring.grade_group.elements():
        b = judge.g_weakly(P, S, g)
        if not b.verdict:
            return Verdict(True, False, f"fails in {_grade_label(g)}", (a, b))
    return Verdict(True, True, "", (a,))


def _prop13(judge: Judge, P: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    radical = grad_radical(P)
    if not is_disjoint(radical, S):
        return SKIP
    a = judge.g_weakly(P, S, g)
    b = judge.check(G_WEAKLY_S_PRIME, radical, S, g)
    return Verdict(True, a.verdict == b.verdict, f"P g-weakly S-primary={a.verdict}, Grad(P) g-weakly S-prime={b.verdict}", (a, b))


def _prop14_trials(corpus: Corpus) -> Iterator[Trial]:
    for entry in corpus.rings:
        for P, S in entry.disjoint_pairs():
            if not S.in_identity_component:
                continue
            for I in entry.ideals:
                if I.members & S.members:
                    for g in entry.ring.grade_group.elements():
                        yield Trial(
                            instance_id(entry.ring, P, S, f"I={I}", _grade_label(g)),
                            partial(_prop14, P=P, S=S, I=I, g=g),
                        )


def _prop14(judge: Judge, P: GradedIdeal, S: MultSet, I: GradedIdeal, g: Grade) -> Verdict:
    a = judge.g_weakly(P, S, g)
    if not a.verdict:
        return SKIP
    meet = ideal_intersection(P, I)
    b = judge.g_weakly(meet, S, g)
    return Verdict(True, b.verdict, f"P ∩ I = {meet}", (a, b))


def _rem3(judge: Judge, P: GradedIdeal, S1: MultSet, S2: MultSet, g: Grade) -> Verdict:
    a = judge.g_weakly(P, S1, g)
    if not a.verdict:
        return SKIP
    b = judge.g_weakly(P, S2, g)
    return Verdict(True, b.verdict, "", (a, b))


def _prop15(judge: Judge, P: GradedIdeal, S1: MultSet, S2: MultSet, g: Grade) -> Verdict:
    if not judge.cofinal(S1, S2):
        return SKIP
    a = judge.g_weakly(P, S2, g)
    if not a.verdict:
        return SKIP
    b = judge.g_weakly(P, S1, g)
    return Verdict(True, b.verdict, "", (a, b))


def _prop16(judge: Judge, P: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    star = restrict_to_identity(judge.star(S))
    if not is_disjoint(P, star):
        return SKIP
    a = judge.g_weakly(P, S, g)
    b = judge.g_weakly(P, star, g)
    return Verdict(True, a.verdict == b.verdict, f"S* ∩ R_e = {star}", (a, b))


def _prop17(judge: Judge, P1: GradedIdeal, P2: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    if grad_radical(P1) != grad_radical(P2):
        return SKIP
    a, b = judge.g_weakly(P1, S, g), judge.g_weakly(P2, S, g)
    if not (a.verdict and b.verdict):
        return SKIP
    c = judge.g_weakly(ideal_intersection(P1, P2), S, g)
    return Verdict(True, c.verdict, "", (a, b, c))


def _gap(judge: Judge, P: GradedIdeal, S: MultSet, g: Grade) -> Optional[Tuple[Evidence, Evidence]]:
    """(g-weakly true, g-S-primary false) certificates, or None when there is no gap."""
    a = judge.g_weakly(P, S, g)
    if not a.verdict:
        return None
    b = judge.check(G_S_PRIMARY, P, S, g)
    if b.verdict:
        return None
    return a, b


def _prop18(judge: Judge, P: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    gap = _gap(judge, P, S, g)
    if gap is None:
        return SKIP
    square = power_slice_product(P, g)
    t = P.ring.tables
    return Verdict(True, square == frozenset({t.zero}), f"|P_g P_g| = {len(square)}", gap)


def _coro3(judge: Judge, P: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    if len(S) != 1:
        return SKIP
    return _prop18(judge, P, S, g)


def _coro4(judge: Judge, P: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    gap = _gap(judge, P, S, g)
    if gap is None:
        return SKIP
    nil = grad_radical(zero(P.ring))
    inside = set(P.slice_indices(g).tolist()) <= nil.members
    return Verdict(True, inside, f"Grad(0)={nil}", gap)


def _nil_identity_slice(ring: GradedRing) -> np.ndarray:
    return grad_radical(zero(ring)).slice_indices(ring.grade_group.identity)


def _identity_gap_trials(fn: Callable[..., Verdict]) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        for inst in corpus.instances():
            if inst.mult_set.in_identity_component:
                yield Trial(f"{inst.instance_id} | g=e", partial(fn, P=inst.ideal, S=inst.mult_set))

    return trials


def _coro5(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    ring = P.ring
    e = ring.grade_group.identity
    gap = _gap(judge, P, S, e)
    if gap is None:
        return SKIP
    t = ring.tables
    nil = grad_radical(zero(ring))
    pe = P.slice_indices(e)
    inside = set(pe.tolist()) <= nil.members
    killed = bool((t.mul[np.ix_(pe, _nil_identity_slice(ring))] == t.zero).all())
    return Verdict(True, inside and killed, f"P_e ⊆ Grad(0): {inside}, P_e Grad(0)_e = 0: {killed}", gap)


def _thm8(judge: Judge, P: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    first = judge.g_weakly(P, S, g)
    second = judge.colon_criterion(P, S, g)
    third = judge.slicewise(P, S, g)
    return Verdict(
        True, first.verdict == second.verdict == third.verdict,
        f"(i)={first.verdict}, (ii)={second.verdict}, (iii)={third.verdict}", (first, second, third),
    )


def _annihilating_witness(ring: GradedRing, S: MultSet, left: np.ndarray, right: np.ndarray) -> Optional[RingElem]:
    t = ring.tables
    block = t.mul[np.ix_(left, right)]
    for s in S.indices:
        if (t.mul[s][block] == t.zero).all():
            return ring.elem(s)
    return None


def _prop19(judge: Judge, P: GradedIdeal, S: MultSet) -> Verdict:
    ring = P.ring
    gap = _gap(judge, P, S, ring.grade_group.identity)
    if gap is None:
        return SKIP
    s = _annihilating_witness(ring, S, P.slice_indices(ring.grade_group.identity), _nil_identity_slice(ring))
    return Verdict(True, s is not None, f"s={_fmt(ring, s)}", gap)


def _coro6(judge: Judge, P1: GradedIdeal, P2: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    ring = P1.ring
    e = ring.grade_group.identity
    if g != e:
        return SKIP
    gap1, gap2 = _gap(judge, P1, S, e), _gap(judge, P2, S, e)
    if gap1 is None or gap2 is None:
        return SKIP
    s = _annihilating_witness(ring, S, P1.slice_indices(e), P2.slice_indices(e))
    return Verdict(True, s is not None, f"s={_fmt(ring, s)}", gap1 + gap2)


def _thm9_i(judge: Judge, proj: Projection, P: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    a = judge.g_weakly(P, S, g)
    if not a.verdict:
        return SKIP
    fP, fS = _pushforward(judge, proj, P, S)
    if not is_disjoint(fP, fS):
        return Verdict(True, False, f"f(P)={fP} meets f(S)={fS}", (a,))
    b = judge.g_weakly(fP, fS, g)
    return Verdict(True, b.verdict, f"f(P)={fP}, f(S)={fS}", (a, b))


def _thm9_ii(judge: Judge, inc: Inclusion, I: GradedIdeal, S: MultSet, g: Grade) -> Verdict:
    fS = judge.image_set(inc.hom, S)
    if not is_disjoint(I, fS):
        return SKIP
    a = judge.g_weakly(I, fS, g)
    if not a.verdict:
        return SKIP
    pre = preimage_ideal(inc.hom, I)
    b = judge.g_weakly(pre, S, g)
    return Verdict(True, b.verdict, f"f^-1(I)={pre}", (a, b))


# ----------------------------------------------------------------------
# Example audits
# ----------------------------------------------------------------------


def _example_audit_trials(per_grade: bool) -> Callable[[Corpus], Iterator[Trial]]:
    def trials(corpus: Corpus) -> Iterator[Trial]:
        label = "Z_12[i] | P=(0) | S={1, 3, 9}" + (" | g=0" if per_grade else "")
        yield Trial(label, partial(_example_audit, per_grade=per_grade))

    return trials


def _example_audit(judge: Judge, per_grade: bool) -> Verdict:
    """The claim audited is that P = {0} is NOT (g-)S-primary in Z_12[i] for S = {1, 3, 9}."""
    ring = make_gaussian_quotient(12)
    P = zero(ring)
    S = closure(ring, [3])
    if per_grade:
        cert = judge.check(G_S_PRIMARY, P, S, ring.grade_group.identity)
    else:
        cert = judge.check(GRADED_S_PRIMARY, P, S)
    witness = _fmt(ring, cert.certificate.witness_s)
    detail = f"brute force verdict={cert.verdict}, witness s={witness}" if cert.verdict else "brute force agrees"
    return Verdict(True, not cert.verdict, detail, (cert,))


# ----------------------------------------------------------------------
# Registry
# ----------------------------------------------------------------------


def _entries() -> List[TheoremEntry]:
    per_grade_pairs = _ideal_pair_trials
    return [
        TheoremEntry("prop1", "S of units: weakly S-primary iff weakly primary", _over_instances(_prop1)),
        TheoremEntry("prop2", "P weakly S-primary iff Grad(P) weakly S-prime", _over_instances(_prop2)),
        TheoremEntry("thm1", "P weakly S-primary implies S^-1 P weakly primary", _over_instances(_thm1)),
        TheoremEntry("lem1", "Grad((P:s)) = Grad((P:s^n)) for the witness s and every n", _over_instances(_lem1)),
        TheoremEntry("prop3", "P weakly S-primary iff (P:s) weakly primary for some s", _over_instances(_prop3)),
        TheoremEntry("prop4", "regular S: weakly S-primary iff S^-1 P weakly primary and a dominating colon exists", _over_instances(_prop4)),
        TheoremEntry("thm2", "weakly S-primary iff S^-1 P weakly primary and its contraction is (P:s)", _over_instances(_thm2), "contraction reading"),
        TheoremEntry("thm2_stable_colon", "the s with contraction (P:s) has a stable colon, (P:s) = (P:s^inf)", _over_instances(_thm2_stable_colon), "contraction reading"),
        TheoremEntry("thm3", "weakly S-primary, weakly primary colon and the localization condition agree", _over_instances(_thm3)),
        TheoremEntry("prop5", "P weakly S-primary and I ∩ S nonempty imply P ∩ I weakly S-primary", _prop5_trials),
        TheoremEntry("rem2", "weakly S1-primary implies weakly S2-primary for S1 ⊆ S2", _chain_trials(_rem2, False, False)),
        TheoremEntry("prop6", "cofinal S1 ⊆ S2: weakly S2-primary implies weakly S1-primary", _chain_trials(_prop6, False, True)),
        TheoremEntry("prop7", "weakly S-primary iff weakly S*-primary", _over_instances(_prop7)),
        TheoremEntry("lem2", "Grad(P1) ∩ Grad(P2) = Grad(P1 ∩ P2) for weakly S-primary P1, P2", _ideal_pair_trials(_lem2)),
        TheoremEntry("prop8", "weakly S-primary ideals with one radical have weakly S-primary intersection", _ideal_pair_trials(_prop8)),
        TheoremEntry("lem3", "radicals of product ideals split componentwise", _lem3_trials),
        TheoremEntry("thm4i", "P1 weakly S1-primary iff P1 x R2 weakly S-primary", _thm4_trials("i")),
        TheoremEntry("thm4ii", "P2 weakly S2-primary iff R1 x P2 weakly S-primary", _thm4_trials("ii")),
        TheoremEntry("thm4iii", "P1 x P2 weakly S-primary implies both factors weakly S_i-primary", _thm4_trials("iii")),
        TheoremEntry("thm4iii_converse", "both factors weakly S_i-primary imply P1 x P2 weakly S-primary", _thm4_trials("iii_converse")),
        TheoremEntry("thm5", "P1 x P2 weakly S-primary iff one of the three component cases holds", _thm4_trials("thm5")),
        TheoremEntry("prop9_literal", "weakly S-primary iff sI ⊆ P or sJ ⊆ P whenever IJ ⊆ P", _over_instances(partial(_prop9, corrected=False))),
        TheoremEntry("prop9_corrected", "weakly S-primary iff sI ⊆ P or sJ ⊆ Grad(P) whenever 0 ≠ IJ ⊆ P", _over_instances(partial(_prop9, corrected=True)), "corrected"),
        TheoremEntry("coro1", "weakly S-primary iff the three-ideal product condition holds", _coro1_trials),
        TheoremEntry("prop10_i", "epimorphic image of a weakly S-primary ideal containing the kernel", _projection_trials(_prop10_i)),
        TheoremEntry("prop10_ii", "preimage under a monomorphism of a weakly f(S)-primary ideal", _inclusion_trials(_prop10_ii)),
        TheoremEntry("coro2_i", "P weakly S-primary implies P/I weakly S-bar-primary", _projection_trials(_prop10_i)),
        TheoremEntry("coro2_ii", "P weakly S-primary implies P ∩ R_e weakly S-primary in R_e", _coro2_ii_trials),
        TheoremEntry("coro2_iii", "P/I weakly S-bar-primary and I S-primary imply P S-primary", _projection_trials(partial(_coro2_iii, weakly=False))),
        TheoremEntry("coro2_iv", "P/I weakly S-bar-primary and I S-primary imply P weakly S-primary", _projection_trials(partial(_coro2_iii, weakly=True))),
        TheoremEntry("prop11_literal", "P, I weakly S-primary with I ⊆ P imply P + I weakly S-primary", _prop11_trials(True)),
        TheoremEntry("prop11_unrestricted", "P, I weakly S-primary with (P + I) ∩ S empty imply P + I weakly S-primary", _prop11_trials(False), "unrestricted"),
        TheoremEntry("lem4", "the maximal graded ideal over I avoiding S is graded primary", _over_instances(_lem4)),
        TheoremEntry("prop12", "{0} only weakly S-primary iff only S-primary iff domain with S^-1 R a graded field", _ring_set_trials(_prop12)),
        TheoremEntry("thm6", "weakly S-primary ideals all primary iff domain and S-primary ideals all primary", _ring_set_trials(_thm6)),
        TheoremEntry("thm7_exploratory", "chain rings: every disjoint graded ideal is weakly S-primary", _ring_set_trials(_thm7_probe, chain_only=True), "exploratory"),
        TheoremEntry("lem5", "weakly S-primary implies g-weakly S-primary for every g", _over_instances(_lem5)),
        TheoremEntry("prop13", "P g-weakly S-primary iff Grad(P) g-weakly S-prime", _over_graded_instances(_prop13)),
        TheoremEntry("prop14", "P g-weakly S-primary and I ∩ S nonempty imply P ∩ I g-weakly S-primary", _prop14_trials),
        TheoremEntry("rem3", "g-weakly S1-primary implies g-weakly S2-primary for S1 ⊆ S2 ⊆ R_e", _chain_trials(_rem3, True, False)),
        TheoremEntry("prop15", "cofinal S1 ⊆ S2 ⊆ R_e: g-weakly S2-primary implies g-weakly S1-primary", _chain_trials(_prop15, True, True)),
        TheoremEntry("prop16", "g-weakly S-primary iff g-weakly (S* ∩ R_e)-primary", _over_graded_instances(_prop16)),
        TheoremEntry("prop17", "g-weakly S-primary ideals with one radical have g-weakly S-primary intersection", per_grade_pairs(_prop17, per_grade=True)),
        TheoremEntry("prop18", "g-weakly but not g-S-primary implies P_g P_g = 0", _over_graded_instances(_prop18)),
        TheoremEntry("coro3", "S = {1}: g-weakly primary but not g-primary implies P_g P_g = 0", _over_graded_instances(_coro3)),
        TheoremEntry("coro4", "g-weakly but not g-S-primary implies P_g ⊆ Grad(0)", _over_graded_instances(_coro4)),
        TheoremEntry("coro5", "e-weakly but not e-S-primary implies P_e ⊆ Grad(0) and P_e Grad(0)_e = 0", _identity_gap_trials(_coro5)),
        TheoremEntry("thm8", "g-weakly S-primary, the colon criterion and the slice-ideal criterion agree", _over_graded_instances(_thm8)),
        TheoremEntry("prop19", "e-weakly but not e-S-primary implies s P_e Grad(0)_e = 0 for some s", _identity_gap_trials(_prop19)),
        TheoremEntry("coro6", "two e-gap ideals P, I have s P_e I_e = 0 for some s", per_grade_pairs(_coro6, per_grade=True)),
        TheoremEntry("thm9_i", "epimorphic image of a g-weakly S-primary ideal containing the kernel", _projection_trials(_thm9_i, identity_only=True)),
        TheoremEntry("thm9_ii", "preimage under a monomorphism of a g-weakly f(S)-primary ideal", _inclusion_trials(_thm9_ii, per_grade=True)),
        TheoremEntry("thm10_exploratory", "chain rings: every disjoint graded ideal is g-weakly S-primary for all g", _ring_set_trials(_thm10_probe, chain_only=True), "exploratory"),
        TheoremEntry("ex2_s_primary_audit", "(0) in Z_12[i] with S = {1, 3, 9} is not graded S-primary", _example_audit_trials(False), "audit"),
        TheoremEntry("ex5_s_primary_audit", "(0) in Z_12[i] with S = {1, 3, 9} is not 0-S-primary", _example_audit_trials(True), "audit"),
    ]


REGISTRY: Dict[str, TheoremEntry] = {entry.theorem_id: entry for entry in _entries()}


def run_theorem(theorem_id: str, corpus: Corpus, judge: Optional[Judge] = None) -> TheoremReport:
    """
    Evaluate one registry entry on every trial the corpus produces.

    Args:
        theorem_id: Registry key, e.g. "prop2" or "prop9_literal"
        corpus: Corpus built by ``build_corpus``
        judge: Shared memo cache; a fresh one when omitted

    Returns:
        Report with status verified, falsified or vacuous
    """
    entry = REGISTRY.get(theorem_id)
    if entry is None:
        raise UnknownTheoremError(f"Unknown theorem id: {theorem_id}")
    judge = judge or Judge()
    start = time.perf_counter()

    tested = nonvacuous = 0
    counterexample = None
    regimes: Dict[str, List[int]] = {}
    trials = tqdm(list(entry.trials(corpus)), desc=theorem_id, disable=not get_settings().progress, leave=False)
    for trial in trials:
        verdict = trial.evaluate(judge)
        tested += 1
        failed = verdict.nonvacuous and not verdict.holds
        if verdict.regime is not None:
            stats = regimes.setdefault(verdict.regime, [0, 0])
            stats[0] += 1
            stats[1] += int(failed)
        if not verdict.nonvacuous:
            continue
        nonvacuous += 1
        if failed and counterexample is None:
            counterexample = Counterexample(trial.instance_id, verdict.detail, verdict.evidence, trial)

    if counterexample is not None:
        status = STATUS_FALSIFIED
    elif nonvacuous == 0:
        status = STATUS_VACUOUS
    else:
        status = STATUS_VERIFIED
    report = TheoremReport(
        theorem_id=theorem_id,
        description=entry.description,
        label=entry.label,
        tested=tested,
        nonvacuous=nonvacuous,
        status=status,
        counterexample=counterexample,
        wall_time=time.perf_counter() - start,
        notes=[f"{name}: {n} instances, {bad} failures" for name, (n, bad) in sorted(regimes.items())],
    )
    logger.info(f"{theorem_id}: {status} (tested={tested}, nonvacuous={nonvacuous})")
    return report


def run_all(corpus: Corpus, theorem_ids: Optional[Iterable[str]] = None) -> List[TheoremReport]:
    """Reports for ``theorem_ids`` (all registry entries by default), ordered by id."""
    ids = sorted(theorem_ids) if theorem_ids is not None else sorted(REGISTRY)
    judge = Judge()
    return [run_theorem(theorem_id, corpus, judge) for theorem_id in ids]


def probe_chain_rings(corpus: Corpus) -> TheoremReport:
    """Exploratory finite analogue of the valuation-domain result on chain rings."""
    return run_theorem("thm7_exploratory", corpus)


def replay_report(report: TheoremReport) -> bool:
    """Re-evaluate a falsified report's counterexample from scratch and replay its certificates."""
    if report.counterexample is None:
        return report.status != STATUS_FALSIFIED
    verdict = report.counterexample.trial.evaluate(Judge())
    if not verdict.nonvacuous or verdict.holds:
        return False
    return all(e.replays() for e in verdict.evidence) and all(e.replays() for e in report.counterexample.evidence)
