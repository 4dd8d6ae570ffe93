"""
Graded ideals of finite graded rings.

An ideal is stored as the frozen set of element indices it realizes (see
``GradedRing.tables``), so ideal equality is equality of realized sets. Generators
are recomputed canonically from the realized set whenever they are displayed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, FrozenSet, Iterable, List, Sequence, Union

import numpy as np

from graded_ideals.config import get_settings
from graded_ideals.errors import DisjointnessError, GradedAlgebraError, GradingError, RingMismatchError
from graded_ideals.ring_core import Grade, GradedRing, RingElem

if TYPE_CHECKING:
    from graded_ideals.mult_set import MultSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GradedIdeal:
    """A graded ideal of ``ring``, realized as a set of element indices."""

    ring: GradedRing
    members: FrozenSet[int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        return self.ring is other.ring and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.ring.tables.order, dtype=bool)
        mask[list(self.members)] = True
        return mask

    @cached_property
    def indices(self) -> np.ndarray:
        return np.array(sorted(self.members), dtype=np.int64)

    @property
    def is_proper(self) -> bool:
        return self.size < self.ring.tables.order

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    def contains(self, x: RingElem) -> bool:
        return self.ring.index(x) in self.members

    def issubset(self, other: GradedIdeal) -> bool:
        _same_ring(self, other)
        return self.members <= other.members

    def elements(self) -> List[RingElem]:
        return [self.ring.elem(i) for i in self.indices]

    def slice_indices(self, g: Grade) -> np.ndarray:
        """Indices of P_g = P ∩ R_g."""
        component = self.ring.tables.slices[self.ring.grade_group.normalize(g)]
        return component[self.mask[component]]

    @cached_property
    def generators(self) -> List[RingElem]:
        """Homogeneous generators, chosen greedily in canonical element order."""
        ring = self.ring
        t = ring.tables
        current: FrozenSet[int] = frozenset({t.zero})
        gens = []
        for x in t.homogeneous:
            if current == self.members:
                break
            x = int(x)
            if x in self.members and x not in current:
                current = _sum_sets(ring, current, _principal_members(ring, x))
                gens.append(ring.elem(x))
        return gens

    @cached_property
    def radical(self) -> GradedIdeal:
        return _compute_radical(self)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.ring.format(g) for g in self.generators) + ")"

    def __repr__(self) -> str:
        return f"GradedIdeal({self.ring.label}, {self}, size={self.size})"


def _same_ring(a: GradedIdeal, b: GradedIdeal) -> None:
    if a.ring is not b.ring:
        raise RingMismatchError(f"Ideals of {a.ring.label} and {b.ring.label} cannot be combined")


def _from_indices(ring: GradedRing, indices: Iterable[int]) -> GradedIdeal:
    return GradedIdeal(ring, frozenset(int(i) for i in indices))


def _sum_sets(ring: GradedRing, a: FrozenSet[int], b: FrozenSet[int]) -> FrozenSet[int]:
    add = ring.tables.add
    sums = add[np.ix_(sorted(a), sorted(b))]
    return frozenset(np.unique(sums).tolist())


def _additive_closure(ring: GradedRing, seeds: Iterable[int]) -> FrozenSet[int]:
    """Additive subgroup generated by ``seeds``."""
    t = ring.tables
    current: FrozenSet[int] = frozenset({t.zero})
    for s in sorted(set(int(x) for x in seeds)):
        if s in current:
            continue
        multiples = {t.zero}
        x = s
        while x not in multiples:
            multiples.add(x)
            x = int(t.add[x, s])
        current = _sum_sets(ring, current, frozenset(multiples))
    return current


def _principal_members(ring: GradedRing, x: int) -> FrozenSet[int]:
    # Rx is already closed under addition
    return frozenset(np.unique(ring.tables.mul[x]).tolist())


# ----------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------


def ideal_from_generators(ring: GradedRing, gens: Sequence[Union[RingElem, int, Sequence[int]]]) -> GradedIdeal:
    """Smallest graded ideal containing the homogeneous elements ``gens``."""
    members: FrozenSet[int] = frozenset({ring.tables.zero})
    for g in gens:
        x = ring.element(g)
        if not ring.is_homogeneous(x):
            raise GradingError(f"Generator {ring.format(x)} of {ring.label} is not homogeneous")
        members = _sum_sets(ring, members, _principal_members(ring, ring.index(x)))
    return GradedIdeal(ring, members)


def principal(ring: GradedRing, x: Union[RingElem, int, Sequence[int]]) -> GradedIdeal:
    return ideal_from_generators(ring, [x])


def zero(ring: GradedRing) -> GradedIdeal:
    return GradedIdeal(ring, frozenset({ring.tables.zero}))


def whole(ring: GradedRing) -> GradedIdeal:
    return GradedIdeal(ring, frozenset(range(ring.tables.order)))


def ideal_from_elements(ring: GradedRing, elements: Iterable[RingElem]) -> GradedIdeal:
    """Wrap a realized set, verifying it is a graded ideal."""
    members = frozenset(ring.index(x) for x in elements)
    if not _is_graded_ideal_indices(ring, members):
        raise GradingError(f"The given subset of {ring.label} is not a graded ideal")
    return GradedIdeal(ring, members)


def is_graded_ideal(ring: GradedRing, subset: Iterable[Union[RingElem, int]]) -> bool:
    """True iff ``subset`` is an ideal and contains the components of its members."""
    members = frozenset(ring.index(x) if isinstance(x, RingElem) else int(x) for x in subset)
    return _is_graded_ideal_indices(ring, members)


def _is_graded_ideal_indices(ring: GradedRing, members: FrozenSet[int]) -> bool:
    t = ring.tables
    if t.zero not in members:
        return False
    idx = np.array(sorted(members), dtype=np.int64)
    mask = np.zeros(t.order, dtype=bool)
    mask[idx] = True
    if not mask[t.add[np.ix_(idx, idx)]].all():
        return False
    if not mask[t.mul[:, idx]].all():
        return False
    return bool(mask[t.components[idx]].all())


# ----------------------------------------------------------------------
# Radical and colon ideals
# ----------------------------------------------------------------------


def _compute_radical(ideal: GradedIdeal) -> GradedIdeal:
    ring = ideal.ring
    t = ring.tables
    cap = get_settings().radical_power_cap or t.order

    homogeneous = t.homogeneous.astype(np.int64)
    hit = ideal.mask[homogeneous].copy()
    power = homogeneous.copy()
    for _ in range(1, cap):
        if hit.all():
            break
        power = t.mul[power, homogeneous]
        hit |= ideal.mask[power]

    rad_mask = np.zeros(t.order, dtype=bool)
    rad_mask[homogeneous[hit]] = True
    rad_mask[t.zero] = True
    members = np.flatnonzero(rad_mask[t.components].all(axis=1))
    radical = _from_indices(ring, members)
    if not _is_graded_ideal_indices(ring, radical.members):
        raise GradedAlgebraError(f"Grad({ideal}) in {ring.label} is not a graded ideal")
    return radical


def grad_radical(ideal: GradedIdeal) -> GradedIdeal:
    """Grad(P): elements whose homogeneous components all have a power in P.

    Exponents are searched up to ``radical_power_cap`` (default |R|).
    """
    return ideal.radical


def colon_elem(ideal: GradedIdeal, s: RingElem) -> GradedIdeal:
    """(P : s) = { x : sx ∈ P }."""
    ring = ideal.ring
    members = np.flatnonzero(ideal.mask[ring.tables.mul[ring.index(s)]])
    colon = _from_indices(ring, members)
    if ring.is_homogeneous(s) and not _is_graded_ideal_indices(ring, colon.members):
        raise GradedAlgebraError(f"({ideal} : {ring.format(s)}) is not graded")
    return colon


def colon_stable(ideal: GradedIdeal, s: RingElem) -> GradedIdeal:
    """The limit of the chain (P : s) ⊆ (P : s^2) ⊆ ..."""
    ring = ideal.ring
    if not ring.is_homogeneous(s):
        raise GradingError(f"colon_stable needs a homogeneous element, got {ring.format(s)}")
    current = colon_elem(ideal, s)
    power = s
    for _ in range(ring.tables.order):
        power = ring.mul(power, s)
        following = colon_elem(ideal, power)
        if following == current:
            break
        current = following
    return current


def colon_graded_slice(ideal: GradedIdeal, a: RingElem, g: Union[int, Sequence[int]]) -> FrozenSet[RingElem]:
    """(P :_{R_g} a) = { r ∈ R_g : ra ∈ P }."""
    ring = ideal.ring
    return frozenset(ring.elem(i) for i in colon_slice_indices(ideal, ring.index(a), ring.grade_group.normalize(g)))


def colon_slice_indices(ideal: GradedIdeal, a: int, g: Grade) -> np.ndarray:
    t = ideal.ring.tables
    component = t.slices[g]
    return component[ideal.mask[t.mul[a, component]]]


# ----------------------------------------------------------------------
# Ideal arithmetic
# ----------------------------------------------------------------------


def ideal_sum(p: GradedIdeal, i: GradedIdeal) -> GradedIdeal:
    _same_ring(p, i)
    return GradedIdeal(p.ring, _sum_sets(p.ring, p.members, i.members))


def ideal_product(p: GradedIdeal, i: GradedIdeal) -> GradedIdeal:
    """Ideal generated by all pairwise products."""
    _same_ring(p, i)
    products = p.ring.tables.mul[np.ix_(p.indices, i.indices)]
    return GradedIdeal(p.ring, _additive_closure(p.ring, np.unique(products).tolist()))


def ideal_intersection(p: GradedIdeal, i: GradedIdeal) -> GradedIdeal:
    _same_ring(p, i)
    return GradedIdeal(p.ring, p.members & i.members)


def slice_elements(ideal: GradedIdeal, g: Union[int, Sequence[int]]) -> List[RingElem]:
    """P_g as ring elements."""
    return [ideal.ring.elem(i) for i in ideal.slice_indices(ideal.ring.grade_group.normalize(g))]


def power_slice_product(ideal: GradedIdeal, g: Union[int, Sequence[int]]) -> FrozenSet[int]:
    """The set P_g · P_g of pairwise products (as indices)."""
    pg = ideal.slice_indices(ideal.ring.grade_group.normalize(g))
    return frozenset(np.unique(ideal.ring.tables.mul[np.ix_(pg, pg)]).tolist())


def product_ideal(ring: GradedRing, p1: GradedIdeal, p2: GradedIdeal) -> GradedIdeal:
    """P1 × P2 inside the direct product ``ring`` = R1 × R2."""
    if ring.factors is None:
        raise RingMismatchError(f"{ring.label} is not a direct product")
    left, right = ring.factors
    if p1.ring is not left or p2.ring is not right:
        raise RingMismatchError(f"Factor ideals do not belong to {left.label} and {right.label}")
    members = {
        ring.index(ring.element(x.coords + y.coords)) for x in p1.elements() for y in p2.elements()
    }
    return GradedIdeal(ring, frozenset(members))


# ----------------------------------------------------------------------
# Lattice
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _enumerate(ring: GradedRing) -> tuple:
    t = ring.tables
    principals = sorted(
        {_principal_members(ring, int(x)) for x in t.homogeneous},
        key=lambda m: (len(m), sorted(m)),
    )
    found = {frozenset({t.zero})} | set(principals)
    frontier = list(found)
    while frontier:
        fresh = []
        for members in frontier:
            for p in principals:
                if p <= members:
                    continue
                joined = _sum_sets(ring, members, p)
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
        frontier = fresh
    ordered = sorted(found, key=lambda m: (len(m), sorted(m)))
    logger.debug(f"{ring.label}: {len(ordered)} graded ideals")
    return tuple(GradedIdeal(ring, m) for m in ordered)


def enumerate_graded_ideals(ring: GradedRing) -> List[GradedIdeal]:
    """Every graded ideal exactly once, ordered by (size, members).

    Joins of homogeneous principal ideals; cost is O(#ideals * |h(R)| * |R|^2)
    in the worst case.
    """
    return list(_enumerate(ring))


def maximal_disjoint_ideal(ring: GradedRing, ideal: GradedIdeal, mult_set: MultSet) -> GradedIdeal:
    """A graded ideal P ⊇ I maximal among those disjoint from S."""
    if ideal.ring is not ring or mult_set.ring is not ring:
        raise RingMismatchError(f"Ideal and multiplicative set must both belong to {ring.label}")
    if ideal.members & mult_set.members:
        raise DisjointnessError(f"{ideal} meets the multiplicative set {mult_set}")
    candidates = [
        p for p in enumerate_graded_ideals(ring)
        if ideal.members <= p.members and not (p.members & mult_set.members)
    ]
    # I itself is always a candidate; the largest candidate cannot sit strictly inside another
    return min(candidates, key=lambda q: (-q.size, sorted(q.members)))
