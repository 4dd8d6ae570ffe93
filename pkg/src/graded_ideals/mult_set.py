"""
Multiplicative subsets of h(R).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, FrozenSet, Iterable, List, Sequence, Union

import numpy as np

from graded_ideals.errors import MultiplicativeSetError, RingMismatchError
from graded_ideals.ideal_lattice import GradedIdeal
from graded_ideals.ring_core import GradedRing, RingElem

if TYPE_CHECKING:
    from graded_ideals.morphisms import GradedHom

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MultSet:
    """A multiplicatively closed subset of h(R) containing 1 and not 0."""

    ring: GradedRing
    members: FrozenSet[int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultSet):
            return NotImplemented
        return self.ring is other.ring and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members))

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def indices(self) -> np.ndarray:
        """Members in canonical element order (the witness search order)."""
        return np.array(sorted(self.members), dtype=np.int64)

    def elements(self) -> List[RingElem]:
        return [self.ring.elem(i) for i in self.indices]

    def contains(self, x: RingElem) -> bool:
        return self.ring.index(x) in self.members

    @cached_property
    def generators(self) -> List[RingElem]:
        """A canonical generating list, chosen greedily."""
        mul = self.ring.tables.mul
        one = self.ring.tables.one
        current = {one}
        gens = []
        for x in self.indices:
            x = int(x)
            if x in current:
                continue
            gens.append(self.ring.elem(x))
            current = _close(mul, current | {x}, one)
        return gens

    @property
    def in_identity_component(self) -> bool:
        e_slice = set(self.ring.tables.slices[self.ring.grade_group.identity].tolist())
        return self.members <= e_slice

    @cached_property
    def consists_of_units(self) -> bool:
        return all(self.ring.is_unit(x) for x in self.elements())

    @cached_property
    def consists_of_regular(self) -> bool:
        return all(self.ring.is_regular(x) for x in self.elements())

    def __str__(self) -> str:
        return "{" + ", ".join(self.ring.format(x) for x in self.elements()) + "}"

    def __repr__(self) -> str:
        return f"MultSet({self.ring.label}, {self})"


def _close(mul: np.ndarray, seeds: Iterable[int], one: int) -> FrozenSet[int]:
    members = {one} | set(seeds)
    frontier = list(members)
    gens = sorted(members)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = int(mul[x, g])
                if y not in members:
                    members.add(y)
                    fresh.append(y)
        frontier = fresh
    return frozenset(members)


def closure(ring: GradedRing, gens: Sequence[Union[RingElem, int, Sequence[int]]]) -> MultSet:
    """Multiplicative closure of homogeneous ``gens`` together with 1."""
    t = ring.tables
    seeds = []
    for g in gens:
        x = ring.element(g)
        if not ring.is_homogeneous(x):
            raise MultiplicativeSetError(f"Generator {ring.format(x)} of {ring.label} is not homogeneous")
        seeds.append(ring.index(x))
    members = _close(t.mul, seeds, t.one)
    if t.zero in members:
        raise MultiplicativeSetError(
            f"The closure of {[ring.format(ring.elem(s)) for s in seeds]} in {ring.label} reaches 0"
        )
    return MultSet(ring, members)


def from_members(ring: GradedRing, members: Iterable[int]) -> MultSet:
    """Wrap a set of indices, checking the multiplicative-set axioms."""
    members = frozenset(int(m) for m in members)
    t = ring.tables
    homogeneous = set(t.homogeneous.tolist())
    if t.one not in members or t.zero in members:
        raise MultiplicativeSetError(f"A multiplicative set of {ring.label} must contain 1 and not 0")
    if not members <= homogeneous:
        raise MultiplicativeSetError(f"A multiplicative set of {ring.label} must consist of homogeneous elements")
    if _close(t.mul, members, t.one) != members:
        raise MultiplicativeSetError(f"The given subset of {ring.label} is not multiplicatively closed")
    return MultSet(ring, members)


def unit_set(ring: GradedRing) -> MultSet:
    """All homogeneous units."""
    return from_members(ring, [int(x) for x in ring.tables.homogeneous if ring.is_unit(ring.elem(x))])


def is_disjoint(ideal: GradedIdeal, mult_set: MultSet) -> bool:
    if ideal.ring is not mult_set.ring:
        raise RingMismatchError(f"{ideal} and {mult_set} live in different rings")
    return not (ideal.members & mult_set.members)


def is_subset(s1: MultSet, s2: MultSet) -> bool:
    if s1.ring is not s2.ring:
        raise RingMismatchError(f"{s1} and {s2} live in different rings")
    return s1.members <= s2.members


def saturation_star(mult_set: MultSet) -> MultSet:
    """S* = { r ∈ h(R) : r/1 is a unit in S^-1 R }."""
    from graded_ideals.localization import localize

    ring = mult_set.ring
    local = localize(ring, mult_set)
    image = local.localization_map
    members = [
        int(x) for x in ring.tables.homogeneous
        if local.ring.is_unit(image(ring.elem(x)))
    ]
    return from_members(ring, members)


def restrict_to_identity(mult_set: MultSet) -> MultSet:
    """S ∩ R_e."""
    ring = mult_set.ring
    e_slice = set(ring.tables.slices[ring.grade_group.identity].tolist())
    return MultSet(ring, mult_set.members & frozenset(e_slice))


def image(f: GradedHom, mult_set: MultSet) -> MultSet:
    """f(S), closed in the target (the closure check rejects sets that reach 0)."""
    if mult_set.ring is not f.source:
        raise RingMismatchError(f"{mult_set} does not live in the source of {f.name}")
    return closure(f.target, [f(x) for x in mult_set.elements()])


def product_set(ring: GradedRing, s1: MultSet, s2: MultSet) -> MultSet:
    """S1 × S2 inside the direct product ``ring`` = R1 × R2."""
    if ring.factors is None:
        raise RingMismatchError(f"{ring.label} is not a direct product")
    left, right = ring.factors
    if s1.ring is not left or s2.ring is not right:
        raise RingMismatchError(f"Factor sets do not belong to {left.label} and {right.label}")
    members = [
        ring.index(ring.element(a.coords + b.coords)) for a in s1.elements() for b in s2.elements()
    ]
    return from_members(ring, members)
