"""
Localization of finite graded rings.

For a finite ring, S^-1 R is realized as R/K with K = { r : sr = 0 for some s ∈ S }.
The images of S are regular in R/K, and a regular element of a finite
commutative ring is a unit, so no formal fractions are needed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict

import numpy as np

from graded_ideals.errors import GradingError, RingMismatchError
from graded_ideals.ideal_lattice import GradedIdeal, is_graded_ideal
from graded_ideals.morphisms import GradedHom, image_ideal, preimage_ideal
from graded_ideals.mult_set import MultSet
from graded_ideals.ring_core import GradedRing, RingElem, quotient_ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalizedRing:
    """S^-1 R as the quotient R/K together with the localization map."""

    source: GradedRing
    mult_set: MultSet
    kernel: GradedIdeal
    ring: GradedRing
    localization_map: GradedHom
    inverses: Dict[int, int]    # source index of s -> local index of (s/1)^-1

    @property
    def order(self) -> int:
        return self.ring.order

    def fraction(self, r: RingElem, s: RingElem) -> RingElem:
        """r/s = image(r) · image(s)^-1."""
        s_index = self.source.index(s)
        if s_index not in self.mult_set.members:
            raise RingMismatchError(f"{self.source.format(s)} is not a denominator in {self.mult_set}")
        inverse = self.ring.elem(self.inverses[s_index])
        return self.ring.mul(self.localization_map(r), inverse)


def localize(ring: GradedRing, mult_set: MultSet) -> LocalizedRing:
    """S^-1 R for a multiplicative set S of h(R)."""
    if mult_set.ring is not ring:
        raise RingMismatchError(f"{mult_set} does not live in {ring.label}")
    t = ring.tables
    annihilated = (t.mul[mult_set.indices] == t.zero).any(axis=0)
    members = frozenset(np.flatnonzero(annihilated).tolist())
    if not is_graded_ideal(ring, members):
        raise GradingError(f"The S-torsion of {ring.label} is not a graded ideal")
    kernel = GradedIdeal(ring, members)

    local, projection = quotient_ring(ring, kernel)
    lt = local.tables
    inverses = {}
    for s in mult_set.indices:
        image = int(projection.values[s])
        row = np.flatnonzero(lt.mul[image] == lt.one)
        if not len(row):
            raise GradingError(f"{ring.format(ring.elem(s))} did not become a unit in {local.label}")
        inverses[int(s)] = int(row[0])
    logger.debug(f"Localized {ring.label} at {mult_set}: |K| = {kernel.size}, order {local.order}")
    return LocalizedRing(
        source=ring,
        mult_set=mult_set,
        kernel=kernel,
        ring=local,
        localization_map=projection,
        inverses=inverses,
    )


def extend_ideal(local: LocalizedRing, ideal: GradedIdeal) -> GradedIdeal:
    """S^-1 P: the ideal generated by the image of P."""
    return image_ideal(local.localization_map, ideal)


def contract_ideal(local: LocalizedRing, ideal: GradedIdeal) -> GradedIdeal:
    """Preimage of an ideal of S^-1 R under the localization map."""
    return preimage_ideal(local.localization_map, ideal)


def is_graded_field(ring: GradedRing) -> bool:
    """Every nonzero homogeneous element is a unit."""
    t = ring.tables
    nonzero = t.homogeneous[t.homogeneous != t.zero]
    return bool((t.mul[nonzero] == t.one).any(axis=1).all())


def is_graded_domain(ring: GradedRing) -> bool:
    """No homogeneous zero divisors."""
    t = ring.tables
    nonzero = t.homogeneous[t.homogeneous != t.zero]
    return bool((t.mul[np.ix_(nonzero, nonzero)] != t.zero).all())
