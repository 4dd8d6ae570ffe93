"""
Graded ring homomorphisms between finite graded rings.
"""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Callable, List, Optional, Sequence, Union

import numpy as np

from graded_ideals.errors import HomomorphismError, RingMismatchError
from graded_ideals.ideal_lattice import GradedIdeal, ideal_from_generators
from graded_ideals.ring_core import GradedRing, RingElem, identity_component_ring, quotient_ring

logger = logging.getLogger(__name__)


class GradedHom:
    """A unital, grade-preserving ring homomorphism, stored as an index table."""

    def __init__(self, source: GradedRing, target: GradedRing, values: np.ndarray, name: Optional[str] = None):
        """
        Args:
            source: Domain ring
            target: Codomain ring (same grade group)
            values: values[i] is the target index of source element i
            name: Display name
        """
        if source.grade_group != target.grade_group:
            raise RingMismatchError(f"{source.label} and {target.label} are graded by different groups")
        self.source = source
        self.target = target
        self.values = np.asarray(values, dtype=np.int64)
        self.name = name or f"{source.label} -> {target.label}"
        self._validate()

    @classmethod
    def from_function(
        cls,
        source: GradedRing,
        target: GradedRing,
        fn: Callable[[RingElem], RingElem],
        name: Optional[str] = None,
    ) -> GradedHom:
        values = [target.index(fn(source.elem(i))) for i in range(source.tables.order)]
        return cls(source, target, np.array(values, dtype=np.int64), name=name)

    def _validate(self) -> None:
        s, t = self.source.tables, self.target.tables
        v = self.values
        if v.shape != (s.order,):
            raise HomomorphismError(f"{self.name}: value table has the wrong shape")
        if v[s.one] != t.one:
            raise HomomorphismError(f"{self.name}: 1 is not sent to 1")
        if not np.array_equal(v[s.add], t.add[v[:, None], v[None, :]]):
            raise HomomorphismError(f"{self.name}: map is not additive")
        if not np.array_equal(v[s.mul], t.mul[v[:, None], v[None, :]]):
            raise HomomorphismError(f"{self.name}: map is not multiplicative")
        for g, component in s.slices.items():
            image = v[component]
            if not np.isin(image, t.slices[g]).all():
                raise HomomorphismError(f"{self.name}: R_{g} is not sent into R'_{g}")

    def __call__(self, x: RingElem) -> RingElem:
        return self.target.elem(self.values[self.source.index(x)])

    @cached_property
    def kernel(self) -> GradedIdeal:
        members = np.flatnonzero(self.values == self.target.tables.zero)
        return GradedIdeal(self.source, frozenset(members.tolist()))

    def __repr__(self) -> str:
        return f"GradedHom({self.name})"


def make_hom(
    source: GradedRing,
    target: GradedRing,
    basis_images: Sequence[Union[RingElem, int, Sequence[int]]],
    name: Optional[str] = None,
) -> GradedHom:
    """
    Extend images of the additive basis linearly and validate the result.

    Args:
        source: Domain ring
        target: Codomain ring
        basis_images: Image of each basis vector of ``source``

    Returns:
        The validated homomorphism
    """
    if len(basis_images) != len(source.moduli):
        raise HomomorphismError(
            f"{source.label} has {len(source.moduli)} basis vectors, got {len(basis_images)} images"
        )
    images = [target.element(b) for b in basis_images]
    for k, (m, b) in enumerate(zip(source.moduli, images)):
        if target.mul(target.element(m), b) != target.zero:
            raise HomomorphismError(f"Image of b{k} is not killed by its additive order {m}")

    def linear(x: RingElem) -> RingElem:
        acc = target.zero
        for c, b in zip(x.coords, images):
            acc = target.add(acc, target.mul(target.element(c), b))
        return acc

    # on quotient carriers the additivity check also rejects images that do not kill the reduced part
    return GradedHom.from_function(source, target, linear, name=name)


def projection(ring: GradedRing, ideal: GradedIdeal) -> GradedHom:
    """R -> R/I."""
    return quotient_ring(ring, ideal)[1]


def inclusion(ring: GradedRing) -> GradedHom:
    """R_e -> R."""
    return identity_component_ring(ring)[1]


def factor_projection(ring: GradedRing, which: int) -> GradedHom:
    """R1 × R2 -> R_which (which is 0 or 1)."""
    if ring.factors is None:
        raise RingMismatchError(f"{ring.label} is not a direct product")
    left, right = ring.factors
    n1 = len(left.moduli)
    if which == 0:
        return GradedHom.from_function(ring, left, lambda x: left.element(x.coords[:n1]), name=f"{ring.label} -> {left.label}")
    return GradedHom.from_function(ring, right, lambda x: right.element(x.coords[n1:]), name=f"{ring.label} -> {right.label}")


def image_ideal(f: GradedHom, ideal: GradedIdeal) -> GradedIdeal:
    """Ideal generated by f(P); equal to the set image when f is onto."""
    if ideal.ring is not f.source:
        raise RingMismatchError(f"{ideal} does not live in the source of {f.name}")
    return ideal_from_generators(f.target, [f(g) for g in ideal.generators])


def preimage_ideal(f: GradedHom, ideal: GradedIdeal) -> GradedIdeal:
    if ideal.ring is not f.target:
        raise RingMismatchError(f"{ideal} does not live in the target of {f.name}")
    members = np.flatnonzero(ideal.mask[f.values])
    return GradedIdeal(f.source, frozenset(members.tolist()))


def is_epi(f: GradedHom) -> bool:
    return len(np.unique(f.values)) == f.target.tables.order


def is_mono(f: GradedHom) -> bool:
    return f.kernel.is_zero


def set_image(f: GradedHom, ideal: GradedIdeal) -> List[RingElem]:
    """The plain set f(P), in canonical order."""
    return [f.target.elem(i) for i in np.unique(f.values[ideal.indices])]
