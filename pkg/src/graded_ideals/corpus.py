"""
Corpus of small graded rings, ideals, multiplicative sets and homomorphisms
for the theorem suite.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

from graded_ideals.errors import GradedAlgebraError, MultiplicativeSetError
from graded_ideals.ideal_lattice import GradedIdeal, enumerate_graded_ideals
from graded_ideals.morphisms import GradedHom, inclusion, projection
from graded_ideals.mult_set import MultSet, closure, is_disjoint
from graded_ideals.ring_core import (
    GradedRing,
    GradeGroup,
    direct_product,
    make_cyclic_graded,
    make_gaussian_quotient,
    make_poly_quotient,
)

logger = logging.getLogger(__name__)

# (kind, n): "cyclic" Z_n, "cyclic_z2" Z_n with the Z_2 grading concentrated in degree 0,
# "gaussian" Z_n[i], "dual" Z_n[x]/(x^2)
RingRecipe = Tuple[str, int]


@dataclass(frozen=True)
class CorpusConfig:
    name: str
    rings: Tuple[RingRecipe, ...] = ()
    products: Tuple[Tuple[RingRecipe, RingRecipe], ...] = ()
    max_set_generators: int = 2


_SMALL_RINGS: Tuple[RingRecipe, ...] = (
    ("cyclic", 4), ("cyclic", 5), ("cyclic", 12), ("gaussian", 12), ("dual", 4),
)
_DEFAULT_RINGS: Tuple[RingRecipe, ...] = (
    ("cyclic", 4), ("cyclic", 6), ("cyclic", 8), ("cyclic", 9), ("cyclic", 12), ("cyclic", 30),
    ("gaussian", 4), ("gaussian", 6), ("gaussian", 12),
    ("dual", 4), ("dual", 12),
    ("cyclic", 5), ("cyclic", 7),
)
_DEFAULT_PRODUCTS: Tuple[Tuple[RingRecipe, RingRecipe], ...] = (
    (("cyclic", 12), ("cyclic", 2)),
    (("cyclic", 4), ("cyclic", 6)),
    (("gaussian", 4), ("cyclic_z2", 2)),
)

CORPUS_PRESETS: Dict[str, CorpusConfig] = {
    "small": CorpusConfig(
        name="small",
        rings=_SMALL_RINGS,
        products=((("cyclic", 12), ("cyclic", 2)),),
    ),
    "default": CorpusConfig(name="default", rings=_DEFAULT_RINGS, products=_DEFAULT_PRODUCTS),
    "large": CorpusConfig(
        name="large",
        rings=_DEFAULT_RINGS + (("cyclic", 16), ("cyclic", 18), ("gaussian", 8), ("dual", 8)),
        products=_DEFAULT_PRODUCTS + ((("cyclic", 8), ("cyclic", 9)), (("dual", 4), ("cyclic_z2", 3))),
    ),
}


def make_ring(recipe: RingRecipe) -> GradedRing:
    kind, n = recipe
    if kind == "cyclic":
        return make_cyclic_graded(n)
    if kind == "cyclic_z2":
        return make_cyclic_graded(n, GradeGroup.cyclic(2))
    if kind == "gaussian":
        return make_gaussian_quotient(n)
    if kind == "dual":
        return make_poly_quotient(n, [0, 0, 1], 1)
    raise GradedAlgebraError(f"Unknown ring recipe {recipe}")


def multiplicative_closures(ring: GradedRing, max_generators: int) -> List[MultSet]:
    """Distinct closures of at most ``max_generators`` nonzero homogeneous elements."""
    t = ring.tables
    candidates = [int(x) for x in t.homogeneous if x != t.zero and x != t.one]
    found = {closure(ring, [])}
    for k in range(1, max_generators + 1):
        for gens in itertools.combinations(candidates, k):
            try:
                found.add(closure(ring, [ring.elem(g) for g in gens]))
            except MultiplicativeSetError:
                continue
    return sorted(found, key=lambda s: (len(s), sorted(s.members)))


@dataclass
class RingEntry:
    ring: GradedRing
    ideals: List[GradedIdeal]
    sets: List[MultSet]

    @property
    def label(self) -> str:
        return self.ring.label

    @cached_property
    def proper_ideals(self) -> List[GradedIdeal]:
        return [p for p in self.ideals if p.is_proper]

    @cached_property
    def identity_sets(self) -> List[MultSet]:
        """The sets contained in R_e."""
        return [s for s in self.sets if s.in_identity_component]

    @cached_property
    def trivial_set(self) -> MultSet:
        return self.sets[0]

    def disjoint_pairs(self) -> Iterator[Tuple[GradedIdeal, MultSet]]:
        for p in self.proper_ideals:
            for s in self.sets:
                if is_disjoint(p, s):
                    yield p, s


def ring_entry(ring: GradedRing, max_generators: int) -> RingEntry:
    return RingEntry(
        ring=ring,
        ideals=enumerate_graded_ideals(ring),
        sets=multiplicative_closures(ring, max_generators),
    )


@dataclass
class ProductEntry:
    entry: RingEntry
    left: RingEntry
    right: RingEntry


@dataclass
class Projection:
    """R -> R/I for a proper nonzero graded ideal I."""

    entry: RingEntry
    kernel: GradedIdeal
    hom: GradedHom


@dataclass
class Inclusion:
    """R_e -> R for a ring with more than one nonzero component."""

    component: RingEntry
    entry: RingEntry
    hom: GradedHom


@dataclass(frozen=True)
class CorpusInstance:
    instance_id: str
    ring: GradedRing
    ideal: GradedIdeal
    mult_set: MultSet
    second_ideal: Optional[GradedIdeal] = None
    second_set: Optional[MultSet] = None

    @property
    def disjoint(self) -> bool:
        return is_disjoint(self.ideal, self.mult_set)


def instance_id(ring: GradedRing, ideal: GradedIdeal, mult_set: Optional[MultSet] = None, *extra: object) -> str:
    parts = [ring.label, f"P={ideal}"]
    if mult_set is not None:
        parts.append(f"S={mult_set}")
    parts.extend(str(e) for e in extra)
    return " | ".join(parts)


@dataclass
class Corpus:
    config: CorpusConfig
    rings: List[RingEntry] = field(default_factory=list)
    products: List[ProductEntry] = field(default_factory=list)
    projections: List[Projection] = field(default_factory=list)
    inclusions: List[Inclusion] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.config.name

    def find(self, label: str) -> RingEntry:
        for entry in self.rings:
            if entry.label == label:
                return entry
        raise KeyError(f"No ring {label} in the {self.name} corpus")

    def instances(self) -> List[CorpusInstance]:
        """Every (R, P, S) with P proper and P ∩ S = ∅, in corpus order."""
        return [
            CorpusInstance(instance_id(entry.ring, p, s), entry.ring, p, s)
            for entry in self.rings
            for p, s in entry.disjoint_pairs()
        ]


def build_corpus(config: CorpusConfig) -> Corpus:
    """
    Build every ring of ``config`` with its ideal lattice, multiplicative
    closures, quotient projections and component inclusions.

    Args:
        config: Preset or custom corpus description

    Returns:
        Corpus; an empty config gives an empty corpus
    """
    built: Dict[RingRecipe, RingEntry] = {}

    def entry_for(recipe: RingRecipe) -> RingEntry:
        if recipe not in built:
            built[recipe] = ring_entry(make_ring(recipe), config.max_set_generators)
        return built[recipe]

    corpus = Corpus(config=config)
    for recipe in config.rings:
        corpus.rings.append(entry_for(recipe))
    for left_recipe, right_recipe in config.products:
        left, right = entry_for(left_recipe), entry_for(right_recipe)
        product = ring_entry(direct_product(left.ring, right.ring), config.max_set_generators)
        corpus.products.append(ProductEntry(entry=product, left=left, right=right))
        corpus.rings.append(product)

    for entry in corpus.rings:
        for ideal in entry.proper_ideals:
            if ideal.is_zero:
                continue
            corpus.projections.append(Projection(entry=entry, kernel=ideal, hom=projection(entry.ring, ideal)))
        if entry.ring.grade_group.order > 1:
            hom = inclusion(entry.ring)
            if hom.source is not entry.ring:
                component = ring_entry(hom.source, config.max_set_generators)
                corpus.inclusions.append(Inclusion(component=component, entry=entry, hom=hom))

    logger.info(
        f"Built {config.name} corpus: {len(corpus.rings)} rings, {len(corpus.projections)} projections, "
        f"{len(corpus.inclusions)} inclusions"
    )
    return corpus
