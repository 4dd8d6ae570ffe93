"""
Finite graded commutative rings.

Every ring is realized over an explicit additive basis: an element is a
coordinate vector, coordinate ``k`` living in ``Z_{moduli[k]}``, and each basis
vector carries a grade from a finite abelian ``GradeGroup``. Multiplication is
given by structure constants on basis pairs. Quotient rings keep the parent's
coordinates and add a per-grade coset reduction, so that equality of elements is
always equality of (canonical) coordinate vectors.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from graded_ideals.config import get_settings
from graded_ideals.errors import GradingError, RingMismatchError, RingTooLargeError

if TYPE_CHECKING:
    from graded_ideals.ideal_lattice import GradedIdeal
    from graded_ideals.morphisms import GradedHom

logger = logging.getLogger(__name__)

Grade = Tuple[int, ...]
Coords = Tuple[int, ...]
Reduction = Mapping[Grade, Mapping[Coords, Coords]]


@dataclass(frozen=True)
class GradeGroup:
    """Direct product of cyclic groups, written additively."""

    cyclic_orders: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.cyclic_orders:
            raise GradingError("A grade group needs at least one cyclic factor")
        if any(n < 1 for n in self.cyclic_orders):
            raise GradingError(f"Cyclic orders must be >= 1, got {self.cyclic_orders}")

    @classmethod
    def trivial(cls) -> GradeGroup:
        return cls((1,))

    @classmethod
    def cyclic(cls, n: int) -> GradeGroup:
        return cls((n,))

    @property
    def identity(self) -> Grade:
        return tuple(0 for _ in self.cyclic_orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders)

    def elements(self) -> List[Grade]:
        return [tuple(g) for g in itertools.product(*(range(n) for n in self.cyclic_orders))]

    def contains(self, g: Sequence[int]) -> bool:
        return len(g) == len(self.cyclic_orders) and all(
            0 <= r < n for r, n in zip(g, self.cyclic_orders)
        )

    def normalize(self, g: Union[int, Sequence[int]]) -> Grade:
        """Accept an int (single-factor groups) or a residue sequence."""
        if isinstance(g, int):
            if len(self.cyclic_orders) != 1:
                raise GradingError(f"Grade {g} is ambiguous in a group with {len(self.cyclic_orders)} factors")
            g = (g,)
        if len(g) != len(self.cyclic_orders):
            raise GradingError(f"Grade {tuple(g)} does not belong to Z{self.cyclic_orders}")
        return tuple(r % n for r, n in zip(g, self.cyclic_orders))

    def add(self, g: Grade, h: Grade) -> Grade:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.cyclic_orders))

    def neg(self, g: Grade) -> Grade:
        return tuple((-a) % n for a, n in zip(g, self.cyclic_orders))

    def scale(self, k: int, g: Grade) -> Grade:
        return tuple((k * a) % n for a, n in zip(g, self.cyclic_orders))

    def element_order(self, g: Grade) -> int:
        return math.lcm(*(n // math.gcd(a, n) for a, n in zip(g, self.cyclic_orders)))

    def __str__(self) -> str:
        if self.cyclic_orders == (1,):
            return "trivial"
        return " x ".join(f"Z_{n}" for n in self.cyclic_orders)


@dataclass(frozen=True, order=True)
class RingElem:
    """An element of a GradedRing, identified by ring label and canonical coordinates."""

    ring_id: str
    coords: Coords


@dataclass(frozen=True)
class RingTables:
    """Dense index-level view of an enumerable ring.

    Elements are indexed by their position in the canonical (lexicographic)
    coordinate order; index 0 is always the zero element.
    """

    elements: Tuple[Coords, ...]
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    grades: Tuple[Grade, ...]
    components: np.ndarray      # (N, |G|): index of the g-component of x
    homogeneous: np.ndarray     # sorted indices of h(R)
    slices: Dict[Grade, np.ndarray]

    @property
    def order(self) -> int:
        return len(self.elements)

    def grade_position(self, g: Grade) -> int:
        return self.grades.index(g)


class GradedRing:
    """A finite commutative ring with identity, graded by a finite abelian group."""

    def __init__(
        self,
        label: str,
        kind: str,
        grade_group: GradeGroup,
        moduli: Sequence[int],
        basis_grades: Sequence[Grade],
        structure: Sequence[Sequence[Coords]],
        one: Coords,
        reduction: Optional[Reduction] = None,
        basis_names: Optional[Sequence[str]] = None,
        factors: Optional[Tuple[GradedRing, GradedRing]] = None,
        params: Optional[Mapping[str, object]] = None,
    ):
        """
        Build and validate a graded ring.

        Args:
            label: Human-readable ring identifier, also used as RingElem.ring_id
            kind: One of "cyclic", "poly_quotient", "product", "quotient", "component"
            grade_group: Grading group G
            moduli: Additive order of each basis vector
            basis_grades: Grade of each basis vector
            structure: structure[i][j] is the coordinate vector of b_i * b_j
            one: Coordinates of the identity
            reduction: Per-grade map from raw grade coordinates to canonical coset
                representatives (quotient rings only)
            basis_names: Display names of the basis vectors
            factors: The two factors when the ring is a direct product
            params: Construction parameters, kept for reports
        """
        self.label = label
        self.kind = kind
        self.grade_group = grade_group
        self.moduli: Tuple[int, ...] = tuple(int(m) for m in moduli)
        self.basis_grades: Tuple[Grade, ...] = tuple(grade_group.normalize(g) for g in basis_grades)
        self.structure: Tuple[Tuple[Coords, ...], ...] = tuple(
            tuple(tuple(int(c) % m for c, m in zip(entry, self.moduli)) for entry in row)
            for row in structure
        )
        self.reduction: Dict[Grade, Dict[Coords, Coords]] = {
            g: dict(table) for g, table in (reduction or {}).items()
        }
        self.basis_names: Tuple[str, ...] = tuple(basis_names or [f"b{k}" for k in range(len(self.moduli))])
        self.factors = factors
        self.params: Dict[str, object] = dict(params or {})

        n = len(self.moduli)
        if n == 0 or any(m < 2 for m in self.moduli):
            raise GradingError(f"{label}: every basis vector needs additive order >= 2")
        if len(self.basis_grades) != n or len(self.structure) != n:
            raise GradingError(f"{label}: basis grades and structure constants must cover {n} basis vectors")

        max_order = get_settings().max_ring_order
        if self.raw_size > max_order:
            raise RingTooLargeError(f"{label}: coordinate space of size {self.raw_size} exceeds cap {max_order}")

        self._slots: Dict[Grade, Tuple[int, ...]] = {
            g: tuple(k for k, h in enumerate(self.basis_grades) if h == g)
            for g in grade_group.elements()
        }
        self.one: RingElem = RingElem(label, self._reduce(tuple(int(c) % m for c, m in zip(one, self.moduli))))
        self.zero: RingElem = RingElem(label, tuple(0 for _ in self.moduli))
        self._validate()
        logger.debug(f"Constructed {label}: order {self.order}, grade group {grade_group}")

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------

    def _validate(self) -> None:
        n = len(self.moduli)
        basis = [self._basis_vector(k) for k in range(n)]
        group = self.grade_group

        for i, j in itertools.product(range(n), repeat=2):
            target = group.add(self.basis_grades[i], self.basis_grades[j])
            product = self.structure[i][j]
            stray = [k for k, c in enumerate(product) if c and self.basis_grades[k] != target]
            if stray:
                raise GradingError(
                    f"{self.label}: b{i}*b{j} leaves R_{target} (components in slots {stray}); "
                    f"R_g*R_h must lie in R_(g+h)"
                )
            if self.structure[i][j] != self.structure[j][i]:
                raise GradingError(f"{self.label}: multiplication is not commutative on b{i}, b{j}")

        if self.grade_of(self.one) != group.identity:
            raise GradingError(f"{self.label}: the identity must lie in R_e")
        for k, b in enumerate(basis):
            if self._mul(self.one.coords, b) != self._reduce(b):
                raise GradingError(f"{self.label}: declared identity does not fix b{k}")
        for i, j, k in itertools.product(range(n), repeat=3):
            left = self._mul(self._mul(basis[i], basis[j]), basis[k])
            right = self._mul(basis[i], self._mul(basis[j], basis[k]))
            if left != right:
                raise GradingError(f"{self.label}: multiplication is not associative on b{i}, b{j}, b{k}")

    def _basis_vector(self, k: int) -> Coords:
        return tuple(1 if j == k else 0 for j in range(len(self.moduli)))

    # ------------------------------------------------------------------
    # Coordinate arithmetic
    # ------------------------------------------------------------------

    @property
    def raw_size(self) -> int:
        return math.prod(self.moduli)

    @cached_property
    def _weights(self) -> Tuple[int, ...]:
        weights = []
        acc = 1
        for m in reversed(self.moduli):
            weights.append(acc)
            acc *= m
        return tuple(reversed(weights))

    def _sub(self, coords: Coords, g: Grade) -> Coords:
        return tuple(coords[k] for k in self._slots[g])

    def _reduce(self, coords: Coords) -> Coords:
        if not self.reduction:
            return coords
        out = list(coords)
        for g, table in self.reduction.items():
            slots = self._slots[g]
            if not slots:
                continue
            for k, c in zip(slots, table[tuple(coords[k] for k in slots)]):
                out[k] = c
        return tuple(out)

    def _add(self, a: Coords, b: Coords) -> Coords:
        return self._reduce(tuple((x + y) % m for x, y, m in zip(a, b, self.moduli)))

    def _neg(self, a: Coords) -> Coords:
        return self._reduce(tuple((-x) % m for x, m in zip(a, self.moduli)))

    def _mul(self, a: Coords, b: Coords) -> Coords:
        n = len(self.moduli)
        acc = [0] * n
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.structure[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] += xy * c
        return self._reduce(tuple(v % m for v, m in zip(acc, self.moduli)))

    # ------------------------------------------------------------------
    # Element API
    # ------------------------------------------------------------------

    def element(self, value: Union[int, Sequence[int], RingElem]) -> RingElem:
        """Coerce an integer (multiple of 1), a coordinate vector or a RingElem."""
        if isinstance(value, RingElem):
            self.check_elem(value)
            return value
        if isinstance(value, (int, np.integer)):
            coords = tuple((int(value) * c) % m for c, m in zip(self.one.coords, self.moduli))
        else:
            if len(value) != len(self.moduli):
                raise GradingError(
                    f"{self.label}: expected {len(self.moduli)} coordinates, got {list(value)}"
                )
            coords = tuple(int(c) % m for c, m in zip(value, self.moduli))
        return RingElem(self.label, self._reduce(coords))

    def check_elem(self, x: RingElem) -> None:
        if x.ring_id != self.label:
            raise RingMismatchError(f"Element of {x.ring_id} used in {self.label}")

    def add(self, x: RingElem, y: RingElem) -> RingElem:
        self.check_elem(x)
        self.check_elem(y)
        return RingElem(self.label, self._add(x.coords, y.coords))

    def neg(self, x: RingElem) -> RingElem:
        self.check_elem(x)
        return RingElem(self.label, self._neg(x.coords))

    def mul(self, x: RingElem, y: RingElem) -> RingElem:
        self.check_elem(x)
        self.check_elem(y)
        return RingElem(self.label, self._mul(x.coords, y.coords))

    def pow(self, x: RingElem, n: int) -> RingElem:
        result = self.one.coords
        base = x.coords
        while n > 0:
            if n & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            n >>= 1
        return RingElem(self.label, result)

    def component(self, x: RingElem, g: Grade) -> RingElem:
        """The g-component x_g of x."""
        self.check_elem(x)
        slots = set(self._slots[self.grade_group.normalize(g)])
        return RingElem(self.label, tuple(c if k in slots else 0 for k, c in enumerate(x.coords)))

    def decompose(self, x: RingElem) -> List[Tuple[Grade, RingElem]]:
        """Nonzero homogeneous components of x, in grade order."""
        parts = []
        for g in self.grade_group.elements():
            x_g = self.component(x, g)
            if x_g != self.zero:
                parts.append((g, x_g))
        return parts

    def grade_of(self, x: RingElem) -> Optional[Grade]:
        """Grade of a homogeneous element (e for zero); None when x is not homogeneous."""
        parts = self.decompose(x)
        if not parts:
            return self.grade_group.identity
        if len(parts) == 1:
            return parts[0][0]
        return None

    def is_homogeneous(self, x: RingElem) -> bool:
        return len(self.decompose(x)) <= 1

    def is_unit(self, x: RingElem) -> bool:
        """Exhaustive inverse search."""
        t = self.tables
        row = t.mul[self.index(x)]
        return bool((row == t.one).any())

    def is_regular(self, x: RingElem) -> bool:
        """xy = 0 implies y = 0."""
        t = self.tables
        row = t.mul[self.index(x)]
        return int((row == t.zero).sum()) == 1

    def format(self, x: RingElem) -> str:
        """Compact human-readable form, e.g. ``6+6i`` or ``(3, 1)``."""
        self.check_elem(x)
        if self.factors is not None:
            left, right = self.factors
            n1 = len(left.moduli)
            return f"({left.format(RingElem(left.label, x.coords[:n1]))}, {right.format(RingElem(right.label, x.coords[n1:]))})"
        terms = []
        for c, name in zip(x.coords, self.basis_names):
            if not c:
                continue
            if name == "1":
                terms.append(str(c))
            else:
                terms.append(name if c == 1 else f"{c}{name}")
        return "+".join(terms) if terms else "0"

    # ------------------------------------------------------------------
    # Components and enumeration
    # ------------------------------------------------------------------

    def _component_coords(self, g: Grade) -> List[Coords]:
        slots = self._slots[g]
        if g in self.reduction and slots:
            subs = sorted(set(self.reduction[g].values()))
        else:
            subs = [tuple(s) for s in itertools.product(*(range(self.moduli[k]) for k in slots))]
        out = []
        for sub in subs:
            coords = [0] * len(self.moduli)
            for k, c in zip(slots, sub):
                coords[k] = c
            out.append(tuple(coords))
        return out

    def component_size(self, g: Grade) -> int:
        slots = self._slots[g]
        if not slots:
            return 1
        if g in self.reduction:
            return len(set(self.reduction[g].values()))
        return math.prod(self.moduli[k] for k in slots)

    @cached_property
    def order(self) -> int:
        return math.prod(self.component_size(g) for g in self.grade_group.elements())

    def component_elements(self, g: Union[int, Sequence[int]]) -> List[RingElem]:
        """R_g, enumerated without building dense tables."""
        g = self.grade_group.normalize(g)
        return [RingElem(self.label, c) for c in self._component_coords(g)]

    def homogeneous_elements(self) -> List[RingElem]:
        """h(R) without duplicates (0 listed once), in canonical order."""
        seen = set()
        for g in self.grade_group.elements():
            seen.update(self._component_coords(g))
        return [RingElem(self.label, c) for c in sorted(seen)]

    def elements(self) -> List[RingElem]:
        per_grade = [self._component_coords(g) for g in self.grade_group.elements()]
        out = set()
        for combo in itertools.product(*per_grade):
            out.add(tuple(sum(col) for col in zip(*combo)))
        return [RingElem(self.label, c) for c in sorted(out)]

    @cached_property
    def tables(self) -> RingTables:
        """Dense tables; complexity O(|R|^2 * n) time and memory."""
        limit = get_settings().table_limit
        if self.order > limit:
            raise RingTooLargeError(f"{self.label}: order {self.order} exceeds table limit {limit}")
        return _build_tables(self)

    def index(self, x: RingElem) -> int:
        self.check_elem(x)
        return self._index_map[x.coords]

    def elem(self, i: int) -> RingElem:
        return RingElem(self.label, self.tables.elements[int(i)])

    @cached_property
    def _index_map(self) -> Dict[Coords, int]:
        return {c: i for i, c in enumerate(self.tables.elements)}

    def __repr__(self) -> str:
        return f"GradedRing({self.label!r}, order={self.order}, G={self.grade_group})"


def _build_tables(ring: GradedRing) -> RingTables:
    moduli = np.array(ring.moduli, dtype=np.int64)
    weights = np.array(ring._weights, dtype=np.int64)

    raw = list(itertools.product(*(range(m) for m in ring.moduli)))
    reduced = [ring._reduce(c) for c in raw]
    elements = tuple(sorted(set(reduced)))
    index = {c: i for i, c in enumerate(elements)}
    raw_to_index = np.array([index[c] for c in reduced], dtype=np.int32)

    coords = np.array(elements, dtype=np.int64)
    structure = np.array(ring.structure, dtype=np.int64)
    n_elems = len(elements)

    add = np.empty((n_elems, n_elems), dtype=np.int32)
    mul = np.empty((n_elems, n_elems), dtype=np.int32)
    for x in range(n_elems):
        sums = (coords[x] + coords) % moduli
        add[x] = raw_to_index[sums @ weights]
        left = np.tensordot(coords[x], structure, axes=(0, 0))
        prods = (coords @ left) % moduli
        mul[x] = raw_to_index[prods @ weights]

    grades = tuple(ring.grade_group.elements())
    components = np.empty((n_elems, len(grades)), dtype=np.int32)
    for pos, g in enumerate(grades):
        mask = np.zeros(len(ring.moduli), dtype=np.int64)
        mask[list(ring._slots[g])] = 1
        components[:, pos] = raw_to_index[(coords * mask) @ weights]

    nonzero_parts = (components != 0).sum(axis=1)
    homogeneous = np.flatnonzero(nonzero_parts <= 1).astype(np.int32)
    slices = {
        g: np.flatnonzero(components[:, pos] == np.arange(n_elems)).astype(np.int32)
        for pos, g in enumerate(grades)
    }
    logger.debug(f"Built tables for {ring.label}: {n_elems} elements, |h(R)| = {len(homogeneous)}")
    return RingTables(
        elements=elements,
        add=add,
        mul=mul,
        zero=0,
        one=index[ring.one.coords],
        grades=grades,
        components=components,
        homogeneous=homogeneous,
        slices=slices,
    )


# ----------------------------------------------------------------------
# Constructors
# ----------------------------------------------------------------------


def make_cyclic_graded(
    n: int,
    grade_group: Optional[GradeGroup] = None,
    assignment: Optional[Mapping[int, Union[int, Sequence[int]]]] = None,
) -> GradedRing:
    """
    Z_n graded by ``grade_group``.

    Args:
        n: Modulus, at least 2
        grade_group: Grading group (trivial group when omitted)
        assignment: Grade of the additive generator 1, keyed by the generator

    Returns:
        Z_n with everything concentrated in R_e
    """
    if n < 2:
        raise GradingError(f"Z_n needs n >= 2, got {n}")
    group = grade_group or GradeGroup.trivial()
    grade = group.identity
    for generator, g in (assignment or {}).items():
        if generator % n != 1 % n:
            raise GradingError(f"Z_{n} has the single additive generator 1, got {generator}")
        grade = group.normalize(g)
    if grade != group.identity:
        # 1*1 = 1 would need grade 2g = g
        raise GradingError(f"Z_{n}: 1 in grade {grade} violates R_g*R_h in R_(g+h); 1 must lie in R_e")
    label = f"Z_{n}" if group.order == 1 else f"Z_{n} ({group}-graded)"
    return GradedRing(
        label=label,
        kind="cyclic",
        grade_group=group,
        moduli=[n],
        basis_grades=[grade],
        structure=[[(1,)]],
        one=(1,),
        basis_names=["1"],
        params={"n": n, "grade_orders": list(group.cyclic_orders)},
    )


def _poly_label(n: int, coeffs: Sequence[int], var: str) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k] % n
        if not c:
            continue
        mono = "1" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


def make_poly_quotient(
    n: int,
    modulus_poly: Sequence[int],
    x_grade: Union[int, Sequence[int]],
    grade_group: Optional[GradeGroup] = None,
    var: str = "x",
    label: Optional[str] = None,
) -> GradedRing:
    """
    Z_n[x]/(f) with x homogeneous of degree ``x_grade``.

    Args:
        n: Coefficient modulus
        modulus_poly: Coefficients of the monic f, lowest degree first
        x_grade: Grade of x
        grade_group: Grading group, Z_2 by default
        var: Display name of x
        label: Override for the ring label

    Returns:
        Ring of order n^d spanned by 1, x, ..., x^(d-1)
    """
    group = grade_group or GradeGroup.cyclic(2)
    coeffs = [int(c) % n for c in modulus_poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    d = len(coeffs) - 1
    if d < 1 or coeffs[-1] != 1:
        raise GradingError(f"Modulus polynomial must be monic of degree >= 1, got {list(modulus_poly)}")
    g = group.normalize(x_grade)

    top = group.scale(d, g)
    for k, c in enumerate(coeffs[:-1]):
        if c and group.scale(k, g) != top:
            raise GradingError(
                f"Inconsistent grading: x^{d} has grade {top} but reduces onto x^{k} of grade {group.scale(k, g)}"
            )

    # x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})
    def reduce_power(p: int) -> Coords:
        vec = [0] * (2 * d)
        vec[p] = 1
        for k in range(len(vec) - 1, d - 1, -1):
            c = vec[k] % n
            if c:
                vec[k] = 0
                for j in range(d):
                    vec[k - d + j] = (vec[k - d + j] - c * coeffs[j]) % n
        return tuple(v % n for v in vec[:d])

    structure = [[reduce_power(i + j) for j in range(d)] for i in range(d)]
    names = ["1"] + [var if k == 1 else f"{var}^{k}" for k in range(1, d)]
    return GradedRing(
        label=label or f"Z_{n}[{var}]/({_poly_label(n, coeffs, var)})",
        kind="poly_quotient",
        grade_group=group,
        moduli=[n] * d,
        basis_grades=[group.scale(k, g) for k in range(d)],
        structure=structure,
        one=tuple(1 if k == 0 else 0 for k in range(d)),
        basis_names=names,
        params={"n": n, "modulus_poly": coeffs, "x_grade": list(g), "grade_orders": list(group.cyclic_orders)},
    )


def make_gaussian_quotient(n: int) -> GradedRing:
    """Z_n[i] as Z_n[x]/(x^2+1) with i in grade 1 of Z_2."""
    return make_poly_quotient(n, [1, 0, 1], 1, GradeGroup.cyclic(2), var="i", label=f"Z_{n}[i]")


def direct_product(r1: GradedRing, r2: GradedRing) -> GradedRing:
    """R1 x R2 with (R1 x R2)_g = (R1)_g x (R2)_g and identity (1, 1)."""
    if r1.grade_group != r2.grade_group:
        raise RingMismatchError(
            f"Cannot multiply {r1.label} ({r1.grade_group}) and {r2.label} ({r2.grade_group}): grading groups differ"
        )
    n1, n2 = len(r1.moduli), len(r2.moduli)
    zero1, zero2 = (0,) * n1, (0,) * n2
    structure = []
    for i in range(n1 + n2):
        row = []
        for j in range(n1 + n2):
            if i < n1 and j < n1:
                row.append(r1.structure[i][j] + zero2)
            elif i >= n1 and j >= n1:
                row.append(zero1 + r2.structure[i - n1][j - n1])
            else:
                row.append(zero1 + zero2)
        structure.append(row)

    reduction: Dict[Grade, Dict[Coords, Coords]] = {}
    for g in r1.grade_group.elements():
        if g not in r1.reduction and g not in r2.reduction:
            continue
        raw1 = itertools.product(*(range(r1.moduli[k]) for k in r1._slots[g]))
        subs2 = [tuple(s) for s in itertools.product(*(range(r2.moduli[k]) for k in r2._slots[g]))]
        table = {}
        for a in raw1:
            a = tuple(a)
            ra = r1.reduction[g][a] if g in r1.reduction else a
            for b in subs2:
                rb = r2.reduction[g][b] if g in r2.reduction else b
                table[a + b] = ra + rb
        reduction[g] = table

    return GradedRing(
        label=f"{r1.label} x {r2.label}",
        kind="product",
        grade_group=r1.grade_group,
        moduli=r1.moduli + r2.moduli,
        basis_grades=r1.basis_grades + r2.basis_grades,
        structure=structure,
        one=r1.one.coords + r2.one.coords,
        reduction=reduction,
        basis_names=[f"{name}@1" for name in r1.basis_names] + [f"{name}@2" for name in r2.basis_names],
        factors=(r1, r2),
        params={"left": r1.label, "right": r2.label},
    )


def quotient_ring(ring: GradedRing, ideal: GradedIdeal) -> Tuple[GradedRing, GradedHom]:
    """
    R/I with (R/I)_g the image of R_g, and the projection R -> R/I.

    Coset representatives are chosen grade by grade (the smallest coordinate
    vector in x_g + I_g), so homogeneous classes keep homogeneous representatives.
    """
    from graded_ideals.morphisms import GradedHom

    if ideal.ring is not ring:
        raise RingMismatchError(f"Ideal of {ideal.ring.label} used to form a quotient of {ring.label}")
    members = [ring.elem(i) for i in sorted(ideal.members)]
    by_grade: Dict[Grade, List[Coords]] = {g: [] for g in ring.grade_group.elements()}
    for x in members:
        for g, x_g in ring.decompose(x):
            if ring.index(x_g) not in ideal.members:
                raise GradingError(f"{ideal} is not graded: component {ring.format(x_g)} of {ring.format(x)} is missing")
            by_grade[g].append(ring._sub(x.coords, g))

    reduction: Dict[Grade, Dict[Coords, Coords]] = {}
    for g, slots in ring._slots.items():
        if not slots:
            continue
        slot_moduli = [ring.moduli[k] for k in slots]
        parent = ring.reduction.get(g)
        kernel = [tuple(0 for _ in slots)] + by_grade[g]
        cache: Dict[Coords, Coords] = {}
        table = {}
        for a in itertools.product(*(range(m) for m in slot_moduli)):
            a = tuple(a)
            p = parent[a] if parent is not None else a
            if p not in cache:
                coset = []
                for i in kernel:
                    s = tuple((u + v) % m for u, v, m in zip(p, i, slot_moduli))
                    coset.append(parent[s] if parent is not None else s)
                cache[p] = min(coset)
            table[a] = cache[p]
        reduction[g] = table

    gens = ", ".join(ring.format(x) for x in ideal.generators) or "0"
    quotient = GradedRing(
        label=f"{ring.label}/({gens})",
        kind="quotient",
        grade_group=ring.grade_group,
        moduli=ring.moduli,
        basis_grades=ring.basis_grades,
        structure=ring.structure,
        one=ring.one.coords,
        reduction=reduction,
        basis_names=ring.basis_names,
        params={"parent": ring.label, "ideal": [list(x.coords) for x in ideal.generators]},
    )
    projection = GradedHom.from_function(
        ring, quotient, lambda x: quotient.element(x.coords), name=f"{ring.label} -> {quotient.label}"
    )
    logger.debug(f"Quotient {quotient.label}: order {quotient.order}")
    return quotient, projection


def identity_component_ring(ring: GradedRing) -> Tuple[GradedRing, GradedHom]:
    """R_e as a ring concentrated in degree e, with its inclusion into R."""
    from graded_ideals.morphisms import GradedHom

    e = ring.grade_group.identity
    slots = ring._slots[e]
    if len(slots) == len(ring.moduli):
        return ring, GradedHom.from_function(ring, ring, lambda x: x, name=f"id_{ring.label}")

    pos = {k: p for p, k in enumerate(slots)}
    structure = [
        [tuple(ring.structure[i][j][k] for k in slots) for j in slots]
        for i in slots
    ]
    reduction = {e: ring.reduction[e]} if e in ring.reduction else None
    component = GradedRing(
        label=f"({ring.label})_e",
        kind="component",
        grade_group=ring.grade_group,
        moduli=[ring.moduli[k] for k in slots],
        basis_grades=[e] * len(slots),
        structure=structure,
        one=tuple(ring.one.coords[k] for k in slots),
        reduction=reduction,
        basis_names=[ring.basis_names[k] for k in slots],
        params={"parent": ring.label},
    )

    def include(x: RingElem) -> RingElem:
        coords = [0] * len(ring.moduli)
        for k, p in pos.items():
            coords[k] = x.coords[p]
        return ring.element(coords)

    return component, GradedHom.from_function(component, ring, include, name=f"{component.label} -> {ring.label}")


