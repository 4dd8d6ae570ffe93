import pytest

from graded_ideals.errors import DisjointnessError, GradingError, RingMismatchError
from graded_ideals.ideal_lattice import (
    colon_elem,
    colon_graded_slice,
    colon_stable,
    enumerate_graded_ideals,
    grad_radical,
    ideal_from_generators,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_graded_ideal,
    maximal_disjoint_ideal,
    power_slice_product,
    principal,
    product_ideal,
    slice_elements,
    whole,
    zero,
)
from graded_ideals.mult_set import closure
from graded_ideals.ring_core import direct_product, make_cyclic_graded


def test_principal_ideals_of_z12(z12):
    four = principal(z12, 4)
    assert four.size == 3
    assert four.is_proper
    assert str(four) == "(4)"
    assert str(zero(z12)) == "(0)"
    assert not whole(z12).is_proper
    assert principal(z12, 8) == four


def test_enumeration_counts(z12, z12i):
    ideals = enumerate_graded_ideals(z12)
    assert len(ideals) == 6
    assert ideals[0] == zero(z12)
    assert ideals[-1] == whole(z12)
    # I_0 = I_1 is forced by multiplication with i
    assert len(enumerate_graded_ideals(z12i)) == 6


def test_enumeration_is_deterministic(z12i):
    first = [sorted(p.members) for p in enumerate_graded_ideals(z12i)]
    second = [sorted(p.members) for p in enumerate_graded_ideals(z12i)]
    assert first == second


def test_graded_radical(z12, z12i):
    assert grad_radical(principal(z12, 4)) == principal(z12, 2)
    assert grad_radical(principal(z12, 6)) == principal(z12, 6)
    nil = grad_radical(zero(z12i))
    assert nil.size == 4
    assert nil.contains(z12i.element([6, 6]))
    assert not nil.contains(z12i.element([3, 0]))


def test_radical_laws_over_lattice(z12i):
    for p in enumerate_graded_ideals(z12i):
        radical = grad_radical(p)
        assert p.issubset(radical)
        assert grad_radical(radical) == radical


def test_colon_ideals(z12, z12i):
    assert colon_elem(zero(z12i), z12i.element(3)).size == 9
    assert colon_stable(zero(z12), z12.element(3)) == principal(z12, 4)
    assert colon_elem(principal(z12, 4), z12.element(2)) == principal(z12, 2)
    assert colon_graded_slice(zero(z12i), z12i.element([0, 3]), 1) == {
        z12i.element([0, 4]), z12i.element([0, 8]), z12i.zero,
    }


def test_colon_stable_needs_homogeneous(z12i):
    with pytest.raises(GradingError):
        colon_stable(zero(z12i), z12i.element([1, 1]))


def test_ideal_arithmetic(z12):
    two, four, six = principal(z12, 2), principal(z12, 4), principal(z12, 6)
    assert ideal_sum(four, six) == two
    assert ideal_product(two, two) == four
    assert ideal_product(two, six) == zero(z12)
    assert ideal_intersection(four, six) == zero(z12)
    assert ideal_intersection(two, six) == six


def test_mixed_rings_rejected(z12, z30):
    with pytest.raises(RingMismatchError):
        ideal_sum(principal(z12, 2), principal(z30, 2))


def test_slices(z12i):
    p = principal(z12i, 6)
    assert power_slice_product(p, 0) == frozenset({z12i.tables.zero})
    assert slice_elements(p, 1) == [z12i.zero, z12i.element([0, 6])]


def test_generators_must_be_homogeneous(z12i):
    with pytest.raises(GradingError):
        ideal_from_generators(z12i, [[1, 1]])


def test_is_graded_ideal(z12i):
    assert is_graded_ideal(z12i, principal(z12i, 6).elements())
    assert not is_graded_ideal(z12i, [z12i.zero, z12i.element(6)])


def test_maximal_disjoint_ideal(z12):
    s = closure(z12, [3])
    assert maximal_disjoint_ideal(z12, zero(z12), s) == principal(z12, 2)
    with pytest.raises(DisjointnessError):
        maximal_disjoint_ideal(z12, principal(z12, 3), s)


def test_product_ideal(z12):
    z2 = make_cyclic_graded(2)
    product = direct_product(z12, z2)
    p = product_ideal(product, principal(z12, 4), whole(z2))
    assert p.size == 6
    assert p.contains(product.element([4, 1]))
    with pytest.raises(RingMismatchError):
        product_ideal(z12, principal(z12, 4), whole(z2))


@pytest.mark.slow
def test_radical_laws_on_default_corpus(default_corpus):
    for entry in default_corpus.rings:
        for p in entry.ideals:
            radical = grad_radical(p)
            assert p.issubset(radical), f"{entry.label}: {p}"
            assert grad_radical(radical) == radical, f"{entry.label}: {p}"
        for p1, p2 in zip(entry.ideals, entry.ideals[1:]):
            assert grad_radical(ideal_intersection(p1, p2)) == ideal_intersection(grad_radical(p1), grad_radical(p2))
