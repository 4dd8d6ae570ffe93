import pytest

from graded_ideals.errors import MultiplicativeSetError, RingMismatchError
from graded_ideals.ideal_lattice import principal, zero
from graded_ideals.morphisms import projection
from graded_ideals.mult_set import (
    closure,
    from_members,
    image,
    is_disjoint,
    is_subset,
    product_set,
    restrict_to_identity,
    saturation_star,
    unit_set,
)
from graded_ideals.ring_core import direct_product, make_cyclic_graded


def test_closure_of_three(z12):
    s = closure(z12, [3])
    assert s.members == frozenset({1, 3, 9})
    assert str(s) == "{1, 3, 9}"
    assert s.generators == [z12.element(3)]
    assert len(closure(z12, [])) == 1


def test_closure_rejects_zero_and_non_homogeneous(z12, z12i):
    with pytest.raises(MultiplicativeSetError):
        closure(z12, [6])
    with pytest.raises(MultiplicativeSetError):
        closure(z12i, [[1, 1]])


def test_from_members_checks_axioms(z12):
    assert from_members(z12, [1, 5]) == closure(z12, [5])
    with pytest.raises(MultiplicativeSetError):
        from_members(z12, [1, 3])
    with pytest.raises(MultiplicativeSetError):
        from_members(z12, [3, 9])


def test_set_flags(z12):
    units = unit_set(z12)
    assert units.members == frozenset({1, 5, 7, 11})
    assert units.consists_of_units
    assert units.consists_of_regular
    s = closure(z12, [3])
    assert not s.consists_of_units
    assert not s.consists_of_regular


def test_identity_component_restriction(z12i):
    powers_of_i = closure(z12i, [[0, 1]])
    assert len(powers_of_i) == 4
    assert not powers_of_i.in_identity_component
    restricted = restrict_to_identity(powers_of_i)
    assert restricted.in_identity_component
    assert set(restricted.elements()) == {z12i.one, z12i.element(11)}


def test_saturation(z12, z12i):
    s = closure(z12, [3])
    assert saturation_star(s).members == frozenset({1, 3, 5, 7, 9, 11})
    assert len(saturation_star(closure(z12i, [3]))) == 12


def test_disjointness_and_subsets(z12, z30):
    s = closure(z12, [3])
    assert is_disjoint(principal(z12, 2), s)
    assert not is_disjoint(principal(z12, 3), s)
    assert is_subset(closure(z12, []), s)
    assert not is_subset(s, unit_set(z12))
    with pytest.raises(RingMismatchError):
        is_disjoint(zero(z30), s)


def test_image_under_projection(z12):
    f = projection(z12, principal(z12, 4))
    assert str(image(f, closure(z12, [3]))) == "{1, 3}"


def test_product_set(z12):
    z2 = make_cyclic_graded(2)
    product = direct_product(z12, z2)
    s = product_set(product, closure(z12, [3]), closure(z2, []))
    assert len(s) == 3
    assert s.contains(product.element([9, 1]))
