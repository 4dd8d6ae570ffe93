import pytest

from graded_ideals.errors import GradingError, RingMismatchError, RingTooLargeError
from graded_ideals.ideal_lattice import principal
from graded_ideals.morphisms import is_mono
from graded_ideals.ring_core import (
    GradeGroup,
    direct_product,
    identity_component_ring,
    make_cyclic_graded,
    make_gaussian_quotient,
    make_poly_quotient,
    quotient_ring,
)


def test_grade_group_basics():
    z2 = GradeGroup.cyclic(2)
    assert z2.elements() == [(0,), (1,)]
    assert z2.normalize(3) == (1,)
    assert z2.add((1,), (1,)) == (0,)
    assert str(GradeGroup.trivial()) == "trivial"

    klein = GradeGroup((2, 2))
    assert klein.order == 4
    assert klein.exponent == 2
    with pytest.raises(GradingError):
        klein.normalize(1)


def test_cyclic_ring_arithmetic(z12):
    assert z12.order == 12
    three, four = z12.element(3), z12.element(4)
    assert z12.mul(three, four) == z12.zero
    assert z12.add(z12.element(7), z12.element(8)) == z12.element(3)
    assert z12.pow(z12.element(2), 3) == z12.element(8)
    assert z12.is_unit(z12.element(5))
    assert not z12.is_unit(z12.element(2))
    assert z12.is_regular(z12.element(7))
    assert not z12.is_regular(three)


def test_gaussian_ring_grading(z12i):
    i = z12i.element([0, 1])
    assert z12i.order == 144
    assert z12i.mul(i, i) == z12i.element(11)
    assert z12i.grade_of(i) == (1,)
    assert z12i.grade_of(z12i.zero) == (0,)
    assert z12i.grade_of(z12i.element([1, 1])) is None
    assert not z12i.is_homogeneous(z12i.element([1, 1]))
    assert z12i.format(z12i.element([6, 6])) == "6+6i"
    assert len(z12i.homogeneous_elements()) == 23


def test_decompose_splits_components(z12i):
    x = z12i.element([3, 5])
    assert z12i.decompose(x) == [((0,), z12i.element([3, 0])), ((1,), z12i.element([0, 5]))]


def test_identity_must_lie_in_degree_zero():
    with pytest.raises(GradingError):
        make_cyclic_graded(12, GradeGroup.cyclic(2), {1: 1})


def test_poly_quotient_rejects_inconsistent_grading():
    # x^2 - 1 with x in degree 1 of Z_3: x^2 has degree 2, the constant degree 0
    with pytest.raises(GradingError):
        make_poly_quotient(4, [-1, 0, 1], 1, GradeGroup.cyclic(3))
    with pytest.raises(GradingError):
        make_poly_quotient(4, [1, 0, 2], 1)


def test_dual_numbers(dual4):
    x = dual4.element([0, 1])
    assert dual4.order == 16
    assert dual4.mul(x, x) == dual4.zero
    assert dual4.grade_of(x) == (1,)


def test_direct_product(z12):
    z2 = make_cyclic_graded(2)
    product = direct_product(z12, z2)
    assert product.order == 24
    assert product.label == "Z_12 x Z_2"
    assert product.format(product.element([3, 1])) == "(3, 1)"
    with pytest.raises(RingMismatchError):
        direct_product(make_gaussian_quotient(4), z2)


def test_size_caps():
    with pytest.raises(RingTooLargeError):
        make_cyclic_graded(70000)
    big = make_cyclic_graded(5000)
    with pytest.raises(RingTooLargeError):
        big.tables


def test_elements_do_not_cross_rings(z12, z12i):
    with pytest.raises(RingMismatchError):
        z12.add(z12i.one, z12.one)


def test_quotient_ring(z12):
    quotient, proj = quotient_ring(z12, principal(z12, 4))
    assert quotient.order == 4
    assert proj.kernel == principal(z12, 4)
    assert proj(z12.element(7)) == quotient.element(3)


def test_identity_component(z12, z12i):
    component, inc = identity_component_ring(z12i)
    assert component.order == 12
    assert is_mono(inc)
    assert inc(component.element([5])) == z12i.element([5, 0])

    same, identity = identity_component_ring(z12)
    assert same is z12
    assert identity.source is z12
