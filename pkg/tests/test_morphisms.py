import numpy as np
import pytest

from graded_ideals.errors import HomomorphismError, RingMismatchError
from graded_ideals.ideal_lattice import principal, zero
from graded_ideals.morphisms import (
    GradedHom,
    factor_projection,
    image_ideal,
    inclusion,
    is_epi,
    is_mono,
    make_hom,
    preimage_ideal,
    projection,
    set_image,
)
from graded_ideals.ring_core import direct_product, make_cyclic_graded


def test_projection(z12):
    f = projection(z12, principal(z12, 4))
    assert is_epi(f)
    assert not is_mono(f)
    assert f.kernel == principal(z12, 4)
    assert image_ideal(f, principal(z12, 2)).size == 2
    assert preimage_ideal(f, zero(f.target)) == principal(z12, 4)
    assert len(set_image(f, principal(z12, 2))) == 2


def test_inclusion_of_identity_component(z12i):
    f = inclusion(z12i)
    assert is_mono(f)
    assert not is_epi(f)
    assert preimage_ideal(f, principal(z12i, 6)).size == 2


def test_make_hom_between_cyclic_rings(z12):
    z4 = make_cyclic_graded(4)
    f = make_hom(z12, z4, [1])
    assert f(z12.element(7)) == z4.element(3)
    with pytest.raises(HomomorphismError):
        make_hom(z12, make_cyclic_graded(5), [1])


def test_non_unital_map_rejected(z12):
    doubling = np.array([(2 * x) % 12 for x in range(12)])
    with pytest.raises(HomomorphismError):
        GradedHom(z12, z12, doubling)


def test_grading_groups_must_match(z12, z12i):
    with pytest.raises(RingMismatchError):
        GradedHom.from_function(z12, z12i, lambda x: z12i.element(x.coords[0]))


def test_factor_projection(z12):
    z2 = make_cyclic_graded(2)
    product = direct_product(z12, z2)
    left = factor_projection(product, 0)
    assert left(product.element([5, 1])) == z12.element(5)
    assert left.kernel.size == 2
    with pytest.raises(RingMismatchError):
        factor_projection(z12, 0)
