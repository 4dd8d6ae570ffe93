import pytest

from graded_ideals.errors import RingMismatchError
from graded_ideals.ideal_lattice import principal
from graded_ideals.localization import (
    contract_ideal,
    extend_ideal,
    is_graded_domain,
    is_graded_field,
    localize,
)
from graded_ideals.mult_set import closure, unit_set
from graded_ideals.ring_core import make_cyclic_graded


def test_localize_z12_at_three(z12):
    local = localize(z12, closure(z12, [3]))
    assert local.order == 4
    assert local.kernel == principal(z12, 4)


def test_localize_gaussian(z12i):
    local = localize(z12i, closure(z12i, [3]))
    assert local.order == 16
    assert local.kernel.size == 9


def test_localizing_at_units_changes_nothing(z12):
    local = localize(z12, unit_set(z12))
    assert local.order == 12
    assert local.kernel.is_zero


def test_extension_and_contraction(z12):
    local = localize(z12, closure(z12, [3]))
    extended = extend_ideal(local, principal(z12, 2))
    assert extended.is_proper
    assert contract_ideal(local, extended) == principal(z12, 2)
    assert not extend_ideal(local, principal(z12, 3)).is_proper


def test_fractions(z12):
    local = localize(z12, closure(z12, [3]))
    third = local.fraction(z12.one, z12.element(3))
    assert local.ring.mul(third, local.localization_map(z12.element(3))) == local.ring.one
    with pytest.raises(RingMismatchError):
        local.fraction(z12.one, z12.element(5))


def test_field_and_domain_checks(z12, z12i):
    z5 = make_cyclic_graded(5)
    assert is_graded_field(z5)
    assert is_graded_domain(z5)
    assert not is_graded_domain(z12)
    assert not is_graded_field(z12i)
    # localizing Z_12 at {1, 3, 9} gives Z_4, still not a domain
    assert not is_graded_domain(localize(z12, closure(z12, [3])).ring)
