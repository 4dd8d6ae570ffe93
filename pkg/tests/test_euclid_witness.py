import pytest

from graded_ideals.euclid_witness import (
    GaussianInt,
    IntPoly,
    gi_associates,
    gi_divides,
    gi_divmod,
    gi_factor,
    gi_gcd,
    gi_member,
    gi_rad_member,
    gi_radical,
    gi_stable_colon,
    poly_grad_member_by_search,
    poly_homog_grad_member,
    poly_member,
    verify_paper_witnesses,
    verify_witness_facts,
)


def test_gaussian_arithmetic():
    a, b = GaussianInt(7, -1), GaussianInt(7, 1)
    assert a * b == GaussianInt(50)
    assert str(a) == "7-i"
    assert str(GaussianInt(0, 3)) == "3i"
    assert (GaussianInt(1, 1) ** 2) == GaussianInt(0, 2)
    assert GaussianInt(0, 1).is_unit()


def test_division_with_remainder():
    a, b = GaussianInt(27, 23), GaussianInt(8, 1)
    q, r = gi_divmod(a, b)
    assert q * b + r == a
    assert r.norm <= b.norm // 2
    with pytest.raises(ZeroDivisionError):
        gi_divmod(a, GaussianInt(0))


def test_gcd_and_associates():
    assert gi_gcd(GaussianInt(10), GaussianInt(2)) == GaussianInt(2)
    assert gi_gcd(GaussianInt(5), GaussianInt(2, 1)) == GaussianInt(2, 1)
    assert gi_associates(GaussianInt(1, -2), GaussianInt(2, 1))
    with pytest.raises(ValueError):
        gi_gcd(GaussianInt(0), GaussianInt(0))


def test_factorisation_of_ten():
    assert gi_factor(GaussianInt(10)) == [
        (GaussianInt(1, 1), 2),
        (GaussianInt(1, 2), 1),
        (GaussianInt(2, 1), 1),
    ]
    assert gi_factor(GaussianInt(3)) == [(GaussianInt(3), 1)]
    with pytest.raises(ValueError):
        gi_factor(GaussianInt(0))


def test_colon_and_radical_of_ten():
    ten = GaussianInt(10)
    assert gi_stable_colon(ten, GaussianInt(2)) == GaussianInt(5)
    assert gi_stable_colon(GaussianInt(5, 5), GaussianInt(2)) == GaussianInt(5)
    assert gi_radical(ten) == GaussianInt(5, 5)
    assert gi_rad_member(GaussianInt(0, 10), ten)
    assert not gi_rad_member(GaussianInt(5), ten)
    assert gi_member(GaussianInt(50), ten)
    assert not gi_member(GaussianInt(7, -1), GaussianInt(5))
    assert gi_divides(GaussianInt(1, 1), GaussianInt(2))


def test_polynomial_membership():
    nine_x = (9, 1)
    assert poly_member(IntPoly.monomial(18, 1), *nine_x)
    assert not poly_member(IntPoly.monomial(18, 0), *nine_x)
    assert not poly_member(IntPoly((9, 9)), *nine_x)
    assert str(IntPoly.monomial(18, 1)) == "18X"
    assert IntPoly(()).degree is None
    assert (IntPoly((1, 1)) * IntPoly((1, 1))).coeffs == (1, 2, 1)


def test_graded_radical_membership_agrees_with_search():
    for a in (1, 2, 3, 6, 9, 18, 27):
        for m in (0, 1, 2):
            assert poly_homog_grad_member(a, m, 9, 1) == poly_grad_member_by_search(a, m, 9, 1)
    assert not poly_homog_grad_member(1, 1, 9, 1)
    assert poly_homog_grad_member(3, 1, 9, 1)


def test_witness_table_passes():
    facts = verify_witness_facts()
    assert len(facts) == 12
    assert all(f.passed for f in facts)
    assert len({f.fact_id for f in facts}) == len(facts)


def test_stable_colon_of_ten_is_five():
    facts = {f.fact_id: f for f in verify_paper_witnesses()}
    assert facts["ex1_stable_colon"].passed
    assert gi_associates(gi_stable_colon(GaussianInt(10), GaussianInt(2)), GaussianInt(0, 5))
    assert verify_paper_witnesses is verify_witness_facts
