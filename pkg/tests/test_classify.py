import pytest

from graded_ideals.classify import (
    GRADED_PRIMARY,
    GRADED_S_PRIMARY,
    GRADED_WEAKLY_PRIMARY,
    GRADED_WEAKLY_S_PRIMARY,
    G_S_PRIMARY,
    G_WEAKLY_S_PRIMARY,
    classify_full,
    idealwise_weakly_s_primary,
    is_g_s_primary,
    is_g_weakly_s_primary,
    is_graded_prime,
    is_graded_primary,
    is_graded_s_prime,
    is_graded_s_primary,
    is_graded_weakly_primary,
    is_graded_weakly_s_primary,
    replay_certificate,
)
from graded_ideals.errors import DisjointnessError, MultiplicativeSetError, NotProperError
from graded_ideals.ideal_lattice import enumerate_graded_ideals, principal, whole, zero
from graded_ideals.mult_set import closure, is_disjoint


def test_weakly_primary_counterexample_in_z30(z30):
    p = principal(z30, 6)
    cert = is_graded_weakly_primary(p)
    assert not cert.verdict
    assert cert.counter.x == z30.element(2)
    assert cert.counter.y == z30.element(3)
    assert cert.describe(z30) == "graded_weakly_primary: false, counter=(2,3)"
    assert replay_certificate(cert, p)


def test_primary_and_prime_in_z12(z12):
    assert is_graded_weakly_primary(principal(z12, 4)).verdict
    assert is_graded_primary(principal(z12, 4)).verdict
    assert is_graded_prime(principal(z12, 2)).verdict
    assert not is_graded_prime(principal(z12, 4)).verdict


def test_s_prime_counter_pair(z12):
    p = principal(z12, 4)
    cert = is_graded_s_prime(p, closure(z12, []))
    assert not cert.verdict
    assert (cert.counter.x, cert.counter.y) == (z12.element(2), z12.element(2))
    assert replay_certificate(cert, p, closure(z12, []))


def test_gaussian_zero_ideal_with_three(z12i):
    p = zero(z12i)
    s = closure(z12i, [3])
    assert is_disjoint(p, s)

    weakly = is_graded_weakly_s_primary(p, s)
    assert weakly.verdict
    assert weakly.vacuous

    s_primary = is_graded_s_primary(p, s)
    assert s_primary.verdict
    assert s_primary.witness_s == z12i.element(3)
    assert replay_certificate(s_primary, p, s)

    assert is_g_s_primary(p, s, 0).verdict
    assert is_g_weakly_s_primary(p, s, 1).verdict


def test_witness_search_prefers_smallest_s(z12):
    # (4) is already primary, so s = 1 works
    cert = is_graded_s_primary(principal(z12, 4), closure(z12, [5]))
    assert cert.witness_s == z12.one


def test_preconditions(z12, z12i):
    s = closure(z12, [3])
    with pytest.raises(NotProperError, match="ideal not proper"):
        is_graded_weakly_s_primary(whole(z12), closure(z12, []))
    with pytest.raises(DisjointnessError):
        is_graded_weakly_s_primary(principal(z12, 3), s)
    with pytest.raises(MultiplicativeSetError):
        is_g_weakly_s_primary(zero(z12i), closure(z12i, [[0, 1]]), 0)


def test_idealwise_forms(z12):
    p = principal(z12, 4)
    s = closure(z12, [])
    literal = idealwise_weakly_s_primary(p, s, corrected=False)
    corrected = idealwise_weakly_s_primary(p, s, corrected=True)
    assert not literal.verdict
    assert corrected.verdict
    assert is_graded_weakly_s_primary(p, s).verdict
    assert replay_certificate(literal, p, s)


def test_hierarchy_over_lattice(z12i):
    s = closure(z12i, [3])
    for p in enumerate_graded_ideals(z12i):
        if not p.is_proper or not is_disjoint(p, s):
            continue
        table = classify_full(z12i, p, s)
        assert table.consistent
        if table.row(GRADED_PRIMARY).verdict:
            assert table.row(GRADED_WEAKLY_PRIMARY).verdict
        if table.row(GRADED_S_PRIMARY).verdict:
            assert table.row(GRADED_WEAKLY_S_PRIMARY).verdict


def test_classification_table_rows(z12i):
    p = zero(z12i)
    table = classify_full(z12i, p, closure(z12i, [3]))
    assert table.row(GRADED_WEAKLY_S_PRIMARY).verdict
    assert table.row(G_S_PRIMARY, 0).verdict
    assert table.row(G_WEAKLY_S_PRIMARY, 1).verdict
    record = table.to_dict()
    assert record["ring"] == "Z_12[i]"
    assert record["mult_set"] == [[1, 0], [3, 0], [9, 0]]


def test_every_certificate_replays(z12, dual4):
    for ring in (z12, dual4):
        for s in (closure(ring, []), closure(ring, [3])):
            for p in enumerate_graded_ideals(ring):
                if not p.is_proper or not is_disjoint(p, s):
                    continue
                table = classify_full(ring, p, s)
                for cert in table.rows:
                    assert replay_certificate(cert, p, s if cert.grade is None else table.grade_set)


@pytest.mark.slow
def test_every_certificate_replays_on_default_corpus(default_corpus):
    for entry in default_corpus.rings:
        for p, s in entry.disjoint_pairs():
            table = classify_full(entry.ring, p, s)
            for cert in table.rows:
                candidates = s if cert.grade is None else table.grade_set
                assert replay_certificate(cert, p, candidates), f"{entry.label} | P={p} | S={s} | {cert.property}"
