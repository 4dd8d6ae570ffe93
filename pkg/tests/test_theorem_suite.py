import pytest

from graded_ideals.constants import STATUS_FALSIFIED, STATUS_VERIFIED
from graded_ideals.errors import UnknownTheoremError
from graded_ideals.theorem_suite import REGISTRY, Judge, replay_report, run_all, run_theorem

KNOWN_FALSE = ["prop2", "prop9_literal", "thm6", "ex2_s_primary_audit", "ex5_s_primary_audit"]

# statements that hold in every commutative graded ring
ALWAYS_TRUE = [
    "prop1", "prop5", "rem2", "prop6", "prop7", "lem2", "lem3", "prop8", "thm1",
    "coro2_i", "coro2_ii", "coro2_iii", "coro2_iv", "prop10_i", "prop10_ii", "prop11_literal",
    "lem4", "lem5", "rem3", "prop14", "prop15", "prop16", "prop17", "prop18",
    "coro3", "coro4", "thm9_i", "thm9_ii", "thm2_stable_colon",
]


def test_registry_covers_every_claim():
    for theorem_id in KNOWN_FALSE + ALWAYS_TRUE:
        assert theorem_id in REGISTRY
    assert REGISTRY["prop9_corrected"].label == "corrected"
    assert REGISTRY["thm7_exploratory"].label == "exploratory"


@pytest.mark.parametrize("theorem_id", KNOWN_FALSE)
def test_known_counterexamples(small_corpus, theorem_id):
    report = run_theorem(theorem_id, small_corpus)
    assert report.status == STATUS_FALSIFIED
    assert report.counterexample is not None
    assert replay_report(report)


def test_prop2_counterexample_lives_in_z12(small_corpus):
    report = run_theorem("prop2", small_corpus)
    assert report.counterexample.instance_id.startswith("Z_12 | ")


def test_audits_report_the_witness(small_corpus):
    report = run_theorem("ex2_s_primary_audit", small_corpus)
    assert report.counterexample.detail == "brute force verdict=True, witness s=3"


@pytest.mark.parametrize("theorem_id", ["prop1", "prop7", "lem2", "lem3"])
def test_verified_on_small_corpus(small_corpus, theorem_id):
    report = run_theorem(theorem_id, small_corpus)
    assert report.status == STATUS_VERIFIED
    assert report.nonvacuous > 0
    assert replay_report(report)


def test_valid_statements_never_falsified(small_corpus):
    for report in run_all(small_corpus, ALWAYS_TRUE):
        assert report.status != STATUS_FALSIFIED, report.theorem_id


def test_unknown_theorem(small_corpus):
    with pytest.raises(UnknownTheoremError):
        run_theorem("prop99", small_corpus)


def test_reports_are_deterministic(small_corpus):
    first = run_theorem("prop2", small_corpus, Judge()).to_dict(include_timing=False)
    second = run_theorem("prop2", small_corpus, Judge()).to_dict(include_timing=False)
    assert first == second
    assert "wall_time" not in first


def test_run_all_orders_by_id(small_corpus):
    reports = run_all(small_corpus, ["thm6", "prop1"])
    assert [r.theorem_id for r in reports] == ["prop1", "thm6"]


def test_stable_colon_at_the_contraction_witness(small_corpus):
    report = run_theorem("thm2_stable_colon", small_corpus)
    assert report.status == STATUS_VERIFIED
    assert report.nonvacuous > 0


# first counterexample on the default corpus, by instance id prefix
DEFAULT_CORPUS_FALSE = {
    "thm4i": "Z_12 x Z_2 | ",
    "prop13": "",
    "lem1": "",
    "thm2": "Z_30 | P=(15) | S={1, 16}",
    "thm3": "",
    "thm8": "Z_8 | P=(4) | S={1} | g=0",
    "prop9_corrected": "Z_12[x]/(x^2) | P=(x) | S={1}",
}


@pytest.mark.slow
def test_default_corpus_counterexamples(default_corpus):
    expected = {theorem_id: "" for theorem_id in KNOWN_FALSE}
    expected.update(DEFAULT_CORPUS_FALSE)
    for report in run_all(default_corpus, expected):
        assert report.status == STATUS_FALSIFIED, report.theorem_id
        assert report.counterexample.instance_id.startswith(expected[report.theorem_id]), report.theorem_id
        assert replay_report(report), report.theorem_id


@pytest.mark.slow
def test_default_corpus_lem1_witness_is_a_zero_divisor(default_corpus):
    report = run_theorem("lem1", default_corpus)
    assert "s=2i" in report.counterexample.detail


@pytest.mark.slow
def test_default_corpus_thm2_stable_colon(default_corpus):
    assert run_theorem("thm2_stable_colon", default_corpus).status == STATUS_VERIFIED
