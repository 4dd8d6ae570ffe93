import pytest

from graded_ideals.corpus import CORPUS_PRESETS, Corpus, build_corpus
from graded_ideals.ring_core import (
    GradedRing,
    make_cyclic_graded,
    make_gaussian_quotient,
    make_poly_quotient,
)


@pytest.fixture(scope="session")
def z12() -> GradedRing:
    return make_cyclic_graded(12)


@pytest.fixture(scope="session")
def z30() -> GradedRing:
    return make_cyclic_graded(30)


@pytest.fixture(scope="session")
def z12i() -> GradedRing:
    return make_gaussian_quotient(12)


@pytest.fixture(scope="session")
def dual4() -> GradedRing:
    """Z_4[x]/(x^2), x in degree 1 of Z_2."""
    return make_poly_quotient(4, [0, 0, 1], 1)


@pytest.fixture(scope="session")
def small_corpus() -> Corpus:
    return build_corpus(CORPUS_PRESETS["small"])


@pytest.fixture(scope="session")
def default_corpus() -> Corpus:
    return build_corpus(CORPUS_PRESETS["default"])
