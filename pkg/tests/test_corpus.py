import pytest

from graded_ideals.corpus import CORPUS_PRESETS, CorpusConfig, build_corpus, instance_id, make_ring
from graded_ideals.errors import GradedAlgebraError
from graded_ideals.ideal_lattice import zero
from graded_ideals.mult_set import closure


def test_empty_config_gives_empty_corpus():
    corpus = build_corpus(CorpusConfig("empty"))
    assert corpus.rings == []
    assert corpus.instances() == []
    assert corpus.projections == []


def test_presets():
    default = CORPUS_PRESETS["default"]
    assert ("gaussian", 12) in default.rings
    assert ("cyclic", 30) in default.rings
    assert set(CORPUS_PRESETS) == {"small", "default", "large"}


def test_unknown_recipe():
    with pytest.raises(GradedAlgebraError):
        make_ring(("octonion", 4))


def test_small_corpus_lattices(small_corpus):
    z12 = small_corpus.find("Z_12")
    assert len(z12.ideals) == 6
    assert len(z12.proper_ideals) == 5
    assert len(z12.sets[0]) == 1
    assert z12.trivial_set == closure(z12.ring, [])
    with pytest.raises(KeyError):
        small_corpus.find("Z_99")


def test_small_corpus_instances(small_corpus):
    gaussian = small_corpus.find("Z_12[i]")
    target = instance_id(gaussian.ring, zero(gaussian.ring), closure(gaussian.ring, [3]))
    ids = [inst.instance_id for inst in small_corpus.instances()]
    assert target in ids
    assert len(ids) == len(set(ids))
    assert all(inst.disjoint for inst in small_corpus.instances())


def test_products_and_morphisms(small_corpus):
    assert [p.entry.label for p in small_corpus.products] == ["Z_12 x Z_2"]
    assert small_corpus.inclusions
    assert all(inc.hom.target is inc.entry.ring for inc in small_corpus.inclusions)
    assert all(not proj.kernel.is_zero for proj in small_corpus.projections)
