import json

import pytest

from graded_ideals.errors import SpecDocumentError
from graded_ideals.ideal_lattice import zero
from graded_ideals.mult_set import closure
from graded_ideals.spec_document import dump_spec, load_spec, parse_spec


def test_gaussian_document():
    spec = parse_spec(
        json.dumps({"ring": {"kind": "gaussian", "n": 12}, "ideal": [], "mult_set": [[3, 0]], "grade": 0})
    )
    assert spec.ring.label == "Z_12[i]"
    assert spec.ideal == zero(spec.ring)
    assert spec.mult_set == closure(spec.ring, [3])
    assert spec.grade == spec.ring.grade_group.identity


def test_optional_entries_default_to_none():
    spec = parse_spec('{"ring": {"kind": "cyclic", "n": 30}}')
    assert spec.ideal is None
    assert spec.mult_set is None
    assert spec.grade is None


def test_product_and_quotient_rings():
    product = parse_spec(
        json.dumps({"ring": {"kind": "product", "left": {"kind": "cyclic", "n": 12}, "right": {"kind": "cyclic", "n": 2}}})
    )
    assert product.ring.label == "Z_12 x Z_2"
    quotient = parse_spec(json.dumps({"ring": {"kind": "quotient", "base": {"kind": "cyclic", "n": 12}, "ideal": [4]}}))
    assert quotient.ring.order == 4


def test_poly_quotient_ring():
    spec = parse_spec(json.dumps({"ring": {"kind": "poly_quotient", "n": 4, "modulus_poly": [0, 0, 1], "x_grade": 1}}))
    assert spec.ring.order == 16
    assert spec.ring.grade_group.order == 2


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        '{"ring": {"kind": "cyclic"}}',
        '{"ring": {"kind": "cyclic", "n": 1}}',
        '{"ring": {"kind": "klein", "n": 4}}',
        '{"ring": {"kind": "cyclic", "n": 12}, "colour": "red"}',
        '{"ring": {"kind": "cyclic", "n": 12}, "grade": [0, 1]}',
    ],
)
def test_malformed_documents(text):
    with pytest.raises(SpecDocumentError):
        parse_spec(text)


def test_load_and_dump(tmp_path):
    path = tmp_path / "ring.json"
    path.write_text('{"ring": {"kind": "cyclic", "n": 12}, "ideal": [4]}', encoding="utf-8")
    spec = load_spec(path)
    assert spec.ideal.size == 3
    text = dump_spec(spec.document)
    assert text.endswith("\n")
    assert parse_spec(text).document == spec.document
    with pytest.raises(SpecDocumentError):
        load_spec(tmp_path / "missing.json")
