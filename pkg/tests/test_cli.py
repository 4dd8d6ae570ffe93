import json

import pytest

from graded_ideals.cli import main
from graded_ideals.constants import EXIT_CAP_EXCEEDED, EXIT_OK, EXIT_PARSE_ERROR, EXIT_PRECONDITION


def _write_spec(tmp_path, document) -> str:
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def test_classify_text(tmp_path, capsys):
    spec = _write_spec(tmp_path, {"ring": {"kind": "cyclic", "n": 30}, "ideal": [6]})
    assert main(["classify", "--spec", spec]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ring: Z_30" in out
    assert "graded_weakly_primary: false, counter=(2,3)" in out


def test_classify_json_is_reproducible(tmp_path, capsys):
    spec = _write_spec(tmp_path, {"ring": {"kind": "gaussian", "n": 12}, "ideal": [], "mult_set": [[3, 0]]})
    outputs = []
    for _ in range(2):
        assert main(["classify", "-s", spec, "--json", "--no-timestamp"]) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    document = json.loads(outputs[0])
    assert document["generated_at"] is None
    assert document["classification"]["ring"] == "Z_12[i]"


def test_radical_and_enumerate(tmp_path, capsys):
    spec = _write_spec(tmp_path, {"ring": {"kind": "cyclic", "n": 12}, "ideal": [4]})
    assert main(["radical", "--spec", spec]) == EXIT_OK
    assert "Grad((4)) = (2)" in capsys.readouterr().out
    assert main(["enumerate", "--spec", spec, "--json", "--no-timestamp"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["generated_at"] is None


def test_localize(tmp_path, capsys):
    spec = _write_spec(tmp_path, {"ring": {"kind": "cyclic", "n": 12}, "ideal": [2], "mult_set": [3]})
    assert main(["localize", "--spec", spec]) == EXIT_OK
    assert capsys.readouterr().out
    without_set = _write_spec(tmp_path, {"ring": {"kind": "cyclic", "n": 12}})
    assert main(["localize", "--spec", without_set]) == EXIT_PARSE_ERROR


@pytest.mark.parametrize(
    "document, code",
    [
        ({"ring": {"kind": "cyclic", "n": 12}, "ideal": [1]}, EXIT_PRECONDITION),
        ({"ring": {"kind": "cyclic", "n": 12}, "ideal": [3], "mult_set": [3]}, EXIT_PRECONDITION),
        ({"ring": {"kind": "cyclic", "n": 70000}, "ideal": []}, EXIT_CAP_EXCEEDED),
        ({"ring": {"kind": "cyclic", "n": 12}}, EXIT_PARSE_ERROR),
    ],
)
def test_exit_codes(tmp_path, document, code):
    assert main(["classify", "--spec", _write_spec(tmp_path, document)]) == code


def test_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ring:", encoding="utf-8")
    assert main(["classify", "--spec", str(path)]) == EXIT_PARSE_ERROR


def test_witness(capsys):
    assert main(["witness"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert len(out.splitlines()) == 12


def test_theorems_json_is_byte_identical(capsys):
    argv = ["theorems", "--corpus", "small", "--id", "prop2", "--json", "--no-timestamp"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == first
    document = json.loads(first)
    assert document["corpus"] == "small"
    assert document["reports"][0]["status"] == "falsified"


def test_unknown_theorem_id(capsys):
    assert main(["theorems", "--corpus", "small", "--id", "prop99"]) == EXIT_PRECONDITION
