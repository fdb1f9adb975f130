import json

import pytest

from corpus import bimodule_corpus, double_corpus, matched_pair_corpus
from qflex import io
from qflex.errors import ParseError
from qflex.fixtures import dual_numbers
from qflex.octonion import build_octonion


def test_algebra_round_trip_bytes():
    o = build_octonion(-1)
    text = io.serialize(o)
    again = io.algebra_from_json(json.loads(text))
    assert again == o
    assert io.serialize(again) == text
    assert text.endswith("\n")
    data = json.loads(text)
    assert list(data) == ["dim", "q", "basis", "products"]
    assert data["q"] == "-1"
    assert {"i": 1, "j": 2, "coeffs": {"4": "1"}} in data["products"]
    assert {"i": 1, "j": 1, "coeffs": {"0": "-1"}} in data["products"]
    keys = [(p["i"], p["j"]) for p in data["products"]]
    assert keys == sorted(keys) and len(keys) == 64


def test_all_kinds_round_trip(tmp_path):
    objs = [bimodule_corpus()[3][1], matched_pair_corpus()[0][0][1], double_corpus()[4][1]]
    loaders = [io.load_bimodule, io.load_matched_pair, io.load_double]
    for obj, load in zip(objs, loaders):
        path = tmp_path / "x.json"
        io.write(obj, path)
        back = load(path)
        assert io.serialize(back) == path.read_text()


def test_algebra_reference_by_path(tmp_path):
    alg = dual_numbers(0)
    io.write(alg, tmp_path / "a.json")
    (tmp_path / "b.json").write_text(json.dumps({
        "algebra": "a.json", "vdim": 1,
        "l": [[["1"]], [["0"]]], "r": [[["1"]], [["0"]]],
    }))
    b = io.load_bimodule(tmp_path / "b.json")
    assert b.algebra == alg and b.vdim == 1


@pytest.mark.parametrize("data,where", [
    ({"dim": 2}, "missing key 'q'"),
    ({"dim": 2, "q": "1.5"}, "$.q"),
    ({"dim": 2, "q": "0", "products": [{"i": 0, "j": 5, "coeffs": {}}]}, "$.products[0].j"),
    ({"dim": 2, "q": "0", "products": [{"i": 0, "j": 0, "coeffs": {"0": 0.5}}]}, "$.products[0].coeffs.0"),
    ({"dim": -1, "q": "0"}, "$.dim"),
    ({"dim": 2, "q": "0", "basis": ["a"]}, "basis names"),
])
def test_parse_errors_have_locations(data, where):
    with pytest.raises(ParseError) as info:
        io.algebra_from_json(data)
    assert where in str(info.value)


def test_bad_json_location(tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"dim": 2,\n  oops}')
    with pytest.raises(ParseError) as info:
        io.load_algebra(p)
    assert "g.json:2:" in str(info.value)


def test_matrix_shape_errors():
    alg = io.algebra_to_json(dual_numbers(0))
    with pytest.raises(ParseError) as info:
        io.bimodule_from_json({"algebra": alg, "vdim": 2, "l": [[["1"]], [["0"]]], "r": []})
    assert "$.l[0]" in str(info.value)


def test_max_dim_env(monkeypatch):
    monkeypatch.setenv("QFLEX_MAX_DIM", "4")
    with pytest.raises(ParseError):
        io.algebra_from_json(io.algebra_to_json(build_octonion()))
    monkeypatch.setenv("QFLEX_MAX_DIM", "8")
    assert io.algebra_from_json(io.algebra_to_json(build_octonion())).dim == 8
