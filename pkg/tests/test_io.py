import json

import pytest

from dtwmean import io
from dtwmean.core import AttributeSpace, LossFunction, euclidean_space, symbolic_space


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_csv_ragged_rows(tmp_path):
    path = write(tmp_path, "s.csv", "# comment\n0,1,0\n\n2,3\n")
    attrs, sample = io.load_sample(path)
    assert attrs == AttributeSpace.real() and sample == [(0, 1, 0), (2, 3)]


def test_csv_rejects_text(tmp_path):
    with pytest.raises(ValueError, match="non-numeric"):
        io.load_sample(write(tmp_path, "s.csv", "0,a\n"))


def test_json_kinds(tmp_path):
    attrs, sample = io.load_sample(write(tmp_path, "v.json", json.dumps({"dim": 2, "series": [[[0, 1], [2, 3]]]})))
    assert attrs == AttributeSpace.vector(2) and sample == [((0, 1), (2, 3))]
    attrs, sample = io.load_sample(write(tmp_path, "a.json", json.dumps({"alphabet": ["a", "b"], "series": [["a"]]})))
    assert attrs.alphabet == ("a", "b") and sample == [("a",)]


def test_json_requires_series(tmp_path):
    with pytest.raises(ValueError):
        io.load_sample(write(tmp_path, "x.json", "{}"))


def test_space_config_round_trip():
    doc = {"local": {"kind": "table", "matrix": [[0, 2], [2, 0]]}, "transform": "identity",
           "losses": [{"w": 1.0, "p": 1.0}]}
    attrs = AttributeSpace.symbols((0, 1))
    space, losses = io.parse_space(doc, attrs)
    assert space == symbolic_space((0, 1), [[0, 2], [2, 0]])
    again, _ = io.parse_space(io.space_to_json(space, losses), attrs)
    assert again == space


def test_defaults():
    space, losses = io.default_space(AttributeSpace.real())
    assert space == euclidean_space() and losses is None
    problem = io.make_problem([(0, 1), (1,)], space, None)
    assert problem.losses == (LossFunction(1.0, 2.0),) * 2


def test_unknown_local_distance():
    with pytest.raises(ValueError):
        io.parse_space({"local": "cosine"}, AttributeSpace.real())


def test_sample_json_round_trip(tmp_path):
    attrs = AttributeSpace.vector(2)
    series = [((0.0, 1.0), (2.0, 3.0))]
    path = write(tmp_path, "s.json", json.dumps(io.sample_to_json(attrs, series)))
    assert io.load_sample(path) == (attrs, series)
