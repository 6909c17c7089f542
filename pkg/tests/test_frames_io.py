"""Tests for reading and writing frame and model files."""

from __future__ import annotations

import json

import pytest

from ilworkbench.frames_io import dumps, model_to_dict, read_model, shipped_model, write_model
from ilworkbench.genveltman import GenFrame
from ilworkbench.semantics import FrameError
from ilworkbench.veltman import VeltmanFrame

VELTMAN = {
    "worlds": ["x", "y", "z"],
    "R": [["x", "y"], ["x", "z"], ["y", "z"]],
    "S": {"x": [["y", "z"]]},
    "val": {"p": ["y"], "q": ["z"]},
}


def test_read_veltman_json(write_json, f):
    model = read_model(write_json("m.json", VELTMAN))
    assert isinstance(model.frame, VeltmanFrame)
    assert model.frame.S_at("x") == {("y", "z")}
    assert model.forces("x", f("p |> q"))


def test_read_yaml(tmp_path, f):
    path = tmp_path / "m.yaml"
    path.write_text("worlds: [x, y]\nR: [[x, y]]\nS:\n  x:\n    y: [[y]]\nval:\n  p: [y]\n")
    model = read_model(path)
    assert isinstance(model.frame, GenFrame)
    assert model.forces("x", f("p |> p"))


def test_kind_detection_and_override(write_json):
    path = write_json("plain.json", {"worlds": ["a"], "R": []})
    assert isinstance(read_model(path).frame, VeltmanFrame)
    assert isinstance(read_model(path, "gen").frame, GenFrame)
    declared = write_json("declared.json", {"class": "gen", "worlds": ["a"]})
    assert isinstance(read_model(declared).frame, GenFrame)


def test_non_antichain_needs_auto_reduce(write_json):
    data = {"worlds": ["x", "y"], "R": [["x", "y"]], "S": {"x": {"y": [["y"], ["x", "y"]]}}}
    path = write_json("g.json", data)
    with pytest.raises(FrameError) as exc:
        read_model(path)
    assert "antichain" in str(exc.value)
    model = read_model(path, auto_reduce=True)
    assert model.frame.generators("x", "y") == (frozenset({"y"}),)


@pytest.mark.parametrize(
    "data, message",
    [
        ([], "must contain a mapping"),
        ({"R": []}, "no 'worlds'"),
        ({"worlds": ["a", "a"]}, "duplicate"),
        ({"worlds": ["a"], "R": [["a"]]}, "expected a pair"),
        ({"worlds": ["a"], "S": {"a": {"b": [[]]}}}, "empty generator"),
        ({"worlds": ["a"], "val": ["p"]}, "val must map"),
    ],
)
def test_malformed_files(write_json, data, message):
    path = write_json("bad.json", data)
    with pytest.raises(FrameError) as exc:
        read_model(path)
    assert message in str(exc.value)


def test_undecodable_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(FrameError):
        read_model(path)


def test_write_and_read_back(tmp_path, write_json):
    model = read_model(write_json("m.json", VELTMAN))
    out = tmp_path / "copy.json"
    write_model(model, out)
    again = read_model(out)
    assert model_to_dict(again) == model_to_dict(model)
    assert json.loads(dumps(model))["class"] == "veltman"


def test_shipped_frames():
    for name in ("icp1", "icp2"):
        model = shipped_model(name)
        assert isinstance(model.frame, GenFrame)
        assert model.frame.check()
        assert model_to_dict(model)["class"] == "gen"
    with pytest.raises(KeyError):
        shipped_model("icp3")
