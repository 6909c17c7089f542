"""Shared fixtures for ilworkbench tests."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from ilworkbench.genveltman import GenFrame, GenModel
from ilworkbench.syntax import Formula, parse
from ilworkbench.veltman import VeltmanFrame, VeltmanModel


@pytest.fixture(autouse=True)
def _isolate_config(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep a developer's .ilworkbench.toml and ILWORKBENCH_* variables out of the tests."""
    for name in ("ILWORKBENCH_MAX_WORLDS", "ILWORKBENCH_THREADS", "ILWORKBENCH_ORACLE", "ILWORKBENCH_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("ILWORKBENCH_CONFIG", str(tmp_path / "no-such-config.toml"))


@pytest.fixture
def f():
    """Shorthand parser: ``f("p |> q")``."""

    def _parse(text: str) -> Formula:
        return parse(text)

    return _parse


@pytest.fixture
def chain_frame() -> VeltmanFrame:
    """x R y, x R z, y R z with y S_x z (and the reflexive pairs S_x needs for J1)."""
    return VeltmanFrame.build(
        ["x", "y", "z"],
        [("x", "y"), ("x", "z"), ("y", "z")],
        {"x": [("y", "z"), ("y", "y"), ("z", "z")]},
    )


@pytest.fixture
def chain_model(chain_frame: VeltmanFrame) -> VeltmanModel:
    return VeltmanModel(chain_frame, {"p": frozenset({"y"}), "q": frozenset({"z"})})


@pytest.fixture
def split_frame() -> GenFrame:
    """x sees y and z; y S_x {y, z} is the only generator."""
    return GenFrame.build(["x", "y", "z"], [("x", "y"), ("x", "z")], {"x": {"y": [["y", "z"]]}})


@pytest.fixture
def split_model(split_frame: GenFrame) -> GenModel:
    return GenModel(split_frame, {"p": frozenset({"y"}), "q": frozenset({"y", "z"}), "r": frozenset({"z"})})


@pytest.fixture
def write_json(tmp_path: Path):
    """Write a dict to ``tmp_path/<name>`` and return the path as a string."""

    def _write(name: str, data: dict) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return _write
