# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Reading and writing frame/model files.

Veltman frames list ``S`` as pairs, ``{"x": [["y", "z"], ...]}``; generalized frames list
generators, ``{"x": {"y": [["z1", "z2"], ...]}}``.  ``val`` is optional.  Files ending in
``.yaml``/``.yml`` are read with PyYAML, everything else as JSON.  Output is always
canonical JSON (sorted worlds, sorted pairs, two-space indent).
"""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from importlib import resources
from pathlib import Path
from typing import Any

import yaml

from ilworkbench.genveltman import GenFrame, GenModel, antichain_reduce
from ilworkbench.semantics import Frame, FrameError, Model, natural_key
from ilworkbench.veltman import VeltmanFrame, VeltmanModel

logger = logging.getLogger(__name__)

SHIPPED = ("icp1", "icp2")


def _pairs(raw: Any, what: str) -> list[tuple[str, str]]:
    if not isinstance(raw, list):
        raise FrameError(f"{what} must be a list of pairs")
    out = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise FrameError(f"{what}: expected a pair, got {item!r}")
        out.append((str(item[0]), str(item[1])))
    return out


def _frame_kind(data: Mapping[str, Any], kind: str) -> str:
    if kind != "auto":
        return kind
    declared = data.get("class")
    if declared in ("veltman", "gen", "generalized"):
        return "gen" if declared != "veltman" else "veltman"
    s = data.get("S") or {}
    if any(isinstance(v, Mapping) for v in s.values()):
        return "gen"
    return "veltman"


def _gen_S(raw: Mapping[str, Any], auto_reduce: bool) -> dict[str, dict[str, list[frozenset[str]]]]:
    out: dict[str, dict[str, list[frozenset[str]]]] = {}
    for x, row in raw.items():
        if not isinstance(row, Mapping):
            raise FrameError(f"S[{x!r}] must map worlds to generator lists")
        for y, gens in row.items():
            if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
                raise FrameError(f"S[{x!r}][{y!r}] must be a list of world lists")
            sets = [frozenset(str(w) for w in g) for g in gens]
            if any(not g for g in sets):
                raise FrameError(f"S[{x!r}][{y!r}] contains an empty generator")
            reduced = antichain_reduce(sets)
            if len(reduced) != len(set(sets)) or len(set(sets)) != len(sets):
                if not auto_reduce:
                    raise FrameError(f"S[{x!r}][{y!r}] is not an antichain (use auto-reduce to minimize it)")
                logger.info("reduced generators of S[%s][%s] from %d to %d", x, y, len(sets), len(reduced))
            out.setdefault(str(x), {})[str(y)] = list(reduced)
    return out


def frame_from_dict(data: Mapping[str, Any], kind: str = "auto", auto_reduce: bool = False) -> Frame:
    """Build a frame from decoded JSON/YAML; *kind* is ``auto``, ``veltman`` or ``gen``."""
    if not isinstance(data, Mapping):
        raise FrameError("frame file must contain a mapping")
    if "worlds" not in data:
        raise FrameError("frame file has no 'worlds'")
    worlds = [str(w) for w in data["worlds"]]
    if len(set(worlds)) != len(worlds):
        raise FrameError("duplicate world names")
    R = _pairs(data.get("R", []), "R")
    raw_s = data.get("S") or {}
    if not isinstance(raw_s, Mapping):
        raise FrameError("S must be a mapping from worlds")
    if _frame_kind(data, kind) == "gen":
        return GenFrame.build(worlds, R, _gen_S(raw_s, auto_reduce), reduce=False)
    return VeltmanFrame.build(worlds, R, {str(x): _pairs(p, f"S[{x!r}]") for x, p in raw_s.items()})


def model_from_dict(data: Mapping[str, Any], kind: str = "auto", auto_reduce: bool = False) -> Model:
    frame = frame_from_dict(data, kind, auto_reduce)
    raw_val = data.get("val") or {}
    if not isinstance(raw_val, Mapping):
        raise FrameError("val must map variables to world lists")
    val = {str(p): frozenset(str(w) for w in ws) for p, ws in raw_val.items()}
    if isinstance(frame, GenFrame):
        return GenModel(frame, val)
    assert isinstance(frame, VeltmanFrame)
    return VeltmanModel(frame, val)


def _decode(text: str, path: Path | None) -> Any:
    try:
        if path is not None and path.suffix.lower() in (".yaml", ".yml"):
            return yaml.safe_load(text)
        return json.loads(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise FrameError(f"cannot decode {path or 'frame data'}: {exc}") from exc


def read_model(path: str | Path, kind: str = "auto", auto_reduce: bool = False) -> Model:
    """Load a frame or model file; ``FrameError`` on malformed input, ``OSError`` if unreadable."""
    p = Path(path)
    return model_from_dict(_decode(p.read_text(encoding="utf-8"), p), kind, auto_reduce)


def shipped_model(name: str) -> Model:
    """One of the frames packaged under ``ilworkbench/data`` (``icp1``, ``icp2``)."""
    if name not in SHIPPED:
        raise KeyError(f"Unknown shipped frame {name!r}. Available: {', '.join(SHIPPED)}")
    text = (resources.files("ilworkbench") / "data" / f"{name}.json").read_text(encoding="utf-8")
    return model_from_dict(json.loads(text), "gen")


def model_to_dict(model: Model | Frame) -> dict[str, Any]:
    frame = model.frame if isinstance(model, Model) else model
    assert isinstance(frame, (VeltmanFrame, GenFrame))
    out: dict[str, Any] = {"class": "gen" if isinstance(frame, GenFrame) else "veltman", **frame.to_dict()}
    if isinstance(model, Model):
        out["val"] = {p: sorted(ws, key=natural_key) for p, ws in sorted(model.valuation.items())}
    return out


def dumps(model: Model | Frame) -> str:
    return json.dumps(model_to_dict(model), indent=2, ensure_ascii=False)


def write_model(model: Model | Frame, path: str | Path) -> None:
    Path(path).write_text(dumps(model) + "\n", encoding="utf-8")

