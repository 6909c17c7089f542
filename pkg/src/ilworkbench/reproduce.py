# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Re-run the incompleteness and non-derivability results on shipped data.

Each target returns a list of :class:`Check` rows: what was checked, the expected and the
observed outcome.  ``icp1``/``icp2`` audit the two shipped generalized frames, ``edges``
searches a countermodel for every lattice edge and ``library`` re-checks every proof.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass

from ilworkbench.config import SearchConfig
from ilworkbench.correspondence import ConditionId, characteristic_instance, gen_condition
from ilworkbench.frames_io import shipped_model
from ilworkbench.genveltman import GenFrame
from ilworkbench.kernel import Scheme
from ilworkbench.library import verify_library
from ilworkbench.logics import EDGES, GEN_EDGES, added_schemes, get_logic
from ilworkbench.search import bounded_refute
from ilworkbench.syntax import render

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"check": self.name, "expected": self.expected, "actual": self.actual, "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class _Incompleteness:
    frame: str
    logic: str
    holds: tuple[ConditionId, ...]
    fails: ConditionId
    scheme: Scheme


_TARGETS = {
    "icp1": _Incompleteness("icp1", "IL-(J2,J4+,J5)", (ConditionId.G_J2, ConditionId.G_J4plus, ConditionId.G_J5),
                            ConditionId.G_J2plus, Scheme.J2plus),
    "icp2": _Incompleteness("icp2", "IL-(J1,J4,J5)", (ConditionId.G_J1, ConditionId.G_J4, ConditionId.G_J5),
                            ConditionId.G_J4plus, Scheme.J4plus),
}


def reproduce_frame(name: str, config: SearchConfig | None = None, max_worlds: int = 4) -> list[Check]:
    """Audit a shipped frame: the logic's conditions hold, the added one fails, and search agrees."""
    target = _TARGETS[name]
    model = shipped_model(target.frame)
    frame = model.frame
    assert isinstance(frame, GenFrame)
    checks = [Check(f"{c.value} holds", True, bool(gen_condition(frame, c))) for c in target.holds]
    checks.append(Check(f"{target.fails.value} holds", False, bool(gen_condition(frame, target.fails))))
    inst = characteristic_instance(target.scheme)
    val = ", ".join(f"{p}@{{{', '.join(sorted(ws))}}}" for p, ws in sorted(model.valuation.items()))
    checks.append(Check(f"x forces {render(inst)}", False, model.forces("x", inst), val))
    logic = get_logic(target.logic)
    cm = bounded_refute(logic, inst, max_worlds, config)
    detail = f"{cm.size} worlds, {cm.frames_tried} frames" if cm else "none within budget"
    checks.append(Check(f"{logic} has a countermodel to {render(inst)}", True, cm is not None, detail))
    return checks


def reproduce_edges(config: SearchConfig | None = None, max_worlds: int = 5) -> list[Check]:
    """For every lattice edge, a countermodel to each added scheme's instance in the smaller logic."""
    checks: list[Check] = []
    for smaller_name, larger_name in (*EDGES, *GEN_EDGES):
        smaller, larger = get_logic(smaller_name), get_logic(larger_name)
        for scheme in added_schemes(smaller, larger):
            inst = characteristic_instance(scheme)
            cm = bounded_refute(smaller, inst, max_worlds, config)
            detail = f"{cm.size} worlds" if cm else "none within budget"
            logger.info("%s < %s: %s %s", smaller, larger, scheme.label, detail)
            checks.append(Check(f"{smaller} does not prove {scheme.label} ({larger})", True, cm is not None, detail))
    return checks


def reproduce_library() -> list[Check]:
    return [Check(f"{e.name} in {e.logic.name}", True, v.accepted, v.reason) for e, v in verify_library()]


TARGETS: dict[str, Callable[..., list[Check]]] = {
    "icp1": lambda config=None: reproduce_frame("icp1", config),
    "icp2": lambda config=None: reproduce_frame("icp2", config),
    "edges": lambda config=None: reproduce_edges(config),
    "library": lambda config=None: reproduce_library(),
}


def reproduce(target: str, config: SearchConfig | None = None) -> list[Check]:
    """Run one target; raises ``KeyError`` listing the available targets."""
    if target not in TARGETS:
        raise KeyError(f"Unknown target {target!r}. Available targets: {', '.join(TARGETS)}")
    return TARGETS[target](config)
