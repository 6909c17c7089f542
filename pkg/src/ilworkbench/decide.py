# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Decision procedure: practical (bounded search) or exact (``K_L`` plus canonical models)."""

from __future__ import annotations

import enum
import logging
import re
from dataclasses import dataclass
from typing import Any

from ilworkbench.canonical import fmp_bound
from ilworkbench.config import WorkbenchConfig
from ilworkbench.frames_io import model_to_dict
from ilworkbench.logics import Logic
from ilworkbench.oracle import Oracle, Outcome
from ilworkbench.oracles import get_oracle_class
from ilworkbench.oracles.exact import ExactOracle
from ilworkbench.search import Countermodel
from ilworkbench.semantics import BudgetExceeded
from ilworkbench.syntax import Formula, adequate_closure, render

logger = logging.getLogger(__name__)


class Status(str, enum.Enum):
    THEOREM = "theorem"
    NON_THEOREM = "non_theorem"
    UNKNOWN = "unknown"

    @property
    def exit_code(self) -> int:
        return {"theorem": 0, "non_theorem": 10, "unknown": 20}[self.value]


@dataclass(frozen=True)
class Mode:
    """``practical`` with a world budget, or ``exact``."""

    kind: str
    budget: int | None = None

    @classmethod
    def exact(cls) -> Mode:
        return cls("exact")

    @classmethod
    def practical(cls, budget: int) -> Mode:
        if budget < 1:
            raise ValueError("practical budget must be at least 1")
        return cls("practical", budget)

    @property
    def oracle(self) -> str:
        return "exact" if self.kind == "exact" else "bounded"

    def __str__(self) -> str:
        return self.kind if self.budget is None else f"{self.kind}:{self.budget}"


_MODE = re.compile(r"^(?:(exact)|practical:(\d+))$")


def parse_mode(text: str) -> Mode:
    """``exact`` or ``practical:N``."""
    m = _MODE.match(text.strip())
    if not m:
        raise ValueError(f"invalid mode {text!r}: expected 'exact' or 'practical:N'")
    return Mode.exact() if m.group(1) else Mode.practical(int(m.group(2)))


@dataclass(frozen=True)
class Decision:
    logic: Logic
    formula: Formula
    mode: Mode
    status: Status
    countermodel: Countermodel | None = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "logic": self.logic.name,
            "formula": render(self.formula),
            "mode": str(self.mode),
            "status": self.status.value,
            "detail": self.detail,
        }
        if self.countermodel is not None:
            out["countermodel"] = {"root": self.countermodel.world, **model_to_dict(self.countermodel.model)}
        return out


def _scaled(n: int) -> str:
    return str(n) if n < 10**9 else f"~2^{n.bit_length() - 1}"


_STATUS = {Outcome.PROVED: Status.THEOREM, Outcome.REFUTED: Status.NON_THEOREM, Outcome.UNKNOWN: Status.UNKNOWN}


def decide(logic: Logic, a: Formula, mode: Mode | None = None, config: WorkbenchConfig | None = None,
           oracle: Oracle | None = None) -> Decision:
    """Decide ``logic |- a``.

    Exact mode settles the answer by type elimination over the candidate family for the
    adequate closure of *a*; the finite-model world bound is computed and reported, never
    searched, so agreement with a bounded search at that bound is only checked at small sizes.
    Exact mode never answers ``unknown``; when the adequate set or the candidate family is
    over the configured limits it raises ``BudgetExceeded`` naming the model bound.
    """
    cfg = config or WorkbenchConfig()
    mode = mode or Mode.exact()
    if mode.budget is not None:
        cfg = cfg.with_search(max_worlds=mode.budget)
    if oracle is None:
        oracle = get_oracle_class(mode.oracle).from_config(cfg)
    if mode.kind != "exact":
        verdict = oracle.query(logic, a)
    else:
        ctx = oracle.context(a) if isinstance(oracle, ExactOracle) else adequate_closure([a])
        bound = fmp_bound(logic, ctx)
        logger.info("|Phi| = %d, model bound %s worlds", len(ctx), _scaled(bound))
        try:
            verdict = oracle.query(logic, a)
        except BudgetExceeded as exc:
            raise BudgetExceeded(f"{exc}; the model bound is {_scaled(bound)} worlds", bound, exc.limit) from exc
        if verdict.outcome is Outcome.UNKNOWN:
            raise RuntimeError(f"{oracle.name} oracle answered unknown in exact mode")
    return Decision(logic, a, mode, _STATUS[verdict.outcome], verdict.countermodel, verdict.detail)
