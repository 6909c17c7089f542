# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Abstract base class for provability oracles."""

from __future__ import annotations

import enum
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar

from ilworkbench.config import WorkbenchConfig
from ilworkbench.logics import Logic
from ilworkbench.mcs import MCSet, candidate_types
from ilworkbench.search import Countermodel
from ilworkbench.syntax import AdequateContext, Formula, Neg

logger = logging.getLogger(__name__)


class Outcome(str, enum.Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Answer to ``L |- A?``.  Refutations always carry a checked countermodel."""

    outcome: Outcome
    countermodel: Countermodel | None = None
    detail: str = ""

    @classmethod
    def proved(cls, detail: str = "") -> Verdict:
        return cls(Outcome.PROVED, None, detail)

    @classmethod
    def refuted(cls, countermodel: Countermodel, detail: str = "") -> Verdict:
        return cls(Outcome.REFUTED, countermodel, detail)

    @classmethod
    def unknown(cls, detail: str = "") -> Verdict:
        return cls(Outcome.UNKNOWN, None, detail)


class OracleExhausted(RuntimeError):
    """Some candidate sets could be neither confirmed nor ruled out."""

    def __init__(self, undecided: list[MCSet], consistent: list[MCSet]) -> None:
        super().__init__(f"{len(undecided)} candidate set(s) undecided; {len(consistent)} confirmed consistent")
        self.undecided = undecided
        self.consistent = consistent


class Oracle(ABC):
    """Decides provability in one of the registered logics.

    Subclasses set ``name`` (the entry-point name) and implement :meth:`query`.  The default
    :meth:`kl` asks :meth:`query` about every candidate set; oracles with a cheaper route to
    ``K_L`` override it.
    """

    name: ClassVar[str] = ""

    def __init__(self, config: WorkbenchConfig | None = None) -> None:
        self.config = config or WorkbenchConfig()

    @classmethod
    def from_config(cls, config: WorkbenchConfig) -> Oracle:
        return cls(config)

    @abstractmethod
    def query(self, logic: Logic, formula: Formula) -> Verdict:
        """Decide ``logic |- formula``, or answer ``unknown``."""

    def kl(self, logic: Logic, ctx: AdequateContext) -> list[MCSet]:
        consistent: list[MCSet] = []
        undecided: list[MCSet] = []
        for m in candidate_types(logic, ctx, self.config.exact.ceiling):
            gamma = MCSet(ctx, m)
            verdict = self.query(logic, Neg(gamma.conjunction()))
            if verdict.outcome is Outcome.REFUTED:
                consistent.append(gamma)
            elif verdict.outcome is Outcome.UNKNOWN:
                undecided.append(gamma)
        logger.info("%s oracle: %d consistent, %d undecided", self.name, len(consistent), len(undecided))
        if undecided:
            raise OracleExhausted(undecided, consistent)
        return consistent
