# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Exact oracle: decides provability from ``K_L`` computed by type elimination.

``L |- A`` iff no set of ``K_L`` over the adequate closure of ``{A}`` contains ``~A``.  A
refutation is backed by a countermodel: a short bounded search first, then the canonical
construction for the logic.
"""

from __future__ import annotations

import logging
from dataclasses import replace

from ilworkbench.canonical import canonical_model
from ilworkbench.config import WorkbenchConfig
from ilworkbench.logics import Logic
from ilworkbench.mcs import MCSet, eliminate
from ilworkbench.oracle import Oracle, Verdict
from ilworkbench.search import bounded_refute
from ilworkbench.semantics import BudgetExceeded
from ilworkbench.syntax import BOT, AdequateContext, Formula, adequate_closure, rhd_operands, simneg, subformulas

logger = logging.getLogger(__name__)

# frames tried before falling back to the canonical model
QUICK_SEARCH_FRAMES = 2_000


def estimated_size(formula: Formula) -> int:
    """Lower bound on the size of the adequate closure of ``{formula}``."""
    m = len(rhd_operands(subformulas(formula)) | {BOT})
    return max(len(subformulas(formula)), m * 2 ** m)


class ExactOracle(Oracle):
    """Complete for the twenty registered logics within ``exact.ceiling`` and ``exact.max_phi``."""

    name = "exact"

    def __init__(self, config: WorkbenchConfig | None = None) -> None:
        super().__init__(config)
        self._kl: dict[tuple[Logic, AdequateContext], list[MCSet]] = {}

    def context(self, formula: Formula) -> AdequateContext:
        limit = self.config.exact.max_phi
        guess = estimated_size(formula)
        if guess > limit:
            raise BudgetExceeded(f"adequate set would have at least {guess} formulas", guess, limit)
        ctx = adequate_closure([formula])
        if len(ctx) > limit:
            raise BudgetExceeded(f"adequate set has {len(ctx)} formulas", len(ctx), limit)
        return ctx

    def kl(self, logic: Logic, ctx: AdequateContext) -> list[MCSet]:
        key = (logic, ctx)
        if key not in self._kl:
            self._kl[key] = [MCSet(ctx, m) for m in eliminate(logic, ctx, self.config.exact.ceiling)]
        return self._kl[key]

    def query(self, logic: Logic, formula: Formula) -> Verdict:
        ctx = self.context(formula)
        kl = self.kl(logic, ctx)
        target = simneg(formula)
        if not any(target in gamma for gamma in kl):
            return Verdict.proved(f"no set of K_L contains the negation (|Phi| = {len(ctx)}, |K_L| = {len(kl)})")
        quick = replace(self.config.search, frame_budget=min(self.config.search.frame_budget, QUICK_SEARCH_FRAMES))
        cm = bounded_refute(logic, formula, config=quick)
        if cm is not None:
            return Verdict.refuted(cm, f"{cm.size}-world countermodel from search")
        logger.info("search found nothing; building the canonical model")
        canon = canonical_model(logic, formula, kl=kl)
        cm = canon.countermodel()
        return Verdict.refuted(cm, f"{cm.size}-world {canon.construction} canonical countermodel")
