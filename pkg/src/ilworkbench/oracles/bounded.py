# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Bounded-search oracle: refutes by countermodel search, never proves."""

from __future__ import annotations

from ilworkbench.logics import Logic
from ilworkbench.oracle import Oracle, Verdict
from ilworkbench.search import bounded_refute
from ilworkbench.syntax import Formula


class BoundedOracle(Oracle):
    """Answers ``refuted`` with the first countermodel within ``search.max_worlds``, else ``unknown``."""

    name = "bounded"

    def query(self, logic: Logic, formula: Formula) -> Verdict:
        cm = bounded_refute(logic, formula, config=self.config.search)
        if cm is None:
            return Verdict.unknown(f"no countermodel with at most {self.config.search.max_worlds} worlds")
        return Verdict.refuted(cm, f"{cm.size}-world countermodel")
