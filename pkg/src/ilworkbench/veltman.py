# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Veltman prestructures (IL- frames) and their models.

``S`` maps each world ``x`` to a set of pairs ``(y, z)``; ``A |> B`` holds at ``x`` when
every ``R``-successor ``y`` forcing ``A`` has some ``z`` with ``y S_x z`` forcing ``B``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

from ilworkbench.semantics import (
    Columns,
    Frame,
    FrameVerdict,
    Model,
    Refutation,
    canonical_worlds,
    frame_refutation,
    iter_bits,
)
from ilworkbench.syntax import Formula

Pair = tuple[str, str]


@dataclass(frozen=True, eq=False)
class VeltmanFrame(Frame):
    worlds: tuple[str, ...]
    R: frozenset[Pair]
    S: Mapping[str, frozenset[Pair]] = field(default_factory=dict)

    @classmethod
    def build(cls, worlds: Iterable[str], R: Iterable[Pair], S: Mapping[str, Iterable[Pair]] | None = None) -> VeltmanFrame:
        """Normalize containers and put the worlds in canonical (natural-sort) order."""
        s = {x: frozenset((y, z) for y, z in pairs) for x, pairs in (S or {}).items()}
        return cls(canonical_worlds(worlds), frozenset((x, y) for x, y in R), {x: p for x, p in s.items() if p})

    def S_at(self, x: str) -> frozenset[Pair]:
        return self.S.get(x, frozenset())

    @cached_property
    def s_mask(self) -> tuple[tuple[int, ...], ...]:
        """``s_mask[x][y]`` is the bitmask of worlds ``z`` with ``y S_x z``."""
        out = [[0] * self.n for _ in self.worlds]
        for x, pairs in self.S.items():
            xi = self.index[x]
            for y, z in pairs:
                out[xi][self.index[y]] |= 1 << self.index[z]
        return tuple(tuple(row) for row in out)

    def check(self) -> FrameVerdict:
        verdict = self.check_relation()
        if not verdict:
            return verdict
        known = set(self.worlds)
        for x in sorted(self.S):
            for y, z in sorted(self.S[x]):
                if not {x, y, z} <= known:
                    return FrameVerdict(False, "S relates unknown worlds", (x, y, z))
                if (x, y) not in self.R:
                    return FrameVerdict(False, "y S_x z requires x R y", (x, y, z))
        return FrameVerdict(True)

    def rhd_columns(self, a: Columns, b: Columns, full: int) -> Columns:
        out = []
        for x in range(self.n):
            acc = full
            row = self.s_mask[x]
            for y in self.succ[x]:
                reach = 0
                for z in iter_bits(row[y]):
                    reach |= b[z]
                acc &= (full & ~a[y]) | reach
                if not acc:
                    break
            out.append(acc)
        return out

    def to_dict(self) -> dict:
        return {
            "worlds": list(self.worlds),
            "R": [list(p) for p in sorted(self.R, key=self.pair_key)],
            "S": {x: [list(p) for p in sorted(self.S[x], key=self.pair_key)]
                  for x in self.worlds if self.S.get(x)},
        }

    def pair_key(self, p: Pair) -> tuple[int, int]:
        return self.index[p[0]], self.index[p[1]]


@dataclass(frozen=True, eq=False)
class VeltmanModel(Model):
    frame: VeltmanFrame


def check_frame(frame: VeltmanFrame) -> FrameVerdict:
    """Transitivity, acyclicity of ``R`` and ``y S_x z => x R y``, with a witness on failure."""
    return frame.check()


def forces(model: VeltmanModel, w: str, f: Formula) -> bool:
    """``w |= f`` in *model*; raises ``UnknownWorldError`` for worlds outside ``W``."""
    return model.forces(w, f)


def valid_in_model(model: VeltmanModel, f: Formula) -> bool:
    return model.valid(f)


def refute_in_frame(frame: VeltmanFrame, a: Formula, max_bits: int = 20) -> Refutation | None:
    return frame_refutation(frame, a, max_bits)


def valid_in_frame(frame: VeltmanFrame, a: Formula, max_bits: int = 20) -> bool:
    """Validity under every valuation of the variables of *a*.

    Raises ``BudgetExceeded`` when ``|W| * k`` exceeds *max_bits*.
    """
    return frame_refutation(frame, a, max_bits) is None
