# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Generalized Veltman frames: ``S_x`` relates worlds to sets of worlds.

Each ``S_x`` is upward closed, so it is stored by its minimal sets ("generators"):
``y S_x V`` iff some generator for ``(x, y)`` is a subset of ``V``.  ``A |> B`` then holds
at ``x`` when every ``R``-successor forcing ``A`` has a generator inside the truth set of ``B``.
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
    natural_key,
)
from ilworkbench.syntax import Formula
from ilworkbench.veltman import VeltmanFrame, VeltmanModel

Generators = tuple[frozenset[str], ...]


def _gen_key(g: frozenset[str]) -> tuple:
    return len(g), sorted(g, key=natural_key)


def antichain_reduce(sets: Iterable[Iterable[str]]) -> Generators:
    """Keep only the minimal sets, in (size, natural order) order."""
    uniq = sorted({frozenset(s) for s in sets}, key=_gen_key)
    kept: list[frozenset[str]] = []
    for g in uniq:
        if not any(k <= g for k in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True, eq=False)
class GenFrame(Frame):
    worlds: tuple[str, ...]
    R: frozenset[tuple[str, str]]
    S: Mapping[str, Mapping[str, Generators]] = field(default_factory=dict)

    @classmethod
    def build(cls, worlds: Iterable[str], R: Iterable[tuple[str, str]],
              S: Mapping[str, Mapping[str, Iterable[Iterable[str]]]] | None = None,
              reduce: bool = True) -> GenFrame:
        """Normalize containers; with *reduce* the generator lists are antichain-reduced."""
        s: dict[str, dict[str, Generators]] = {}
        for x, row in (S or {}).items():
            for y, gens in row.items():
                gs = antichain_reduce(gens) if reduce else tuple(frozenset(g) for g in gens)
                if gs:
                    s.setdefault(x, {})[y] = gs
        return cls(canonical_worlds(worlds), frozenset((x, y) for x, y in R), s)

    def generators(self, x: str, y: str) -> Generators:
        return self.S.get(x, {}).get(y, ())

    def related(self, x: str, y: str, v: Iterable[str]) -> bool:
        """``y S_x V`` in the upward-closed relation."""
        vs = set(v)
        return any(g <= vs for g in self.generators(x, y))

    @cached_property
    def gen_masks(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """``gen_masks[x][y]`` lists the generators for ``(x, y)`` as bitmasks."""
        out: list[list[tuple[int, ...]]] = [[() for _ in self.worlds] for _ in self.worlds]
        for x, row in self.S.items():
            for y, gens in row.items():
                out[self.index[x]][self.index[y]] = tuple(self.mask(g) for g in gens)
        return tuple(tuple(r) for r in out)

    def mask(self, ws: Iterable[str]) -> int:
        m = 0
        for w in ws:
            m |= 1 << self.world_index(w)
        return m

    def unmask(self, m: int) -> frozenset[str]:
        return frozenset(self.worlds[i] for i in iter_bits(m))

    def check(self) -> FrameVerdict:
        verdict = self.check_relation()
        if not verdict:
            return verdict
        known = set(self.worlds)
        for x in sorted(self.S, key=natural_key):
            for y in sorted(self.S[x], key=natural_key):
                gens = self.S[x][y]
                if x not in known or y not in known:
                    return FrameVerdict(False, "S relates unknown worlds", (x, y))
                if gens and (x, y) not in self.R:
                    return FrameVerdict(False, "y S_x V requires x R y", (x, y))
                for i, g in enumerate(gens):
                    if not g:
                        return FrameVerdict(False, "generators must be nonempty", (x, y))
                    if not g <= known:
                        return FrameVerdict(False, "generator mentions unknown worlds", (x, y, *sorted(g - known)))
                    for j, h in enumerate(gens):
                        if i != j and h <= g:
                            return FrameVerdict(False, "generators must form an antichain",
                                                (x, y, *sorted(g, key=natural_key)))
        return FrameVerdict(True)

    def rhd_columns(self, a: Columns, b: Columns, full: int) -> Columns:
        out = []
        for x in range(self.n):
            acc = full
            row = self.gen_masks[x]
            for y in self.succ[x]:
                reach = 0
                for g in row[y]:
                    inside = full
                    for z in iter_bits(g):
                        inside &= b[z]
                    reach |= inside
                acc &= (full & ~a[y]) | reach
                if not acc:
                    break
            out.append(acc)
        return out

    def to_dict(self) -> dict:
        key = natural_key
        return {
            "worlds": list(self.worlds),
            "R": [list(p) for p in sorted(self.R, key=lambda p: (key(p[0]), key(p[1])))],
            "S": {
                x: {y: [sorted(g, key=key) for g in self.S[x][y]] for y in sorted(self.S[x], key=key) if self.S[x][y]}
                for x in self.worlds if self.S.get(x)
            },
        }


@dataclass(frozen=True, eq=False)
class GenModel(Model):
    frame: GenFrame


def gen_forces(model: GenModel, w: str, f: Formula) -> bool:
    return model.forces(w, f)


def gen_valid_in_model(model: GenModel, f: Formula) -> bool:
    return model.valid(f)


def gen_refute_in_frame(frame: GenFrame, a: Formula, max_bits: int = 20) -> Refutation | None:
    return frame_refutation(frame, a, max_bits)


def gen_valid_in_frame(frame: GenFrame, a: Formula, max_bits: int = 20) -> bool:
    """As ``veltman.valid_in_frame``, with the same valuation budget."""
    return frame_refutation(frame, a, max_bits) is None


def embed_frame(frame: VeltmanFrame) -> GenFrame:
    """``y S'_x V`` iff ``y S_x z`` for some ``z`` in ``V``: one singleton generator per pair."""
    s: dict[str, dict[str, list[list[str]]]] = {}
    for x, pairs in frame.S.items():
        for y, z in pairs:
            s.setdefault(x, {}).setdefault(y, []).append([z])
    return GenFrame.build(frame.worlds, frame.R, s)


def embed_veltman(model: VeltmanModel) -> GenModel:
    return GenModel(embed_frame(model.frame), dict(model.valuation))
