# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Shared frame machinery and the bit-parallel forcing evaluator.

A formula is evaluated once per world over a whole batch of valuations at the same
time: the value at world ``w`` is an int whose bit ``v`` is the truth value under
valuation number ``v``.  A single model is the batch of size one.
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import networkx as nx

from ilworkbench.kernel import BudgetExceeded, assignment_columns
from ilworkbench.syntax import And, Bot, Box, Formula, Imp, Neg, Or, Rhd, Top, Var, variables

Columns = list[int]


class FrameError(ValueError):
    """A frame, model or frame file is malformed."""


class UnknownWorldError(FrameError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown world"


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of *mask*, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def natural_key(name: str) -> tuple[Any, ...]:
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name))


def canonical_worlds(worlds: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(worlds), key=natural_key))


@dataclass(frozen=True)
class FrameVerdict:
    ok: bool
    clause: str = ""
    witness: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class Frame(ABC):
    """Worlds plus a transitive, acyclic ``R``; subclasses supply the ``|>`` clause."""

    worlds: tuple[str, ...]
    R: frozenset[tuple[str, str]]

    @cached_property
    def index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.worlds)}

    @property
    def n(self) -> int:
        return len(self.worlds)

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.worlds]
        for x, y in self.R:
            out[self.index[x]].append(self.index[y])
        return tuple(tuple(sorted(s)) for s in out)

    @cached_property
    def succ_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << y for y in s) for s in self.succ)

    def successors(self, x: str) -> list[str]:
        return [self.worlds[y] for y in self.succ[self.world_index(x)]]

    def world_index(self, w: str) -> int:
        try:
            return self.index[w]
        except KeyError:
            raise UnknownWorldError(f"unknown world {w!r}") from None

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.worlds)
        g.add_edges_from(self.R)
        return g

    def check_relation(self) -> FrameVerdict:
        """R is over W, transitive and acyclic."""
        known = set(self.worlds)
        for x, y in sorted(self.R):
            if x not in known or y not in known:
                return FrameVerdict(False, "R relates unknown worlds", (x, y))
        g = self.graph()
        try:
            cycle = nx.find_cycle(g)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle:
            return FrameVerdict(False, "R is not conversely well-founded (cycle)", tuple(e[0] for e in cycle))
        for x, y in sorted(self.R):
            for z in sorted(g.successors(y)):
                if (x, z) not in self.R:
                    return FrameVerdict(False, "R is not transitive", (x, y, z))
        return FrameVerdict(True)

    @abstractmethod
    def check(self) -> FrameVerdict:
        """All structural invariants of the frame class."""

    @abstractmethod
    def rhd_columns(self, a: Columns, b: Columns, full: int) -> Columns:
        """Per-world truth of ``A |> B`` given per-world truth of ``A`` and ``B``."""

    def box_columns(self, a: Columns, full: int) -> Columns:
        out = []
        for x in range(self.n):
            acc = full
            for y in self.succ[x]:
                acc &= a[y]
            out.append(acc)
        return out


def evaluate(frame: Frame, f: Formula, atoms: Mapping[str, Sequence[int]], full: int,
             memo: dict[Formula, Columns] | None = None) -> Columns:
    """Per-world columns of *f*; *atoms* maps each variable to its per-world columns."""
    cache: dict[Formula, Columns] = {} if memo is None else memo

    def go(g: Formula) -> Columns:
        hit = cache.get(g)
        if hit is not None:
            return hit
        match g:
            case Var(name):
                col = atoms.get(name)
                res = list(col) if col is not None else [0] * frame.n
            case Top():
                res = [full] * frame.n
            case Bot():
                res = [0] * frame.n
            case Neg(a):
                res = [full & ~v for v in go(a)]
            case And(a, b):
                res = [u & v for u, v in zip(go(a), go(b))]
            case Or(a, b):
                res = [u | v for u, v in zip(go(a), go(b))]
            case Imp(a, b):
                res = [(full & ~u) | v for u, v in zip(go(a), go(b))]
            case Box(a):
                res = frame.box_columns(go(a), full)
            case Rhd(a, b):
                res = frame.rhd_columns(go(a), go(b), full)
            case _:
                raise TypeError(f"not a formula: {g!r}")
        cache[g] = res
        return res

    return go(f)


def model_atoms(frame: Frame, valuation: Mapping[str, Iterable[str]]) -> dict[str, Columns]:
    out: dict[str, Columns] = {}
    for name, ws in valuation.items():
        col = [0] * frame.n
        for w in ws:
            col[frame.world_index(w)] = 1
        out[name] = col
    return out


@dataclass(frozen=True, eq=False)
class Model:
    """A frame with a valuation; evaluation results are memoized per formula."""

    frame: Frame
    valuation: Mapping[str, frozenset[str]]

    def __post_init__(self) -> None:
        known = set(self.frame.worlds)
        for name, ws in self.valuation.items():
            extra = sorted(set(ws) - known, key=natural_key)
            if extra:
                raise FrameError(f"valuation of {name!r} mentions unknown worlds: {', '.join(extra)}")

    @cached_property
    def _atoms(self) -> dict[str, Columns]:
        return model_atoms(self.frame, self.valuation)

    @cached_property
    def _memo(self) -> dict[Formula, Columns]:
        return {}

    def columns(self, f: Formula) -> Columns:
        return evaluate(self.frame, f, self._atoms, 1, self._memo)

    def truth_set(self, f: Formula) -> frozenset[str]:
        """Worlds that force *f*."""
        return frozenset(w for w, v in zip(self.frame.worlds, self.columns(f)) if v)

    def forces(self, w: str, f: Formula) -> bool:
        return bool(self.columns(f)[self.frame.world_index(w)])

    def valid(self, f: Formula) -> bool:
        return all(self.columns(f))


@dataclass(frozen=True)
class Refutation:
    """A world and a valuation of the query's variables at which it fails."""

    world: str
    valuation: dict[str, frozenset[str]]


def _batch(frame: Frame, names: Sequence[str], max_bits: int) -> tuple[dict[str, Columns], int]:
    bits = frame.n * len(names)
    if bits > max_bits:
        raise BudgetExceeded("valuation space 2^(|W|*k) too large", bits, max_bits)
    cols, full = assignment_columns(bits)
    atoms = {name: cols[j * frame.n:(j + 1) * frame.n] for j, name in enumerate(names)}
    return atoms, full


def frame_refutation(frame: Frame, a: Formula, max_bits: int = 20) -> Refutation | None:
    """The first (world, valuation) falsifying *a*, or ``None`` if *a* is valid on *frame*.

    Valuation number ``v`` puts world ``w`` into variable ``j`` iff bit ``j*|W| + w`` of ``v`` is set.
    """
    names = variables(a)
    atoms, full = _batch(frame, names, max_bits)
    cols = evaluate(frame, a, atoms, full)
    for w, col in enumerate(cols):
        missing = full & ~col
        if missing:
            v = (missing & -missing).bit_length() - 1
            val = {
                name: frozenset(frame.worlds[u] for u in range(frame.n) if v >> (j * frame.n + u) & 1)
                for j, name in enumerate(names)
            }
            return Refutation(frame.worlds[w], val)
    return None


def frame_validity(frame: Frame, a: Formula, max_bits: int = 20) -> bool:
    return frame_refutation(frame, a, max_bits) is None
