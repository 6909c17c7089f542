# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Bounded countermodel search.

Frames are enumerated by world count, then by weight (the number of optional ``S`` pairs or
generators), then by ``R`` shape, then lexicographically.  ``R`` ranges over one
representative per isomorphism class of strict partial orders on ``0..n-1`` that respect the
natural labeling; ``S`` candidates that are not minimal in their orbit under the
automorphisms of ``R`` are skipped.  Per-world conditions of the logic (J1, J4, J4+, J5 and
the transitivity half of Veltman J2) are built into the candidates, the rest are checked on
each frame.  The first frame with a refuting valuation wins.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache
from typing import Union

import networkx as nx

from ilworkbench.config import SearchConfig
from ilworkbench.correspondence import satisfies
from ilworkbench.genveltman import GenFrame, GenModel
from ilworkbench.logics import FrameClass, Logic
from ilworkbench.semantics import BudgetExceeded, Frame, Model, frame_refutation, iter_bits
from ilworkbench.syntax import Formula, variables
from ilworkbench.veltman import VeltmanFrame, VeltmanModel

logger = logging.getLogger(__name__)

Perm = tuple[int, ...]


def world_names(n: int) -> tuple[str, ...]:
    return tuple(f"w{i}" for i in range(n))


# R: strict partial orders up to isomorphism


def _upper_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _is_transitive(rel: frozenset[tuple[int, int]]) -> bool:
    return all((x, z) in rel for x, y in rel for y2, z in rel if y == y2)


def _encode(rel: Sequence[tuple[int, int]], n: int) -> int:
    return sum(1 << (i * n + j) for i, j in rel)


@cache
def relation_shapes(n: int) -> tuple[tuple[frozenset[tuple[int, int]], tuple[Perm, ...]], ...]:
    """One transitive ``R`` per isomorphism class, each with its automorphism group.

    Every finite strict order has a linear extension, so ``R`` ranges over subsets of
    ``{(i, j) : i < j}``; the representative is the one with the smallest encoding.
    """
    pairs = _upper_pairs(n)
    perms = list(itertools.permutations(range(n)))
    shapes = []
    for bits in range(1 << len(pairs)):
        rel = frozenset(p for k, p in enumerate(pairs) if bits >> k & 1)
        if not _is_transitive(rel):
            continue
        own = _encode(sorted(rel), n)
        images = []
        for pi in perms:
            img = [(pi[i], pi[j]) for i, j in rel]
            if all(i < j for i, j in img):
                images.append((_encode(img, n), pi))
        if min(code for code, _ in images) != own:
            continue
        auts = tuple(pi for code, pi in images if code == own)
        shapes.append((len(rel), own, rel, auts))
    shapes.sort(key=lambda s: (s[0], s[1]))
    return tuple((rel, auts) for _, _, rel, auts in shapes)


# S candidates


@dataclass(frozen=True)
class _Slot:
    """One independently chosen piece of ``S``: ``S_x`` (Veltman) or the generators of ``(x, y)``."""

    key: tuple[int, ...]
    forced: tuple[int, ...]
    free: tuple[int, ...]
    cap: int


def _succ(n: int, rel: frozenset[tuple[int, int]]) -> list[int]:
    out = [0] * n
    for x, y in rel:
        out[x] |= 1 << y
    return out


def _veltman_slots(n: int, rel: frozenset[tuple[int, int]], conditions: frozenset[str]) -> list[_Slot]:
    succ = _succ(n, rel)
    slots = []
    for x in range(n):
        if not succ[x]:
            continue
        targets = succ[x] if conditions & {"V_J4", "V_J2"} else (1 << n) - 1
        forced = set()
        for y in iter_bits(succ[x]):
            if "V_J1" in conditions:
                forced.add(y * n + y)
            if "V_J5" in conditions:
                forced |= {y * n + z for z in iter_bits(succ[y])}
        free = [y * n + z for y in iter_bits(succ[x]) for z in iter_bits(targets) if y * n + z not in forced]
        slots.append(_Slot((x,), tuple(sorted(forced)), tuple(free), len(free)))
    return slots


def _gen_slots(n: int, rel: frozenset[tuple[int, int]], conditions: frozenset[str],
               max_generators: int) -> list[_Slot]:
    succ = _succ(n, rel)
    slots = []
    for x in range(n):
        for y in iter_bits(succ[x]):
            forced: set[int] = set()
            if "G_J1" in conditions:
                forced.add(1 << y)
            if "G_J5" in conditions:
                forced |= {1 << z for z in iter_bits(succ[y])}
            candidates = []
            for g in sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m)):
                if "G_J4plus" in conditions and g & ~succ[x]:
                    continue
                if conditions & {"G_J4", "G_J2", "G_J2plus"} and not g & succ[x]:
                    continue
                if any(f & g == f for f in forced):
                    continue
                candidates.append(g)
            slots.append(_Slot((x, y), tuple(sorted(forced)), tuple(candidates), min(max_generators, len(candidates))))
    return slots


def _is_antichain(gens: Sequence[int]) -> bool:
    return all(a & b != a and a & b != b for a, b in itertools.combinations(gens, 2))


def _s_transitive(n: int, pair_bits: int) -> bool:
    rows = [0] * n
    for b in iter_bits(pair_bits):
        rows[b // n] |= 1 << (b % n)
    for y in range(n):
        for z in iter_bits(rows[y]):
            if rows[z] & ~rows[y]:
                return False
    return True


def _slot_options(slot: _Slot, k: int, n: int, generalized: bool, transitive: bool) -> Iterator[tuple[int, ...]]:
    for extra in itertools.combinations(slot.free, k):
        if generalized:
            if k > 1 and not _is_antichain(extra):
                continue
            yield tuple(sorted(slot.forced + extra))
        else:
            mask = sum(1 << b for b in slot.forced + extra)
            if transitive and not _s_transitive(n, mask):
                continue
            yield (mask,)


def _assignments(slots: Sequence[_Slot], weight: int, n: int, generalized: bool,
                 transitive: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not slots:
        if weight == 0:
            yield ()
        return
    head, rest = slots[0], slots[1:]
    spare = sum(s.cap for s in rest)
    for k in range(max(0, weight - spare), min(head.cap, weight) + 1):
        for opt in _slot_options(head, k, n, generalized, transitive):
            for tail in _assignments(rest, weight - k, n, generalized, transitive):
                yield (opt, *tail)


def _perm_mask(pi: Perm, m: int) -> int:
    out = 0
    for b in iter_bits(m):
        out |= 1 << pi[b]
    return out


def _canonical(slots: Sequence[_Slot], choice: Sequence[tuple[int, ...]], auts: Sequence[Perm],
               n: int, generalized: bool) -> bool:
    """Whether *choice* is the smallest encoding in its orbit under *auts*."""
    if len(auts) <= 1:
        return True
    own = tuple(choice)
    position = {s.key: i for i, s in enumerate(slots)}
    for pi in auts:
        image: list[tuple[int, ...]] = [()] * len(slots)
        for slot, opt in zip(slots, choice):
            if generalized:
                key = tuple(pi[i] for i in slot.key)
                image[position[key]] = tuple(sorted(_perm_mask(pi, g) for g in opt))
            else:
                mask = 0
                for b in iter_bits(opt[0]):
                    mask |= 1 << (pi[b // n] * n + pi[b % n])
                image[position[(pi[slot.key[0]],)]] = (mask,)
        if tuple(image) < own:
            return False
    return True


def _build(n: int, rel: frozenset[tuple[int, int]], slots: Sequence[_Slot], choice: Sequence[tuple[int, ...]],
           generalized: bool) -> Frame:
    names = world_names(n)
    R = [(names[i], names[j]) for i, j in rel]
    if generalized:
        gs: dict[str, dict[str, list[list[str]]]] = {}
        for slot, opt in zip(slots, choice):
            x, y = slot.key
            if opt:
                gs.setdefault(names[x], {})[names[y]] = [[names[i] for i in iter_bits(g)] for g in opt]
        return GenFrame.build(names, R, gs, reduce=False)
    vs: dict[str, list[tuple[str, str]]] = {}
    for slot, opt in zip(slots, choice):
        pairs = [(names[b // n], names[b % n]) for b in iter_bits(opt[0])]
        if pairs:
            vs[names[slot.key[0]]] = pairs
    return VeltmanFrame.build(names, R, vs)


def _space(n: int, rel: frozenset[tuple[int, int]], logic: Logic, frame_class: FrameClass,
           max_generators: int) -> list[_Slot]:
    conditions = logic.conditions_for(frame_class)
    if frame_class is FrameClass.GENERALIZED:
        return _gen_slots(n, rel, conditions, max_generators)
    return _veltman_slots(n, rel, conditions)


def enumerate_frames(logic: Logic, n: int, frame_class: FrameClass, max_generators: int = 2,
                     weight: int | None = None) -> Iterator[Frame]:
    """Frames with *n* worlds satisfying *logic*'s conditions for *frame_class*, up to isomorphism.

    With *weight* only frames of that weight are produced; otherwise all weights in order.
    """
    generalized = frame_class is FrameClass.GENERALIZED
    shapes = relation_shapes(n)
    spaces = [_space(n, rel, logic, frame_class, max_generators) for rel, _ in shapes]
    top = max((sum(s.cap for s in slots) for slots in spaces), default=0)
    weights = [weight] if weight is not None else range(top + 1)
    transitive = "V_J2" in logic.conditions_for(frame_class)
    for w in weights:
        for (rel, auts), slots in zip(shapes, spaces):
            for choice in _assignments(slots, w, n, generalized, transitive):
                if not _canonical(slots, choice, auts, n, generalized):
                    continue
                frame = _build(n, rel, slots, choice, generalized)
                if satisfies(frame, logic):
                    yield frame


# Search


@dataclass(frozen=True)
class Countermodel:
    """A model of the logic's frame class and a world where the formula fails."""

    model: Model
    world: str
    formula: Formula
    frames_tried: int = 0

    @property
    def size(self) -> int:
        return self.model.frame.n


def _model_for(frame: Frame, valuation: dict[str, frozenset[str]]) -> Model:
    if isinstance(frame, GenFrame):
        return GenModel(frame, valuation)
    assert isinstance(frame, VeltmanFrame)
    return VeltmanModel(frame, valuation)


def _verified(frame: Frame, logic: Logic, a: Formula, world: str, valuation: dict[str, frozenset[str]],
              tried: int) -> Countermodel:
    model = _model_for(frame, valuation)
    if not frame.check() or not satisfies(frame, logic) or model.forces(world, a):
        raise AssertionError(f"countermodel for {a} failed re-verification")
    return Countermodel(model, world, a, tried)


@dataclass(frozen=True)
class _Task:
    logic: Logic
    formula: Formula
    n: int
    shape: int
    weight: int
    frame_class: FrameClass
    max_generators: int
    valuation_bits: int
    cap: int


_Hit = Union[tuple[int, str, dict[str, frozenset[str]], Frame], None]


def _scan(task: _Task) -> tuple[int, _Hit, bool]:
    """Enumerate one (shape, weight) cell.

    Returns the frames tried, the first hit and whether a frame was left unchecked at the cap.
    """
    generalized = task.frame_class is FrameClass.GENERALIZED
    rel, auts = relation_shapes(task.n)[task.shape]
    slots = _space(task.n, rel, task.logic, task.frame_class, task.max_generators)
    transitive = "V_J2" in task.logic.conditions_for(task.frame_class)
    tried = 0
    for choice in _assignments(slots, task.weight, task.n, generalized, transitive):
        if not _canonical(slots, choice, auts, task.n, generalized):
            continue
        frame = _build(task.n, rel, slots, choice, generalized)
        if not satisfies(frame, task.logic):
            continue
        if tried >= task.cap:
            return tried, None, True
        tried += 1
        hit = frame_refutation(frame, task.formula, task.valuation_bits)
        if hit is not None:
            return tried, (tried, hit.world, hit.valuation, frame), False
    return tried, None, False


def _cells(logic: Logic, n: int, frame_class: FrameClass, cfg: SearchConfig) -> Iterator[list[tuple[int, int]]]:
    """``(shape, weight)`` cells of size *n*, grouped by weight, each group in shape order."""
    shapes = relation_shapes(n)
    caps = [sum(s.cap for s in _space(n, rel, logic, frame_class, cfg.max_generators)) for rel, _ in shapes]
    for w in range(max(caps, default=0) + 1):
        yield [(i, w) for i in range(len(shapes)) if caps[i] >= w]


def search_class(logic: Logic, cfg: SearchConfig) -> FrameClass:
    if cfg.search_class == "gen":
        return FrameClass.GENERALIZED
    return logic.complete_class


def bounded_refute(logic: Logic, a: Formula, max_worlds: int | None = None,
                   config: SearchConfig | None = None, frame_class: FrameClass | None = None) -> Countermodel | None:
    """The first countermodel to *a* with at most *max_worlds* worlds, or ``None``.

    ``None`` only means nothing was found within the limits.  The answer does not depend on
    ``threads``: cells run in parallel are merged in enumeration order against the same budget.
    """
    cfg = config or SearchConfig()
    limit = cfg.max_worlds if max_worlds is None else max_worlds
    if limit < 1:
        raise ValueError("max_worlds must be at least 1")
    cls = frame_class or search_class(logic, cfg)
    k = len(variables(a))
    budget = cfg.frame_budget
    tried = 0
    pool = ProcessPoolExecutor(max_workers=cfg.threads) if cfg.threads > 1 else None
    try:
        for n in range(1, limit + 1):
            if n * k > cfg.valuation_bits:
                logger.warning("stopping at %d worlds: 2^(%d*%d) valuations exceed the budget", n - 1, n, k)
                break
            before = tried
            for group in _cells(logic, n, cls, cfg):
                tasks = [_Task(logic, a, n, shape, w, cls, cfg.max_generators, cfg.valuation_bits, budget - tried)
                         for shape, w in group]
                results = pool.map(_scan, tasks) if pool else map(_scan, tasks)
                for count, hit, truncated in results:
                    remaining = budget - tried
                    if hit is not None and hit[0] <= remaining:
                        seq, world, valuation, frame = hit
                        logger.info("countermodel with %d worlds after %d frames", n, tried + seq)
                        return _verified(frame, logic, a, world, valuation, tried + seq)
                    if hit is not None or truncated or count > remaining:
                        logger.warning("frame budget %d exhausted at %d worlds", budget, n)
                        return None
                    tried += count
            logger.info("%d worlds: %d frames, no countermodel", n, tried - before)
    except BudgetExceeded:
        logger.warning("valuation budget exceeded for %s", a)
        return None
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return None


def random_frame(n: int, frame_class: FrameClass, rng: random.Random, density: float = 0.5) -> Frame:
    """A random frame on ``n`` worlds: ``R`` is the transitive closure of random forward edges.

    Veltman ``S_x`` pairs are drawn from ``R[x] x W``; generalized ``S_x`` gets up to two
    random nonempty generators per successor.
    """
    names = world_names(n)
    dag = nx.DiGraph()
    dag.add_nodes_from(range(n))
    dag.add_edges_from((i, j) for i, j in _upper_pairs(n) if rng.random() < density)
    R = [(names[i], names[j]) for i, j in nx.transitive_closure_dag(dag).edges]
    succ: dict[str, list[str]] = {}
    for x, y in sorted(R):
        succ.setdefault(x, []).append(y)
    if frame_class is FrameClass.VELTMAN:
        S = {x: [(y, z) for y in ys for z in names if rng.random() < density / 2] for x, ys in succ.items()}
        return VeltmanFrame.build(names, R, S)
    gens: dict[str, dict[str, list[list[str]]]] = {}
    for x, ys in succ.items():
        for y in ys:
            row = [[z for z in names if rng.random() < density] for _ in range(rng.randint(0, 2))]
            gens.setdefault(x, {})[y] = [g for g in row if g]
    return GenFrame.build(names, R, gens)
