# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Phi-maximal consistent sets, the successor relations between them and witness search.

A set is a bitmask over ``ctx.phi``.  Candidate sets are assignments to the atoms of
``Phi`` (its variables and its ``[]``/``|>``-rooted members) that respect a list of
propositional consequences of the logic; :func:`eliminate` then keeps the largest family of
candidates in which every set has the successors the completeness lemmas promise.  That
family is exactly ``K_L``: the lemmas keep every consistent set in, and the canonical model
built over the family satisfies each survivor.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING

import networkx as nx

from ilworkbench.kernel import Scheme, assignment_columns, is_instance, prop_atoms, truth_table
from ilworkbench.logics import Logic
from ilworkbench.semantics import BudgetExceeded, iter_bits
from ilworkbench.syntax import (
    BOT,
    AdequateContext,
    And,
    Bot,
    Box,
    Formula,
    Imp,
    Neg,
    Or,
    Rhd,
    Top,
    Var,
    big_and,
    iff,
    render,
    simneg,
)

if TYPE_CHECKING:
    from ilworkbench.oracle import Oracle

logger = logging.getLogger(__name__)

_BATCH = 1024


class ContextMismatch(ValueError):
    """Sets from different adequate contexts, or a formula outside the context."""


class LemmaHypothesisError(ValueError):
    """The premises of a witness lemma do not hold for the given sets."""


class WitnessNotFound(LookupError):
    """No member of ``K_L`` has the promised properties (an oracle or budget defect)."""


@dataclass(frozen=True)
class MCSet:
    """A member of ``K_L``: exactly one of ``A``, ``~A`` for every ``A`` in ``Phi``."""

    ctx: AdequateContext
    members: int

    def __contains__(self, f: object) -> bool:
        i = self.ctx.index.get(f) if isinstance(f, Formula) else None
        return i is not None and bool(self.members >> i & 1)

    def formulas(self) -> list[Formula]:
        return [self.ctx.phi[i] for i in iter_bits(self.members)]

    def conjunction(self) -> Formula:
        return big_and(self.formulas())

    def render(self, unicode: bool = False) -> str:
        return "{" + ", ".join(render(f, unicode) for f in self.formulas()) + "}"


# ---------------------------------------------------------------------------
# Context layout
# ---------------------------------------------------------------------------

class Layout:
    """Index tables of one adequate context.  ``|>``-operands are addressed by position."""

    def __init__(self, ctx: AdequateContext) -> None:
        idx = ctx.index
        self.ctx = ctx
        self.neg = tuple(idx[simneg(f)] for f in ctx.phi)
        self.boxes = tuple((i, idx[f.sub]) for i, f in enumerate(ctx.phi) if isinstance(f, Box))
        self.box_mask = sum(1 << i for i, _ in self.boxes)
        self.ops = ctx.phi_rhd
        self.op_pos = {f: j for j, f in enumerate(self.ops)}
        self.op_bit = tuple(1 << idx[f] for f in self.ops)
        self.op_neg_bit = tuple(1 << self.neg[idx[f]] for f in self.ops)
        self.boxneg_bit = tuple(1 << idx[Box(simneg(f))] for f in self.ops)
        m = len(self.ops)
        self.rhd_bit = [[1 << idx[Rhd(d, e)] for e in self.ops] for d in self.ops]
        self._box_req: dict[int, int] = {}
        self._c_req: dict[tuple[int, int, bool], int] = {}
        self.m = m

    def operand(self, f: Formula) -> int:
        try:
            return self.op_pos[f]
        except KeyError:
            raise ContextMismatch(f"{render(f)} is not a |>-operand of the context") from None

    def box_req(self, g: int) -> int:
        """Formulas every ``<``-successor of *g* must contain: ``B`` and ``[]B`` for ``[]B`` in *g*."""
        hit = self._box_req.get(g)
        if hit is None:
            hit = 0
            for i, body in self.boxes:
                if g >> i & 1:
                    hit |= 1 << i | 1 << body
            self._box_req[g] = hit
        return hit

    def c_req(self, g: int, c: int, star: bool) -> int:
        """``box_req`` plus ``~B`` (and ``[]~B`` when *star*) for every ``B |> C`` in *g*."""
        key = (g, c, star)
        hit = self._c_req.get(key)
        if hit is None:
            hit = self.box_req(g)
            for b in range(self.m):
                if g & self.rhd_bit[b][c]:
                    hit |= self.op_neg_bit[b]
                    if star:
                        hit |= self.boxneg_bit[b]
            self._c_req[key] = hit
        return hit

    def strictly_above(self, g: int, d: int) -> bool:
        return bool(d & self.box_mask & ~g)

    def succ(self, g: int, d: int, need: int) -> bool:
        return d & need == need and self.strictly_above(g, d)


@lru_cache(maxsize=64)
def layout(ctx: AdequateContext) -> Layout:
    return Layout(ctx)


def _shared(*sets: MCSet) -> Layout:
    ctx = sets[0].ctx
    if any(s.ctx != ctx for s in sets[1:]):
        raise ContextMismatch("sets belong to different adequate contexts")
    return layout(ctx)


def prec(gamma: MCSet, delta: MCSet) -> bool:
    """``Gamma < Delta``: boxes of Gamma propagate (with their bodies) and Delta has a new box."""
    lay = _shared(gamma, delta)
    return lay.succ(gamma.members, delta.members, lay.box_req(gamma.members))


def prec_C(gamma: MCSet, delta: MCSet, c: Formula) -> bool:
    """``Gamma <_C Delta``: also ``~B`` in Delta for every ``B |> C`` in Gamma."""
    lay = _shared(gamma, delta)
    return lay.succ(gamma.members, delta.members, lay.c_req(gamma.members, lay.operand(c), False))


def prec_C_star(gamma: MCSet, delta: MCSet, c: Formula) -> bool:
    """``Gamma <*_C Delta`` (C-critical successor): ``~B`` and ``[]~B`` for every ``B |> C``."""
    lay = _shared(gamma, delta)
    return lay.succ(gamma.members, delta.members, lay.c_req(gamma.members, lay.operand(c), True))


def ranks(kl: Sequence[MCSet]) -> dict[int, int]:
    """Length of the longest ``<``-chain above each set, keyed by member mask."""
    g = nx.DiGraph()
    g.add_nodes_from(s.members for s in kl)
    g.add_edges_from((a.members, b.members) for a in kl for b in kl if prec(a, b))
    out: dict[int, int] = {}
    for node in reversed(list(nx.topological_sort(g))):
        out[node] = max((out[s] + 1 for s in g.successors(node)), default=0)
    return out


# ---------------------------------------------------------------------------
# Candidate sets
# ---------------------------------------------------------------------------

def _valid_under(f: Formula, known: Mapping[Formula, bool]) -> bool:
    """Tautology check with some atoms already fixed."""
    atoms = prop_atoms(f)
    free = [a for a in atoms if a not in known]
    cols, full = assignment_columns(len(free))
    columns = dict(zip(free, cols))
    for a in atoms:
        if a in known:
            columns[a] = full if known[a] else 0
    return truth_table(f, columns, full) == full


class _Constraints:
    """Theorems of the logic relating atoms of ``Phi``, used to prune candidate sets.

    ``known`` atoms are theorems; ``edges`` are provable implications between atoms; ``horn``
    clauses are checked on complete candidates.  Only sound consequences are recorded, so
    every consistent set survives; the witness fixpoint does the rest.
    """

    def __init__(self, logic: Logic, lay: Layout) -> None:
        phi = lay.ctx.phi
        self.lay = lay
        self.atoms = [i for i, f in enumerate(phi) if isinstance(f, (Var, Box, Rhd))]
        boxes = [i for i in self.atoms if isinstance(phi[i], Box)]
        rhds = [i for i in self.atoms if isinstance(phi[i], Rhd)]
        j1 = logic.has(Scheme.J1)
        forced_schemes = [s for s in (Scheme.J1p, Scheme.J5) if s in logic.schemes]

        known: dict[Formula, bool] = {}
        changed = True
        while changed:
            changed = False
            for i in boxes:
                f = phi[i]
                if f not in known and _valid_under(f.sub, known):
                    known[f] = changed = True
            for i in rhds:
                f = phi[i]
                if f in known:
                    continue
                if any(is_instance(f, s) is not None for s in forced_schemes) or (
                        j1 and _valid_under(Imp(f.left, f.right), known)):
                    known[f] = changed = True

        edges: set[tuple[int, int]] = set()
        for i, j in itertools.permutations(boxes, 2):
            if _valid_under(Imp(phi[i].sub, phi[j].sub), known):
                edges.add((i, j))
        for i, j in itertools.permutations(rhds, 2):
            a, b = phi[i], phi[j]
            if _valid_under(Imp(b.left, a.left), known) and _valid_under(Imp(a.right, b.right), known):
                edges.add((i, j))
        for i in boxes:
            x = phi[i].sub
            for j in rhds:
                r = phi[j]
                if _valid_under(Neg(r.right), known) and _valid_under(iff(r.left, Neg(x)), known):
                    edges |= {(i, j), (j, i)}
                elif j1 and _valid_under(Imp(x, Imp(r.left, r.right)), known):
                    edges.add((i, j))

        graph = nx.DiGraph()
        graph.add_nodes_from(self.atoms)
        graph.add_edges_from(edges)
        true_atoms = {i for i in self.atoms if known.get(phi[i])}
        for i in list(true_atoms):
            true_atoms |= nx.descendants(graph, i)
        self.forced_mask = sum(1 << i for i in true_atoms)

        free = graph.subgraph([i for i in self.atoms if i not in true_atoms])
        dag = nx.condensation(free)
        order = sorted(dag.nodes, key=lambda c: min(dag.nodes[c]["members"]))
        pos = {c: k for k, c in enumerate(order)}
        self.classes = [sorted(dag.nodes[c]["members"]) for c in order]
        self.up = [sum(1 << pos[d] for d in nx.descendants(dag, c)) for c in order]
        self.down = [sum(1 << pos[d] for d in nx.ancestors(dag, c)) for c in order]
        self.horn = self._horn(logic, lay)
        logger.debug("%d atoms: %d theorems, %d free classes, %d clauses",
                     len(self.atoms), len(true_atoms), len(self.classes), len(self.horn))

    @staticmethod
    def _horn(logic: Logic, lay: Layout) -> list[tuple[int, int]]:
        idx = lay.ctx.index
        ops = lay.ops
        out: list[tuple[int, int]] = []

        def add(premises: Iterable[Formula], conclusion: Formula) -> None:
            ps = list(premises)
            if conclusion in idx and all(p in idx for p in ps):
                out.append((sum(1 << idx[p] for p in ps), 1 << idx[conclusion]))

        for b in ops:
            add([Rhd(b, BOT)], Box(simneg(b)))
            if logic.has(Scheme.J1):
                add([], Rhd(b, b))
        for a, b, c in itertools.product(ops, repeat=3):
            if Or(a, b) in lay.op_pos:
                add([Rhd(a, c), Rhd(b, c)], Rhd(Or(a, b), c))
            if logic.has(Scheme.J2):
                add([Rhd(a, b), Rhd(b, c)], Rhd(a, c))
            if logic.has(Scheme.J2plus) and Or(b, c) in lay.op_pos:
                add([Rhd(a, Or(b, c)), Rhd(b, c)], Rhd(a, c))
            if logic.has(Scheme.J4plus):
                add([Box(Imp(a, b)), Rhd(c, a)], Rhd(c, b))
        if logic.has(Scheme.J4):
            for a, b in itertools.product(ops, repeat=2):
                add([Rhd(a, b), Box(simneg(b))], Box(simneg(a)))
        return out

    def assignments(self, ceiling: int) -> Iterator[int]:
        """Masks of true classes closed under ``up`` (and false ones under ``down``)."""
        k = len(self.classes)
        count = 0
        stack = [(0, 0, 0)]
        while stack:
            i, t, f = stack.pop()
            while i < k and (t | f) >> i & 1:
                i += 1
            if i == k:
                count += 1
                if count > ceiling:
                    raise BudgetExceeded(f"more than {ceiling} candidate sets ({k} free atom classes)",
                                         1 << k, ceiling)
                yield t
                continue
            bit = 1 << i
            if not self.down[i] & t:
                stack.append((i + 1, t, f | bit | self.down[i]))
            if not self.up[i] & f:
                stack.append((i + 1, t | bit | self.up[i], f))

    def members(self, batch: Sequence[int]) -> list[int]:
        """Expand class assignments to member masks over all of ``Phi``, bit-parallel."""
        full = (1 << len(batch)) - 1
        phi = self.lay.ctx.phi
        idx = self.lay.ctx.index
        cols: dict[int, int] = {}
        for i in iter_bits(self.forced_mask):
            cols[i] = full
        for c, atoms in enumerate(self.classes):
            col = 0
            for j, t in enumerate(batch):
                if t >> c & 1:
                    col |= 1 << j
            for i in atoms:
                cols[i] = col
        for i, f in enumerate(phi):
            if i in cols:
                continue
            match f:
                case Top():
                    cols[i] = full
                case Bot():
                    cols[i] = 0
                case Neg(a):
                    cols[i] = full & ~cols[idx[a]]
                case And(a, b):
                    cols[i] = cols[idx[a]] & cols[idx[b]]
                case Or(a, b):
                    cols[i] = cols[idx[a]] | cols[idx[b]]
                case Imp(a, b):
                    cols[i] = (full & ~cols[idx[a]]) | cols[idx[b]]
        masks = [0] * len(batch)
        for i, col in cols.items():
            for j in iter_bits(col):
                masks[j] |= 1 << i
        return masks

    def horn_ok(self, m: int) -> bool:
        return all(m & c or m & p != p for p, c in self.horn)


@lru_cache(maxsize=16)
def _constraints(logic: Logic, ctx: AdequateContext) -> _Constraints:
    return _Constraints(logic, layout(ctx))


def candidate_types(logic: Logic, ctx: AdequateContext, ceiling: int = 65_536) -> list[int]:
    """Member masks of all candidate sets, ascending.  ``BudgetExceeded`` above *ceiling*."""
    cons = _constraints(logic, ctx)
    source = cons.assignments(ceiling)
    out: list[int] = []
    while batch := list(itertools.islice(source, _BATCH)):
        out.extend(m for m in cons.members(batch) if cons.horn_ok(m))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Witness demands
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Variants:
    """Strongest form of each witness lemma available in a logic.

    ``pl3``: ``base``, ``box`` (adds ``[]~E``) or ``star`` (``<*_E`` and ``[]~E``).
    ``pl4``: ``base``, ``prec``, ``prec_f`` or ``star``.  ``pl6``: ``None``, ``prec_f`` or ``star``.
    """

    pl3: str
    pl4: str
    pl5: bool
    pl6: str | None


def variants(logic: Logic) -> Variants:
    has = logic.has
    J2, J2P, J4, J4P, J5 = Scheme.J2, Scheme.J2plus, Scheme.J4, Scheme.J4plus, Scheme.J5
    return Variants(
        pl3="star" if has(J2, J5) else "box" if has(J5) else "base",
        pl4="star" if has(J2P, J5) else "prec_f" if has(J2P) else "prec" if has(J4P) else "base",
        pl5=has(J4),
        pl6=("star" if has(J5) else "prec_f") if has(J2) else None,
    )


# (must, strict): a witness contains every formula of ``must`` and, when ``strict >= 0``,
# some box outside the mask ``strict``.
Demand = tuple[int, int]


def _pl3(lay: Layout, g: int, d: int, e: int, v: str) -> Demand:
    must = lay.c_req(g, e, v == "star") | lay.op_bit[d]
    if v != "base":
        must |= lay.boxneg_bit[e]
    return must, g & lay.box_mask


def _pl4(lay: Layout, g: int, e: int, f: int, v: str) -> Demand:
    must = lay.op_bit[e] | lay.op_neg_bit[f]
    if v == "base":
        return must, -1
    if v == "prec":
        return must | lay.box_req(g), g & lay.box_mask
    must |= lay.c_req(g, f, v == "star")
    if v == "star":
        must |= lay.boxneg_bit[f]
    return must, g & lay.box_mask


def _pl5(lay: Layout, g: int, e: int) -> Demand:
    return lay.box_req(g) | lay.op_bit[e], g & lay.box_mask


def _pl6(lay: Layout, g: int, e: int, f: int, v: str) -> Demand:
    must = lay.c_req(g, f, v == "star") | lay.op_bit[e]
    if v == "star":
        must |= lay.boxneg_bit[f]
    return must, g & lay.box_mask


def _demands(lay: Layout, g: int, v: Variants) -> Iterator[Demand]:
    strict = g & lay.box_mask
    for i, body in lay.boxes:
        if not g >> i & 1:
            yield lay.box_req(g) | 1 << lay.neg[body], strict
    m = lay.m
    for d in range(m):
        row = lay.rhd_bit[d]
        for e in range(m):
            if not g & row[e]:
                yield _pl3(lay, g, d, e, v.pl3)
                continue
            if v.pl5 and not g & lay.boxneg_bit[d]:
                yield _pl5(lay, g, e)
            for f in range(m):
                if g & row[f]:
                    continue
                yield _pl4(lay, g, e, f, v.pl4)
                if v.pl6:
                    yield _pl6(lay, g, e, f, v.pl6)


def _meets(lay: Layout, m: int, demand: Demand) -> bool:
    must, strict = demand
    return m & must == must and (strict < 0 or bool(m & lay.box_mask & ~strict))


_MISS = -1


def eliminate(logic: Logic, ctx: AdequateContext, ceiling: int = 65_536) -> list[int]:
    """``K_L`` over *ctx* as ascending member masks: the greatest witness-closed candidate family."""
    lay = layout(ctx)
    pool = candidate_types(logic, ctx, ceiling)
    live = set(pool)
    v = variants(logic)
    found: dict[Demand, int | None] = {}
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for g in pool:
            if g not in live:
                continue
            for demand in _demands(lay, g, v):
                w = found.get(demand, _MISS)
                if w is None:
                    ok = False
                elif w != _MISS and w in live:
                    ok = True
                else:
                    w = next((m for m in pool if m in live and _meets(lay, m, demand)), None)
                    found[demand] = w
                    ok = w is not None
                if not ok:
                    live.discard(g)
                    changed = True
                    break
    logger.info("K_L: %d of %d candidates survive after %d rounds", len(live), len(pool), rounds)
    return [g for g in pool if g in live]


def enumerate_KL(logic: Logic, ctx: AdequateContext, oracle: Oracle | None = None) -> list[MCSet]:
    """All Phi-maximal L-consistent sets, ordered by member mask.

    Consistency is decided by *oracle* (the exact oracle when omitted).  Oracles that cannot
    decide some candidate raise ``OracleExhausted`` listing those candidates.
    """
    if oracle is None:
        from ilworkbench.oracles.exact import ExactOracle

        oracle = ExactOracle()
    return oracle.kl(logic, ctx)


# ---------------------------------------------------------------------------
# Witness lemmas
# ---------------------------------------------------------------------------

class _Lemma:
    """Shared plumbing: resolve ``K_L``, check the context and search for the witness."""

    def __init__(self, logic: Logic, gamma: MCSet, kl: Sequence[MCSet] | None, oracle: Oracle | None) -> None:
        self.logic = logic
        self.gamma = gamma
        self.lay = layout(gamma.ctx)
        self.kl = list(kl) if kl is not None else enumerate_KL(logic, gamma.ctx, oracle)

    def find(self, demand: Demand, what: str) -> MCSet:
        for s in sorted(self.kl, key=lambda s: s.members):
            if s.ctx != self.gamma.ctx:
                raise ContextMismatch("K_L was built over a different context")
            if _meets(self.lay, s.members, demand):
                return s
        raise WitnessNotFound(f"no member of K_L is {what} (|K_L| = {len(self.kl)})")


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise LemmaHypothesisError(message)


def lemma_pl3(logic: Logic, gamma: MCSet, d: Formula, e: Formula,
              kl: Sequence[MCSet] | None = None, oracle: Oracle | None = None) -> MCSet:
    """For ``D |> E`` not in Gamma: Delta with ``D`` and ``Gamma <_E Delta``.

    With J5 Delta also has ``[]~E``; with J2 and J5 also ``Gamma <*_E Delta``.
    """
    lem = _Lemma(logic, gamma, kl, oracle)
    lay = lem.lay
    dp, ep = lay.operand(d), lay.operand(e)
    _need(Rhd(d, e) not in gamma, f"{render(Rhd(d, e))} is in Gamma")
    return lem.find(_pl3(lay, gamma.members, dp, ep, variants(logic).pl3), "a <_E-successor containing D")


def lemma_pl4(logic: Logic, gamma: MCSet, delta: MCSet, d: Formula, e: Formula, f: Formula,
              kl: Sequence[MCSet] | None = None, oracle: Oracle | None = None) -> MCSet:
    """For ``D |> E`` in Gamma, ``Gamma <_F Delta`` and ``D`` in Delta: Theta with ``E`` and ``~F``.

    J4+ adds ``Gamma < Theta``, J2+ ``Gamma <_F Theta``, J2+ with J5 ``Gamma <*_F Theta`` and ``[]~F``.
    """
    lem = _Lemma(logic, gamma, kl, oracle)
    lay = lem.lay
    _shared(gamma, delta)
    ep, fp = lay.operand(e), lay.operand(f)
    lay.operand(d)
    _need(Rhd(d, e) in gamma, f"{render(Rhd(d, e))} is not in Gamma")
    _need(prec_C(gamma, delta, f), f"Delta is not a <_{render(f)}-successor of Gamma")
    _need(d in delta, f"{render(d)} is not in Delta")
    return lem.find(_pl4(lay, gamma.members, ep, fp, variants(logic).pl4), "a witness with E and ~F")


def lemma_pl5(logic: Logic, gamma: MCSet, delta: MCSet, d: Formula, e: Formula,
              kl: Sequence[MCSet] | None = None, oracle: Oracle | None = None) -> MCSet:
    """With J4, for ``D |> E`` in Gamma, ``Gamma < Delta`` and ``D`` in Delta: ``Gamma < Theta`` with ``E``."""
    _need(logic.has(Scheme.J4), f"{logic} does not contain J4")
    lem = _Lemma(logic, gamma, kl, oracle)
    lay = lem.lay
    ep = lay.operand(e)
    lay.operand(d)
    _need(Rhd(d, e) in gamma, f"{render(Rhd(d, e))} is not in Gamma")
    _need(prec(gamma, delta), "Delta is not a <-successor of Gamma")
    _need(d in delta, f"{render(d)} is not in Delta")
    return lem.find(_pl5(lay, gamma.members, ep), "a <-successor containing E")


def lemma_pl6(logic: Logic, gamma: MCSet, delta: MCSet, d: Formula, e: Formula, f: Formula,
              kl: Sequence[MCSet] | None = None, oracle: Oracle | None = None) -> MCSet:
    """With J2, for ``D |> E`` in Gamma, ``Gamma <_F Delta`` and ``D`` in Delta: ``Gamma <_F Theta`` with ``E``.

    With J5 the witness is a ``<*_F``-successor containing ``[]~F``.
    """
    _need(logic.has(Scheme.J2), f"{logic} does not contain J2")
    lem = _Lemma(logic, gamma, kl, oracle)
    lay = lem.lay
    ep, fp = lay.operand(e), lay.operand(f)
    lay.operand(d)
    _need(Rhd(d, e) in gamma, f"{render(Rhd(d, e))} is not in Gamma")
    _need(prec_C(gamma, delta, f), f"Delta is not a <_{render(f)}-successor of Gamma")
    _need(d in delta, f"{render(d)} is not in Delta")
    v = variants(logic).pl6
    assert v is not None
    return lem.find(_pl6(lay, gamma.members, ep, fp, v), "a <_F-successor containing E")


@dataclass(frozen=True)
class KLView:
    """``K_L`` with its ``<`` relation and ranks precomputed, for the canonical constructions."""

    logic: Logic
    ctx: AdequateContext
    sets: tuple[MCSet, ...]

    @cached_property
    def lay(self) -> Layout:
        return layout(self.ctx)

    @cached_property
    def above(self) -> tuple[frozenset[int], ...]:
        """``above[i]``: positions ``j`` with ``sets[i] < sets[j]``."""
        return tuple(frozenset(j for j, b in enumerate(self.sets) if prec(a, b)) for a in self.sets)

    @cached_property
    def rank(self) -> tuple[int, ...]:
        r = ranks(self.sets)
        return tuple(r[s.members] for s in self.sets)

    def has(self, i: int, f: Formula) -> bool:
        return f in self.sets[i]

    def prec_c(self, i: int, j: int, c: int, star: bool = False) -> bool:
        lay = self.lay
        g, d = self.sets[i].members, self.sets[j].members
        return lay.succ(g, d, lay.c_req(g, c, star))
