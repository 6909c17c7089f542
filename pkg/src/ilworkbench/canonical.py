# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Canonical countermodels over ``K_L``.

Every world pairs a set from ``K_L`` with a tag.  In the operand-tagged constructions
(``ct1`` on Veltman frames, ``gct1`` on generalized frames) the tag is a ``|>``-operand; in
the sequence-tagged ones (``ct2``, ``gct2``) it is a sequence of operands, and the length of
the sequence plus the rank of the set is bounded.  ``R`` is ``<`` between the sets (and, for
sequences, proper extension of the tag); ``S`` follows the logic.

World names: ``G<i>.<j>`` is set ``i`` tagged with operand ``j``; ``G<i>`` followed by one
``.<j>`` per element is set ``i`` tagged with a sequence.  Sets and operands are numbered in
the context's order.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from ilworkbench.correspondence import satisfies
from ilworkbench.genveltman import GenFrame, GenModel
from ilworkbench.kernel import Scheme
from ilworkbench.logics import LOGICS, FrameClass, Logic
from ilworkbench.mcs import KLView, MCSet, enumerate_KL
from ilworkbench.search import Countermodel
from ilworkbench.semantics import BudgetExceeded, FrameVerdict, Model
from ilworkbench.syntax import BOT, AdequateContext, Box, Formula, Var, adequate_closure, render, simneg
from ilworkbench.veltman import VeltmanFrame, VeltmanModel

if TYPE_CHECKING:
    from ilworkbench.oracle import Oracle

logger = logging.getLogger(__name__)

MAX_WORLDS = 20_000

Tag = Union[int, tuple[int, ...]]
World = tuple[int, Tag]


class ProvedError(ValueError):
    """No set of ``K_L`` contains ``~A``: the formula is a theorem of the logic."""


class UnsupportedLogic(ValueError):
    """The requested construction does not apply to this logic."""


def construction_for(logic: Logic) -> str:
    """``ct1``, ``ct2``, ``gct1`` or ``gct2`` for a registered logic."""
    if LOGICS.get(logic.name) != logic:
        raise UnsupportedLogic(f"{logic} is not one of the registered logics")
    if logic.complete_class is FrameClass.VELTMAN:
        return "ct2" if logic.has(Scheme.J2plus, Scheme.J5) else "ct1"
    return "gct2" if logic.has(Scheme.J2, Scheme.J5) else "gct1"


def fmp_bound(logic: Logic, ctx: AdequateContext) -> int:
    """Upper bound on the size of the canonical countermodel, read off its universe.

    Operand-tagged: ``2^|Phi| * |Phi_|>|``.  Sequence-tagged: ranks are bounded by the number
    of ``[]``-formulas ``b``, so ``2^|Phi| * sum(|Phi_|>|^l for l <= b)``.
    """
    m = len(ctx.phi_rhd)
    sets = 2 ** len(ctx)
    if construction_for(logic) in ("ct1", "gct1"):
        return sets * m
    b = sum(isinstance(f, Box) for f in ctx.phi)
    return sets * sum(m ** k for k in range(b + 1))


@dataclass(frozen=True)
class CanonicalModel:
    """A constructed countermodel together with the sets and tags behind its worlds."""

    construction: str
    logic: Logic
    formula: Formula
    ctx: AdequateContext
    model: Model
    root: str
    worlds: Mapping[str, tuple[MCSet, Formula | tuple[Formula, ...]]]

    def __iter__(self) -> Iterator[object]:
        yield self.model
        yield self.root

    def audit(self) -> list[tuple[str, Formula]]:
        """Truth-lemma violations: ``(world, C)`` where membership of ``C`` and forcing differ."""
        bad: list[tuple[str, Formula]] = []
        for f in self.ctx.phi:
            forced = self.model.truth_set(f)
            for w, (gamma, _) in self.worlds.items():
                if (f in gamma) != (w in forced):
                    bad.append((w, f))
        return bad

    def verify(self) -> FrameVerdict:
        """Frame invariants and the logic's frame conditions."""
        frame = self.model.frame
        verdict = frame.check()
        return verdict if not verdict else satisfies(frame, self.logic)

    def countermodel(self) -> Countermodel:
        if not self.verify() or self.model.forces(self.root, self.formula):
            raise AssertionError(f"canonical countermodel for {render(self.formula)} failed re-verification")
        return Countermodel(self.model, self.root, self.formula, 0)


class _Builder:
    """State shared by the four constructions."""

    def __init__(self, kind: str, logic: Logic, a: Formula, oracle: Oracle | None,
                 kl: Sequence[MCSet] | None, max_worlds: int) -> None:
        found = construction_for(logic)
        if found != kind:
            raise UnsupportedLogic(f"{logic} uses the {found} construction, not {kind}")
        self.kind = kind
        self.logic = logic
        self.formula = a
        self.ctx = adequate_closure([a])
        sets = kl if kl is not None else enumerate_KL(logic, self.ctx, oracle)
        self.view = KLView(logic, self.ctx, tuple(sorted(sets, key=lambda s: s.members)))
        self.lay = self.view.lay
        self.n = len(self.view.sets)
        self.m = self.lay.m
        self.max_worlds = max_worlds
        target = simneg(a)
        root = next((i for i, s in enumerate(self.view.sets) if target in s), None)
        if root is None:
            raise ProvedError(f"{logic} proves {render(a)}: no set of K_L contains its negation")
        self.g0 = root
        self.five = logic.has(Scheme.J5)

    # membership helpers on operand positions
    def neg(self, t: int, c: int) -> bool:
        return bool(self.view.sets[t].members & self.lay.op_neg_bit[c])

    def boxneg(self, t: int, c: int) -> bool:
        return bool(self.view.sets[t].members & self.lay.boxneg_bit[c])

    def guard(self, count: int) -> None:
        if count > self.max_worlds:
            raise BudgetExceeded(f"{self.kind} model would have {count} worlds", count, self.max_worlds)

    def tagged(self) -> list[World]:
        worlds: list[World] = [(i, j) for i in range(self.n) for j in range(self.m)]
        self.guard(len(worlds))
        return worlds

    def sequenced(self, bound: int) -> list[World]:
        rank = self.view.rank
        count = sum(self.m ** k for i in range(self.n) for k in range(bound - rank[i] + 1))
        self.guard(count)
        worlds: list[World] = []
        for i in range(self.n):
            for k in range(bound - rank[i] + 1):
                worlds.extend((i, tau) for tau in itertools.product(range(self.m), repeat=k))
        return worlds

    @staticmethod
    def name(w: World) -> str:
        i, tag = w
        if isinstance(tag, tuple):
            return f"G{i}" + "".join(f".{j}" for j in tag)
        return f"G{i}.{tag}"

    def related(self, x: World, y: World) -> bool:
        (i, tau), (k, sigma) = x, y
        if k not in self.view.above[i]:
            return False
        if isinstance(tau, tuple):
            assert isinstance(sigma, tuple)
            return len(sigma) > len(tau) and sigma[:len(tau)] == tau
        return True

    def finish(self, worlds: list[World], S: dict, root: World, generalized: bool) -> CanonicalModel:
        names = [self.name(w) for w in worlds]
        R = [(self.name(x), self.name(y)) for x in worlds for y in worlds if self.related(x, y)]
        val = {f.name: frozenset(self.name(w) for w in worlds if f in self.view.sets[w[0]])
               for f in self.ctx.phi if isinstance(f, Var)}
        model: Model
        if generalized:
            model = GenModel(GenFrame.build(names, R, S), val)
        else:
            model = VeltmanModel(VeltmanFrame.build(names, R, S), val)
        ops = self.lay.ops
        tags = {
            self.name(w): (self.view.sets[w[0]],
                           tuple(ops[j] for j in w[1]) if isinstance(w[1], tuple) else ops[w[1]])
            for w in worlds
        }
        logger.info("%s model for %s in %s: %d worlds from |K_L| = %d",
                    self.kind, render(self.formula), self.logic, len(worlds), self.n)
        return CanonicalModel(self.kind, self.logic, self.formula, self.ctx, model, self.name(root), tags)


def _pairs(a: Sequence[World], b: Sequence[World]) -> list[list[World]]:
    """Minimal sets meeting both *a* and *b*."""
    bs = set(b)
    both = [w for w in a if w in bs]
    only_a = [w for w in a if w not in bs]
    aset = set(a)
    only_b = [w for w in b if w not in aset]
    return [[w] for w in both] + [[x, y] for x in only_a for y in only_b]


def canonical_ct1(logic: Logic, a: Formula, oracle: Oracle | None = None,
                  kl: Sequence[MCSet] | None = None, max_worlds: int = MAX_WORLDS) -> CanonicalModel:
    """Operand-tagged Veltman countermodel for the ten logics without both J2+ and J5.

    ``<D,C> S_<G,B> <T,E>`` needs ``G < D``; when ``G <_C D`` (and ``[]~C`` in D under J5) T
    must contain ``~C``.  Under J4+ the target must be an ``R``-successor; under J2+ it must
    also be tagged ``C`` with ``G <_C T``.
    """
    b = _Builder("ct1", logic, a, oracle, kl, max_worlds)
    view, m = b.view, b.m
    worlds = b.tagged()
    rz = logic.has(Scheme.J4plus)
    j2p = logic.has(Scheme.J2plus)
    S: dict[str, set[tuple[str, str]]] = {}
    for i in range(b.n):
        pairs: set[tuple[str, str]] = set()
        for k in sorted(view.above[i]):
            for c in range(m):
                trig = view.prec_c(i, k, c) and (not b.five or b.boxneg(k, c))
                y = b.name((k, c))
                for t in range(b.n):
                    if rz and t not in view.above[i]:
                        continue
                    if trig and (not b.neg(t, c) or (j2p and not view.prec_c(i, t, c))):
                        continue
                    tags = [c] if trig and j2p else range(m)
                    pairs.update((y, b.name((t, d))) for d in tags)
        for j in range(m):
            S[b.name((i, j))] = pairs
    return b.finish(worlds, S, (b.g0, b.lay.operand(BOT)), generalized=False)


def canonical_ct2(logic: Logic, a: Formula, oracle: Oracle | None = None,
                  kl: Sequence[MCSet] | None = None, max_worlds: int = MAX_WORLDS) -> CanonicalModel:
    """Sequence-tagged Veltman countermodel for IL-(J2+,J5) and IL.

    Worlds ``<G,t>`` with ``rank(G) + |t| <= rank(G0)``.  ``S_x`` relates ``R``-successors of x;
    when the successor's tag continues ``t`` with ``C``, ``G <*_C D`` and ``[]~C`` is in D, the
    target must continue ``t`` with ``C`` too and be a C-critical successor with ``~C, []~C``.
    """
    b = _Builder("ct2", logic, a, oracle, kl, max_worlds)
    view = b.view
    worlds = b.sequenced(view.rank[b.g0])
    S: dict[str, set[tuple[str, str]]] = {}
    for x in worlds:
        i, tau = x
        assert isinstance(tau, tuple)
        succ = [w for w in worlds if b.related(x, w)]
        pairs: set[tuple[str, str]] = set()
        for y in succ:
            k, sigma = y
            assert isinstance(sigma, tuple)
            c = sigma[len(tau)]
            trig = view.prec_c(i, k, c, star=True) and b.boxneg(k, c)
            for z in succ:
                t, rho = z
                assert isinstance(rho, tuple)
                if trig and not (rho[len(tau)] == c and view.prec_c(i, t, c, star=True)
                                 and b.neg(t, c) and b.boxneg(t, c)):
                    continue
                pairs.add((b.name(y), b.name(z)))
        S[b.name(x)] = pairs
    return b.finish(worlds, S, (b.g0, ()), generalized=False)


def canonical_gct1(logic: Logic, a: Formula, oracle: Oracle | None = None,
                   kl: Sequence[MCSet] | None = None, max_worlds: int = MAX_WORLDS) -> CanonicalModel:
    """Operand-tagged generalized countermodel for the six J4 logics without both J2 and J5.

    ``<D,C> S_<G,B> V`` needs an ``R``-successor in V; when ``G <_C D`` (and ``[]~C`` in D
    under J5) V must also contain a set with ``~C``.  Under J2 V instead needs a ``~C`` world
    (an ``R``-successor under J4+) and a ``C``-tagged ``<_C``-successor.
    """
    b = _Builder("gct1", logic, a, oracle, kl, max_worlds)
    view, m = b.view, b.m
    worlds = b.tagged()
    j2 = logic.has(Scheme.J2)
    j4p = logic.has(Scheme.J4plus)
    S: dict[str, dict[str, list[list[str]]]] = {}
    for i in range(b.n):
        succ = [(k, c) for k in sorted(view.above[i]) for c in range(m)]
        row: dict[str, list[list[str]]] = {}
        for y in succ:
            k, c = y
            assert isinstance(c, int)
            trig = view.prec_c(i, k, c) and (not b.five or b.boxneg(k, c))
            if not trig:
                gens = [[z] for z in succ]
            elif j2:
                a0 = [w for w in worlds if b.neg(w[0], c) and (not j4p or w[0] in view.above[i])]
                b1 = [(t, c) for t in sorted(view.above[i]) if view.prec_c(i, t, c)]
                gens = _pairs(a0, b1)
            else:
                gens = _pairs([w for w in worlds if b.neg(w[0], c)], succ)
            row[b.name(y)] = [[b.name(z) for z in g] for g in gens]
        for j in range(m):
            S[b.name((i, j))] = row
    return b.finish(worlds, S, (b.g0, b.lay.operand(BOT)), generalized=True)


def canonical_gct2(logic: Logic, a: Formula, oracle: Oracle | None = None,
                   kl: Sequence[MCSet] | None = None, max_worlds: int = MAX_WORLDS) -> CanonicalModel:
    """Sequence-tagged generalized countermodel for IL-(J2,J5) and IL-(J2,J4+,J5).

    Worlds ``<G,t>`` with ``rank(G) + |t|`` at most the largest rank in ``K_L``.  When the
    successor's tag continues ``t`` with ``C``, ``G <*_C D`` and ``[]~C`` is in D, V needs a
    ``~C`` world and a C-critical successor with ``[]~C`` whose tag continues ``t`` with ``C``;
    under J4+ the ``~C`` world must be such a continuation and a ``<``-successor as well.
    """
    b = _Builder("gct2", logic, a, oracle, kl, max_worlds)
    view = b.view
    worlds = b.sequenced(max(view.rank, default=0))
    j4p = logic.has(Scheme.J4plus)
    S: dict[str, dict[str, list[list[str]]]] = {}

    def continues(tau: tuple[int, ...], w: World, c: int) -> bool:
        rho = w[1]
        assert isinstance(rho, tuple)
        return len(rho) > len(tau) and rho[:len(tau)] == tau and rho[len(tau)] == c

    for x in worlds:
        i, tau = x
        assert isinstance(tau, tuple)
        succ = [w for w in worlds if b.related(x, w)]
        row: dict[str, list[list[str]]] = {}
        for y in succ:
            k, sigma = y
            assert isinstance(sigma, tuple)
            c = sigma[len(tau)]
            if view.prec_c(i, k, c, star=True) and b.boxneg(k, c):
                a2 = [w for w in worlds if continues(tau, w, c)
                      and view.prec_c(i, w[0], c, star=True) and b.boxneg(w[0], c)]
                a1 = [w for w in worlds if b.neg(w[0], c)
                      and (not j4p or (continues(tau, w, c) and w[0] in view.above[i]))]
                gens = _pairs(a1, a2)
            else:
                gens = [[z] for z in succ]
            row[b.name(y)] = [[b.name(z) for z in g] for g in gens]
        S[b.name(x)] = row
    return b.finish(worlds, S, (b.g0, ()), generalized=True)


CONSTRUCTIONS = {
    "ct1": canonical_ct1,
    "ct2": canonical_ct2,
    "gct1": canonical_gct1,
    "gct2": canonical_gct2,
}


def canonical_model(logic: Logic, a: Formula, oracle: Oracle | None = None,
                    kl: Sequence[MCSet] | None = None, max_worlds: int = MAX_WORLDS) -> CanonicalModel:
    """The construction matching *logic*; ``ProvedError`` when *a* is a theorem."""
    return CONSTRUCTIONS[construction_for(logic)](logic, a, oracle, kl, max_worlds)
