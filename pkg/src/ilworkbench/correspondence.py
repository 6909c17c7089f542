# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Frame conditions for J1, J2, J2+, J4, J4+ and J5 and the condition/validity audit.

Each condition is a first-order (Veltman) or set-quantified (generalized) property of a
frame that holds exactly when the scheme's characteristic instance is valid on it.  On
generalized frames the quantifiers over sets ``V`` are checked on generators only: every
condition is preserved by enlarging ``V`` (or the chosen ``U_z``) once it holds for the
generator below it.  ``literal=True`` checks the unreduced power-set reading instead.
"""

from __future__ import annotations

import enum
import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass

from ilworkbench.genveltman import GenFrame
from ilworkbench.kernel import Scheme
from ilworkbench.logics import FrameClass, Logic
from ilworkbench.semantics import Frame, FrameVerdict, Refutation, frame_refutation, iter_bits
from ilworkbench.syntax import Formula, parse
from ilworkbench.veltman import VeltmanFrame

logger = logging.getLogger(__name__)


class ConditionId(str, enum.Enum):
    V_J1 = "V_J1"
    V_J4 = "V_J4"
    V_J2 = "V_J2"
    V_J5 = "V_J5"
    G_J1 = "G_J1"
    G_J4 = "G_J4"
    G_J4plus = "G_J4plus"
    G_J2 = "G_J2"
    G_J2plus = "G_J2plus"
    G_J5 = "G_J5"

    @property
    def frame_class(self) -> FrameClass:
        return FrameClass.VELTMAN if self.value.startswith("V_") else FrameClass.GENERALIZED

    @property
    def scheme(self) -> Scheme:
        return _SCHEME_OF[self]

    @property
    def instance(self) -> Formula:
        return characteristic_instance(self.scheme)


_SCHEME_OF = {
    ConditionId.V_J1: Scheme.J1,
    ConditionId.V_J4: Scheme.J4,
    ConditionId.V_J2: Scheme.J2,
    ConditionId.V_J5: Scheme.J5,
    ConditionId.G_J1: Scheme.J1,
    ConditionId.G_J4: Scheme.J4,
    ConditionId.G_J4plus: Scheme.J4plus,
    ConditionId.G_J2: Scheme.J2,
    ConditionId.G_J2plus: Scheme.J2plus,
    ConditionId.G_J5: Scheme.J5,
}

_INSTANCES = {
    Scheme.J1: "p |> p",
    Scheme.J2: "(p |> q) & (q |> r) -> p |> r",
    Scheme.J2plus: "(p |> q | r) & (q |> r) -> p |> r",
    Scheme.J4: "p |> q -> (<>p -> <>q)",
    Scheme.J4plus: "[](q -> r) -> (p |> q -> p |> r)",
    Scheme.J5: "<>p |> p",
}

# On Veltman frames J2+ shares J2's condition and J4+ shares J4's.
_VELTMAN_FOR = {
    Scheme.J1: ConditionId.V_J1, Scheme.J2: ConditionId.V_J2, Scheme.J2plus: ConditionId.V_J2,
    Scheme.J4: ConditionId.V_J4, Scheme.J4plus: ConditionId.V_J4, Scheme.J5: ConditionId.V_J5,
}
_GEN_FOR = {
    Scheme.J1: ConditionId.G_J1, Scheme.J2: ConditionId.G_J2, Scheme.J2plus: ConditionId.G_J2plus,
    Scheme.J4: ConditionId.G_J4, Scheme.J4plus: ConditionId.G_J4plus, Scheme.J5: ConditionId.G_J5,
}


def characteristic_instance(scheme: Scheme) -> Formula:
    """The fixed instance over ``p, q, r`` used by the correspondence results."""
    try:
        return parse(_INSTANCES[scheme])
    except KeyError:
        raise KeyError(f"No frame condition for {scheme.label}. Available: J1, J2, J2+, J4, J4+, J5") from None


def condition_for(scheme: Scheme | str, frame_class: FrameClass | str) -> ConditionId:
    """Map a CLI scheme name (``J4+``) and a class (``veltman``/``gen``) to a condition."""
    s = scheme if isinstance(scheme, Scheme) else Scheme.lookup(scheme)
    cls = frame_class if isinstance(frame_class, FrameClass) else (
        FrameClass.VELTMAN if frame_class in ("veltman", "native") else FrameClass.GENERALIZED)
    table = _VELTMAN_FOR if cls is FrameClass.VELTMAN else _GEN_FOR
    if s not in table:
        raise KeyError(f"No frame condition for {s.label}. Available: J1, J2, J2+, J4, J4+, J5")
    return table[s]


# Veltman prestructures


def _v_j1(f: VeltmanFrame) -> FrameVerdict:
    for x, y in sorted(f.R, key=f.pair_key):
        if (y, y) not in f.S_at(x):
            return FrameVerdict(False, "x R y but not y S_x y", (x, y))
    return FrameVerdict(True)


def _v_j4(f: VeltmanFrame) -> FrameVerdict:
    for x in f.worlds:
        for y, z in sorted(f.S_at(x), key=f.pair_key):
            if (x, z) not in f.R:
                return FrameVerdict(False, "y S_x z but not x R z", (x, y, z))
    return FrameVerdict(True)


def _v_j2(f: VeltmanFrame) -> FrameVerdict:
    verdict = _v_j4(f)
    if not verdict:
        return verdict
    for x in f.worlds:
        s = f.S_at(x)
        for y, z in sorted(s, key=f.pair_key):
            for z2, w in sorted(s, key=f.pair_key):
                if z2 == z and (y, w) not in s:
                    return FrameVerdict(False, "S_x is not transitive", (x, y, z, w))
    return FrameVerdict(True)


def _v_j5(f: VeltmanFrame) -> FrameVerdict:
    for x, y in sorted(f.R, key=f.pair_key):
        for z in f.successors(y):
            if (y, z) not in f.S_at(x):
                return FrameVerdict(False, "x R y R z but not y S_x z", (x, y, z))
    return FrameVerdict(True)


# Generalized frames, over generators


def _pairs(f: GenFrame) -> Iterator[tuple[int, int]]:
    for x in range(f.n):
        for y in f.succ[x]:
            yield x, y


def _names(f: GenFrame, *idx: int, mask: int = 0) -> tuple[str, ...]:
    return tuple(f.worlds[i] for i in idx) + tuple(f.worlds[i] for i in iter_bits(mask))


def _has_subgen(f: GenFrame, x: int, y: int, target: int) -> bool:
    return any(g & ~target == 0 for g in f.gen_masks[x][y])


def _g_j1(f: GenFrame) -> FrameVerdict:
    for x, y in _pairs(f):
        if not _has_subgen(f, x, y, 1 << y):
            return FrameVerdict(False, "x R y but not y S_x {y}", _names(f, x, y))
    return FrameVerdict(True)


def _g_j5(f: GenFrame) -> FrameVerdict:
    for x, y in _pairs(f):
        for z in f.succ[y]:
            if not _has_subgen(f, x, y, 1 << z):
                return FrameVerdict(False, "x R y R z but not y S_x {z}", _names(f, x, y, z))
    return FrameVerdict(True)


def _g_j4(f: GenFrame) -> FrameVerdict:
    for x in range(f.n):
        for y in range(f.n):
            for g in f.gen_masks[x][y]:
                if not g & f.succ_mask[x]:
                    return FrameVerdict(False, "y S_x V with V disjoint from R[x]", _names(f, x, y, mask=g))
    return FrameVerdict(True)


def _g_j4plus(f: GenFrame) -> FrameVerdict:
    for x in range(f.n):
        for y in range(f.n):
            for g in f.gen_masks[x][y]:
                if not _has_subgen(f, x, y, g & f.succ_mask[x]):
                    return FrameVerdict(False, "y S_x V but not y S_x (V & R[x])", _names(f, x, y, mask=g))
    return FrameVerdict(True)


def _choice_unions(f: GenFrame, x: int, zs: list[int]) -> Iterator[int]:
    """Unions of one generator ``U_z`` for each ``z`` in *zs*; nothing if some ``z`` has none."""
    options = [f.gen_masks[x][z] for z in zs]
    for choice in itertools.product(*options):
        u = 0
        for m in choice:
            u |= m
        yield u


def _g_j2(f: GenFrame) -> FrameVerdict:
    verdict = _g_j4(f)
    if not verdict:
        return verdict
    for x in range(f.n):
        for y in range(f.n):
            for g in f.gen_masks[x][y]:
                zs = list(iter_bits(g & f.succ_mask[x]))
                for u in _choice_unions(f, x, zs):
                    if not _has_subgen(f, x, y, u):
                        return FrameVerdict(False, "y S_x V, z S_x U_z but not y S_x (union of U_z)",
                                            _names(f, x, y, mask=u))
    return FrameVerdict(True)


def _g_j2plus(f: GenFrame) -> FrameVerdict:
    verdict = _g_j4(f)
    if not verdict:
        return verdict
    for x in range(f.n):
        for y in range(f.n):
            for g in f.gen_masks[x][y]:
                inner = list(iter_bits(g & f.succ_mask[x]))
                for bits in itertools.product((0, 1), repeat=len(inner)):
                    v0 = [z for z, b in zip(inner, bits) if not b]
                    v1 = sum(1 << z for z, b in zip(inner, bits) if b)
                    for u in _choice_unions(f, x, v0):
                        if not _has_subgen(f, x, y, u | v1):
                            return FrameVerdict(False, "y S_x (V0 | V1), z S_x U_z but not y S_x (union of U_z | V1)",
                                                _names(f, x, y, mask=u | v1))
    return FrameVerdict(True)


# Generalized frames, literal power-set reading


def _subsets(n: int) -> range:
    return range(1, 1 << n)


def _literal_related(f: GenFrame, x: int, y: int) -> list[int]:
    return [v for v in _subsets(f.n) if _has_subgen(f, x, y, v)]


def _literal(f: GenFrame, c: ConditionId) -> bool:
    rx = f.succ_mask
    if c is ConditionId.G_J1:
        return all(_has_subgen(f, x, y, 1 << y) for x, y in _pairs(f))
    if c is ConditionId.G_J5:
        return all(_has_subgen(f, x, y, 1 << z) for x, y in _pairs(f) for z in f.succ[y])
    j4 = all(v & rx[x] for x in range(f.n) for y in range(f.n) for v in _literal_related(f, x, y))
    if c is ConditionId.G_J4:
        return j4
    if c is ConditionId.G_J4plus:
        return all(_has_subgen(f, x, y, v & rx[x])
                   for x in range(f.n) for y in range(f.n) for v in _literal_related(f, x, y))
    if not j4:
        return False
    for x in range(f.n):
        for y in range(f.n):
            related = _literal_related(f, x, y)
            if c is ConditionId.G_J2:
                splits = ((v, 0) for v in related)
            else:
                splits = ((v0, v1) for v0 in range(1 << f.n) for v1 in range(1 << f.n)
                          if (v0 | v1) in related)
            for v0, v1 in splits:
                zs = list(iter_bits(v0 & rx[x]))
                for choice in itertools.product(*(_literal_related(f, x, z) for z in zs)):
                    u = v1
                    for m in choice:
                        u |= m
                    if not _has_subgen(f, x, y, u):
                        return False
    return True


_CHECKS = {
    ConditionId.V_J1: _v_j1,
    ConditionId.V_J4: _v_j4,
    ConditionId.V_J2: _v_j2,
    ConditionId.V_J5: _v_j5,
    ConditionId.G_J1: _g_j1,
    ConditionId.G_J4: _g_j4,
    ConditionId.G_J4plus: _g_j4plus,
    ConditionId.G_J2: _g_j2,
    ConditionId.G_J2plus: _g_j2plus,
    ConditionId.G_J5: _g_j5,
}


def veltman_condition(frame: VeltmanFrame, c: ConditionId | str) -> FrameVerdict:
    """Check a ``V_*`` condition; the verdict is falsy with a witness when it fails."""
    cid = ConditionId(c)
    if not isinstance(frame, VeltmanFrame) or cid.frame_class is not FrameClass.VELTMAN:
        raise TypeError(f"{cid.value} is not a condition on Veltman prestructures")
    return _CHECKS[cid](frame)


def gen_condition(frame: GenFrame, c: ConditionId | str, literal: bool = False) -> FrameVerdict:
    """Check a ``G_*`` condition on generators, or on all sets ``V`` with *literal*."""
    cid = ConditionId(c)
    if not isinstance(frame, GenFrame) or cid.frame_class is not FrameClass.GENERALIZED:
        raise TypeError(f"{cid.value} is not a condition on generalized frames")
    if literal:
        ok = _literal(frame, cid)
        return FrameVerdict(ok, "" if ok else f"{cid.value} fails on the power-set reading")
    return _CHECKS[cid](frame)


def condition(frame: Frame, c: ConditionId | str) -> FrameVerdict:
    cid = ConditionId(c)
    if cid.frame_class is FrameClass.VELTMAN:
        assert isinstance(frame, VeltmanFrame)
        return veltman_condition(frame, cid)
    assert isinstance(frame, GenFrame)
    return gen_condition(frame, cid)


def satisfies(frame: Frame, logic: Logic) -> FrameVerdict:
    """All of *logic*'s frame conditions for the class of *frame*."""
    cls = FrameClass.GENERALIZED if isinstance(frame, GenFrame) else FrameClass.VELTMAN
    for name in sorted(logic.conditions_for(cls)):
        verdict = condition(frame, name)
        if not verdict:
            return FrameVerdict(False, f"{name}: {verdict.clause}", verdict.witness)
    return FrameVerdict(True)


@dataclass(frozen=True)
class AuditReport:
    condition: ConditionId
    holds: bool
    valid: bool
    refutation: Refutation | None = None
    witness: tuple[str, ...] = ()
    literal: bool | None = None

    @property
    def agree(self) -> bool:
        return self.holds == self.valid and (self.literal is None or self.literal == self.holds)


def correspondence_audit(frame: Frame, c: ConditionId | str, literal: bool = False,
                         max_bits: int = 20) -> AuditReport:
    """Compare the structural condition with validity of the characteristic instance.

    Raises ``BudgetExceeded`` if the instance's valuations exceed *max_bits*.
    """
    cid = ConditionId(c)
    verdict = condition(frame, cid)
    refutation = frame_refutation(frame, cid.instance, max_bits)
    lit = None
    if literal and isinstance(frame, GenFrame):
        lit = bool(gen_condition(frame, cid, literal=True))
    report = AuditReport(cid, bool(verdict), refutation is None, refutation, verdict.witness, lit)
    if not report.agree:
        logger.warning("correspondence mismatch for %s: condition=%s valid=%s", cid.value, report.holds, report.valid)
    return report
