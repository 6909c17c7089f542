# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Checked derivations between the axiom schemes.

Each entry proves one representative instance (``A=p, B=q, C=r``) of a derivability
claim.  Because proofs never inspect the shape of ``p``, ``q`` or ``r``, substituting
arbitrary formulas for them through every line yields a proof of any other instance.

Entries whose point is "scheme X derives scheme Y" are checked in an auxiliary logic
that has X but none of the aliases registered next to it.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from functools import cache

from ilworkbench.kernel import Proof, ProofBuilder, ProofVerdict, Scheme, check_proof, instantiate
from ilworkbench.logics import CL_GL, LOGICS, Logic, strict_logic
from ilworkbench.syntax import BOT, And, Box, Formula, Imp, Neg, Or, Rhd, Var, iff

p, q, r = Var("p"), Var("q"), Var("r")


@dataclass(frozen=True)
class LibraryEntry:
    name: str
    logic: Logic
    proof: Proof
    claim: str

    @property
    def conclusion(self) -> Formula:
        return self.proof.conclusion


# ---------------------------------------------------------------------------
# Reusable derivations (each returns the number of its final line)
# ---------------------------------------------------------------------------

def box_neg_interprets(pb: ProofBuilder, a: Formula, b: Formula) -> int:
    """``[]~a -> a |> b``."""
    falsum = pb.taut(Imp(BOT, b))
    widen = pb.r1(falsum, a)
    to_rhd, _ = box_neg_iff_rhd_bot(pb, a)
    return pb.prop(Imp(Box(Neg(a)), Rhd(a, b)), to_rhd, widen)


def box_neg_iff_rhd_bot(pb: ProofBuilder, a: Formula) -> tuple[int, int]:
    """Lines ``[]~a -> a|>bot`` and ``a|>bot -> []~a`` via J6 at ``~a``."""
    j6 = pb.ax(Scheme.J6, Neg(a))
    down = pb.r2(pb.taut(Imp(a, Neg(Neg(a)))), BOT)
    up = pb.r2(pb.taut(Imp(Neg(Neg(a)), a)), BOT)
    fwd = pb.prop(Imp(Box(Neg(a)), Rhd(a, BOT)), j6, down)
    bwd = pb.prop(Imp(Rhd(a, BOT), Box(Neg(a))), j6, up)
    return fwd, bwd


def strict_implication_left(pb: ProofBuilder, a: Formula, b: Formula, c: Formula) -> int:
    """``[](a -> b) -> (b |> c -> a |> c)``."""
    rest = And(a, Neg(b))
    boxed = pb.box_mono(pb.taut(Imp(Imp(a, b), Neg(rest))))
    rest_c = box_neg_interprets(pb, rest, c)
    join = pb.ax(Scheme.J3, rest, b, c)
    narrow = pb.r2(pb.taut(Imp(a, Or(rest, b))), c)
    return pb.prop(Imp(Box(Imp(a, b)), Imp(Rhd(b, c), Rhd(a, c))), boxed, rest_c, join, narrow)


def reflexive_by_j1(pb: ProofBuilder, a: Formula) -> int:
    """``a |> a`` from J1."""
    boxed = pb.nec(pb.taut(Imp(a, a)))
    return pb.mp(boxed, pb.ax(Scheme.J1, a, a))


def j2plus_axiom(pb: ProofBuilder, a: Formula, b: Formula, c: Formula) -> int:
    return pb.ax(Scheme.J2plus, a, b, c)


def j2plus_from_j1_j2(pb: ProofBuilder, a: Formula, b: Formula, c: Formula) -> int:
    """The J2+ instance at ``a, b, c`` from J1, J2 and J3."""
    refl = reflexive_by_j1(pb, c)
    join = pb.ax(Scheme.J3, b, c, c)
    chain = pb.ax(Scheme.J2, a, Or(b, c), c)
    return pb.prop(instantiate(Scheme.J2plus, a, b, c), refl, join, chain)


def j4_via_bottom(pb: ProofBuilder, source: Callable[[ProofBuilder], int]) -> int:
    """J4 at ``p, q`` from a line ``p|>q -> (q|>bot -> p|>bot)`` built by *source*."""
    step = source(pb)
    _, p_back = box_neg_iff_rhd_bot(pb, p)
    q_fwd, _ = box_neg_iff_rhd_bot(pb, q)
    return pb.prop(instantiate(Scheme.J4, p, q), step, q_fwd, p_back)


def j4plus_from_j2plus(pb: ProofBuilder, j2plus: Callable[[ProofBuilder, Formula, Formula, Formula], int]) -> int:
    """J4+ at ``p, q, r`` given a way to obtain J2+ instances."""
    rest = And(p, Neg(q))
    boxed = pb.box_mono(pb.taut(Imp(Imp(p, q), Neg(rest))))
    rest_q = box_neg_interprets(pb, rest, q)
    widen = pb.r1(pb.taut(Imp(p, Or(rest, q))), r)
    plus = j2plus(pb, r, rest, q)
    return pb.prop(instantiate(Scheme.J4plus, p, q, r), boxed, rest_q, widen, plus)


# ---------------------------------------------------------------------------
# Entries
# ---------------------------------------------------------------------------

def _entry(name: str, logic: Logic, claim: str, body: Callable[[ProofBuilder], object]) -> LibraryEntry:
    pb = ProofBuilder()
    body(pb)
    return LibraryEntry(name, logic, pb.build(), claim)


def _j1_gives_j1p(pb: ProofBuilder) -> None:
    reflexive_by_j1(pb, p)


def _j1p_gives_j1(pb: ProofBuilder) -> None:
    left = strict_implication_left(pb, p, q, q)
    refl = pb.ax(Scheme.J1p, q)
    pb.prop(instantiate(Scheme.J1, p, q), left, refl)


def _j4_gives_j4p(pb: ProofBuilder) -> None:
    j4 = pb.ax(Scheme.J4, p, q)
    p_fwd, _ = box_neg_iff_rhd_bot(pb, p)
    _, q_back = box_neg_iff_rhd_bot(pb, q)
    pb.prop(instantiate(Scheme.J4p, p, q), j4, q_back, p_fwd)


def _j4p_gives_j4(pb: ProofBuilder) -> None:
    j4_via_bottom(pb, lambda b: b.ax(Scheme.J4p, p, q))


def _j2_gives_j4(pb: ProofBuilder) -> None:
    def step(b: ProofBuilder) -> int:
        chain = b.ax(Scheme.J2, p, q, BOT)
        return b.prop(instantiate(Scheme.J4p, p, q), chain)

    j4_via_bottom(pb, step)


def _j4plus_gives_j4plusp(pb: ProofBuilder) -> None:
    boxed = pb.box_mono(pb.taut(Imp(p, Imp(Imp(p, q), q))))
    mono = pb.ax(Scheme.J4plus, Imp(p, q), q, r)
    pb.prop(instantiate(Scheme.J4plusp, p, q, r), boxed, mono)


def _j4plusp_gives_j4pluspp(pb: ProofBuilder) -> None:
    widen = pb.r1(pb.taut(Imp(q, Imp(p, And(p, q)))), r)
    mono = pb.ax(Scheme.J4plusp, p, And(p, q), r)
    pb.prop(instantiate(Scheme.J4pluspp, p, q, r), widen, mono)


def _j4pluspp_gives_j4plus(pb: ProofBuilder) -> None:
    mono = pb.ax(Scheme.J4pluspp, Imp(p, q), p, r)
    narrow = pb.r1(pb.taut(Imp(And(Imp(p, q), p), q)), r)
    pb.prop(instantiate(Scheme.J4plus, p, q, r), mono, narrow)


def _j4plus_gives_j4(pb: ProofBuilder) -> None:
    boxed = pb.box_mono(pb.taut(Imp(Neg(q), Imp(q, BOT))))
    mono = pb.ax(Scheme.J4plus, q, BOT, p)
    _, p_back = box_neg_iff_rhd_bot(pb, p)
    pb.prop(instantiate(Scheme.J4, p, q), boxed, mono, p_back)


def _j2plus_gives_j2plusp(pb: ProofBuilder) -> None:
    rest = And(q, Neg(r))
    widen = pb.r1(pb.taut(Imp(q, Or(rest, r))), p)
    plus = pb.ax(Scheme.J2plus, p, rest, r)
    pb.prop(instantiate(Scheme.J2plusp, p, q, r), widen, plus)


def _j2plusp_gives_j2plus(pb: ProofBuilder) -> None:
    narrow = pb.r2(pb.taut(Imp(And(Or(q, r), Neg(r)), q)), r)
    plus = pb.ax(Scheme.J2plusp, p, Or(q, r), r)
    pb.prop(instantiate(Scheme.J2plus, p, q, r), narrow, plus)


def _j2plus_gives_j2(pb: ProofBuilder) -> None:
    widen = pb.r1(pb.taut(Imp(q, Or(q, r))), p)
    plus = pb.ax(Scheme.J2plus, p, q, r)
    pb.prop(instantiate(Scheme.J2, p, q, r), widen, plus)


def _cl_j6(pb: ProofBuilder) -> None:
    to_box = pb.box_mono(pb.taut(Imp(p, Imp(Neg(p), BOT))))
    j1 = pb.ax(Scheme.J1, Neg(p), BOT)
    j4 = pb.ax(Scheme.J4, Neg(p), BOT)
    consistent = pb.nec(pb.taut(Neg(BOT)))
    unneg = pb.box_mono(pb.taut(Imp(Neg(Neg(p)), p)))
    pb.prop(iff(Box(p), Rhd(Neg(p), BOT)), to_box, j1, j4, consistent, unneg)


def _cl_j4plus(pb: ProofBuilder) -> None:
    j1 = pb.ax(Scheme.J1, p, q)
    j2 = pb.ax(Scheme.J2, r, p, q)
    pb.prop(instantiate(Scheme.J4plus, p, q, r), j1, j2)


def _cl_left_monotone(pb: ProofBuilder) -> None:
    j1 = pb.ax(Scheme.J1, p, q)
    j2 = pb.ax(Scheme.J2, p, q, r)
    pb.prop(Imp(Box(Imp(p, q)), Imp(Rhd(q, r), Rhd(p, r))), j1, j2)


@cache
def theorem_library() -> tuple[LibraryEntry, ...]:
    """Every derivation, each with the logic it is checked in."""
    il = LOGICS["IL-"]
    s = Scheme
    return (
        _entry("boxneg-rhd", il, "[]~A -> A |> B", lambda pb: box_neg_interprets(pb, p, q)),
        _entry("strict-left-mono", il, "[](A -> B) -> (B |> C -> A |> C)", lambda pb: strict_implication_left(pb, p, q, r)),
        _entry("j1-to-j1p", strict_logic(s.J1), "J1 derives J1'", _j1_gives_j1p),
        _entry("j1p-to-j1", strict_logic(s.J1p), "J1' derives J1", _j1p_gives_j1),
        _entry("j4-to-j4p", strict_logic(s.J4), "J4 derives J4'", _j4_gives_j4p),
        _entry("j4p-to-j4", strict_logic(s.J4p), "J4' derives J4", _j4p_gives_j4),
        _entry("j4plus-to-j4plusp", strict_logic(s.J4plus), "J4+ derives J4+'", _j4plus_gives_j4plusp),
        _entry("j4plusp-to-j4pluspp", strict_logic(s.J4plusp), "J4+' derives J4+''", _j4plusp_gives_j4pluspp),
        _entry("j4pluspp-to-j4plus", strict_logic(s.J4pluspp), "J4+'' derives J4+", _j4pluspp_gives_j4plus),
        _entry("j4plus-to-j4", LOGICS["IL-(J4+)"], "J4+ derives J4", _j4plus_gives_j4),
        _entry("j2-to-j4", LOGICS["IL-(J2)"], "J2 derives J4", _j2_gives_j4),
        _entry("j2plus-to-j2plusp", strict_logic(s.J2plus), "J2+ derives J2+'", _j2plus_gives_j2plusp),
        _entry("j2plusp-to-j2plus", strict_logic(s.J2plusp), "J2+' derives J2+", _j2plusp_gives_j2plus),
        _entry("j2plus-to-j2", LOGICS["IL-(J2+)"], "J2+ derives J2", _j2plus_gives_j2),
        _entry("j1-j2-to-j2plus", LOGICS["CL"], "J1 and J2 derive J2+", lambda pb: j2plus_from_j1_j2(pb, p, q, r)),
        _entry("j2plus-to-j4plus", LOGICS["IL-(J2+)"], "J2+ derives J4+", lambda pb: j4plus_from_j2plus(pb, j2plus_axiom)),
        _entry("j1-j2-to-j4plus", LOGICS["CL"], "J1 and J2 derive J4+", lambda pb: j4plus_from_j2plus(pb, j2plus_from_j1_j2)),
        _entry("cl-j6", CL_GL, "CL proves J6", _cl_j6),
        _entry("cl-j4plus", CL_GL, "CL proves J4+ (so R1 is admissible)", _cl_j4plus),
        _entry("cl-left-mono", CL_GL, "CL proves [](A -> B) -> (B |> C -> A |> C) (so R2 is admissible)", _cl_left_monotone),
        _entry("cl-j4", LOGICS["CL"], "IL-(J1,J2) proves J4, so it contains CL", _j2_gives_j4),
    )


def get_entry(name: str) -> LibraryEntry:
    for entry in theorem_library():
        if entry.name == name:
            return entry
    names = ", ".join(e.name for e in theorem_library())
    raise KeyError(f"Unknown library entry {name!r}. Available entries: {names}")


def verify_library() -> list[tuple[LibraryEntry, ProofVerdict]]:
    return [(entry, check_proof(entry.logic, entry.proof)) for entry in theorem_library()]
