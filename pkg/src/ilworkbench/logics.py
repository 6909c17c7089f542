# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""The registry of twenty sublogics of IL.

Twelve logics are complete with respect to Veltman prestructures; the other eight
only with respect to generalized Veltman frames.  Names follow the ``IL-(J1,J4+)``
convention with ``CL`` = ``IL-(J1,J2)`` and ``IL`` = ``IL-(J1,J2,J5)``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass, field

from ilworkbench.kernel import ALL_RULES, Rule, Scheme

BASE = frozenset({Scheme.G1, Scheme.G2, Scheme.G3, Scheme.J3, Scheme.J6})

# Schemes registered together with each primary scheme.
ALIASES: dict[Scheme, frozenset[Scheme]] = {
    Scheme.J1: frozenset({Scheme.J1, Scheme.J1p}),
    Scheme.J2: frozenset({Scheme.J2}),
    Scheme.J2plus: frozenset({Scheme.J2plus, Scheme.J2plusp}),
    Scheme.J4: frozenset({Scheme.J4, Scheme.J4p}),
    Scheme.J4plus: frozenset({Scheme.J4plus, Scheme.J4plusp, Scheme.J4pluspp}),
    Scheme.J5: frozenset({Scheme.J5}),
}

PRIMARY = (Scheme.J1, Scheme.J2, Scheme.J2plus, Scheme.J4, Scheme.J4plus, Scheme.J5)


class FrameClass(str, enum.Enum):
    VELTMAN = "veltman"
    GENERALIZED = "generalized"


def _closure(primary: Iterable[Scheme]) -> frozenset[Scheme]:
    """Primary schemes derivable from *primary* in the base logic."""
    out = set(primary)
    changed = True
    while changed:
        before = len(out)
        if Scheme.J2plus in out:
            out |= {Scheme.J2, Scheme.J4plus}
        if Scheme.J2 in out or Scheme.J4plus in out:
            out.add(Scheme.J4)
        if Scheme.J1 in out and Scheme.J2 in out:
            out.add(Scheme.J2plus)
        changed = len(out) != before
    return frozenset(out)


@dataclass(frozen=True)
class Logic:
    """A named logic: base axioms plus schemes, its rules and its complete frame class."""

    name: str
    primary: frozenset[Scheme]
    complete_class: FrameClass
    schemes: frozenset[Scheme] = field(default=frozenset())
    rules: frozenset[Rule] = ALL_RULES

    def __post_init__(self) -> None:
        if not self.schemes:
            expanded = set(BASE)
            for s in self.primary:
                expanded |= ALIASES[s]
            object.__setattr__(self, "schemes", frozenset(expanded))

    @property
    def effective(self) -> frozenset[Scheme]:
        """Primary schemes of this logic together with those it derives."""
        return _closure(self.primary)

    def has(self, *schemes: Scheme) -> bool:
        return all(s in self.effective for s in schemes)

    @property
    def veltman_conditions(self) -> frozenset[str]:
        return frozenset(_VELTMAN_CONDITION[s] for s in self.primary)

    @property
    def gen_conditions(self) -> frozenset[str]:
        return frozenset(_GEN_CONDITION[s] for s in self.primary)

    @property
    def frame_conditions(self) -> frozenset[str]:
        if self.complete_class is FrameClass.VELTMAN:
            return self.veltman_conditions
        return self.gen_conditions

    def conditions_for(self, frame_class: FrameClass) -> frozenset[str]:
        return self.veltman_conditions if frame_class is FrameClass.VELTMAN else self.gen_conditions

    def __str__(self) -> str:
        return self.name


# J2+ and J4+ share their frame conditions with J2 and J4 on Veltman prestructures.
_VELTMAN_CONDITION = {
    Scheme.J1: "V_J1",
    Scheme.J2: "V_J2",
    Scheme.J2plus: "V_J2",
    Scheme.J4: "V_J4",
    Scheme.J4plus: "V_J4",
    Scheme.J5: "V_J5",
}
_GEN_CONDITION = {
    Scheme.J1: "G_J1",
    Scheme.J2: "G_J2",
    Scheme.J2plus: "G_J2plus",
    Scheme.J4: "G_J4",
    Scheme.J4plus: "G_J4plus",
    Scheme.J5: "G_J5",
}


def _label(primary: Iterable[Scheme]) -> str:
    order = {s: i for i, s in enumerate(PRIMARY)}
    parts = [s.label for s in sorted(primary, key=order.__getitem__)]
    return f"IL-({','.join(parts)})" if parts else "IL-"


def make_logic(*primary: Scheme, name: str | None = None,
               complete_class: FrameClass = FrameClass.VELTMAN) -> Logic:
    return Logic(name or _label(primary), frozenset(primary), complete_class)


def strict_logic(*schemes: Scheme, name: str | None = None, rules: frozenset[Rule] = ALL_RULES,
                 base: frozenset[Scheme] = BASE) -> Logic:
    """An auxiliary logic with exactly the given schemes and no aliases."""
    label = name or "IL-[" + ",".join(s.label for s in schemes) + "]"
    primary = frozenset(s for s in schemes if s in PRIMARY)
    return Logic(label, primary, FrameClass.VELTMAN, frozenset(base | set(schemes)), rules)


J1, J2, J2P, J4, J4P, J5 = Scheme.J1, Scheme.J2, Scheme.J2plus, Scheme.J4, Scheme.J4plus, Scheme.J5
V, G = FrameClass.VELTMAN, FrameClass.GENERALIZED

_REGISTRY: tuple[Logic, ...] = (
    make_logic(),
    make_logic(J1),
    make_logic(J4P),
    make_logic(J5),
    make_logic(J1, J5),
    make_logic(J4P, J5),
    make_logic(J1, J4P),
    make_logic(J2P),
    make_logic(J1, J4P, J5),
    make_logic(J2P, J5),
    make_logic(J1, J2, name="CL"),
    make_logic(J1, J2, J5, name="IL"),
    make_logic(J4, complete_class=G),
    make_logic(J1, J4, complete_class=G),
    make_logic(J4, J5, complete_class=G),
    make_logic(J2, complete_class=G),
    make_logic(J1, J4, J5, complete_class=G),
    make_logic(J2, J5, complete_class=G),
    make_logic(J2, J4P, complete_class=G),
    make_logic(J2, J4P, J5, complete_class=G),
)

LOGICS: dict[str, Logic] = {lg.name: lg for lg in _REGISTRY}

# Ignatiev's axiomatization of CL: GL with J1-J4, modus ponens and necessitation only.
CL_GL = strict_logic(Scheme.J1, Scheme.J2, Scheme.J4, name="CL(GL,J1-J4)",
                     rules=frozenset({Rule.MP, Rule.NEC}),
                     base=frozenset({Scheme.G1, Scheme.G2, Scheme.G3, Scheme.J3}))

# Hasse edges (smaller, larger) of the two lattices.
EDGES: tuple[tuple[str, str], ...] = (
    ("IL-", "IL-(J5)"), ("IL-", "IL-(J1)"), ("IL-", "IL-(J4+)"),
    ("IL-(J5)", "IL-(J1,J5)"), ("IL-(J5)", "IL-(J4+,J5)"),
    ("IL-(J1)", "IL-(J1,J5)"), ("IL-(J1)", "IL-(J1,J4+)"),
    ("IL-(J4+)", "IL-(J4+,J5)"), ("IL-(J4+)", "IL-(J1,J4+)"), ("IL-(J4+)", "IL-(J2+)"),
    ("IL-(J1,J5)", "IL-(J1,J4+,J5)"), ("IL-(J4+,J5)", "IL-(J1,J4+,J5)"), ("IL-(J4+,J5)", "IL-(J2+,J5)"),
    ("IL-(J1,J4+)", "IL-(J1,J4+,J5)"), ("IL-(J1,J4+)", "CL"),
    ("IL-(J2+)", "IL-(J2+,J5)"), ("IL-(J2+)", "CL"),
    ("IL-(J1,J4+,J5)", "IL"), ("IL-(J2+,J5)", "IL"), ("CL", "IL"),
)
GEN_EDGES: tuple[tuple[str, str], ...] = (
    ("IL-(J4)", "IL-(J1,J4)"), ("IL-(J4)", "IL-(J4,J5)"), ("IL-(J4)", "IL-(J2)"),
    ("IL-(J1,J4)", "IL-(J1,J4,J5)"), ("IL-(J4,J5)", "IL-(J1,J4,J5)"),
    ("IL-(J4,J5)", "IL-(J2,J5)"), ("IL-(J2)", "IL-(J2,J5)"), ("IL-(J2)", "IL-(J2,J4+)"),
    ("IL-(J2,J5)", "IL-(J2,J4+,J5)"), ("IL-(J2,J4+)", "IL-(J2,J4+,J5)"),
)


def get_logic(name: str) -> Logic:
    """Look a logic up by name (``IL-``, ``IL-(J1,J4+)``, ``CL``, ``IL`` ...).

    Whitespace and the Unicode minus/superscript forms are tolerated.  Raises ``KeyError``
    listing the registered names.
    """
    key = name.replace(" ", "").replace("⁻", "-").replace("−", "-")
    if key in LOGICS:
        return LOGICS[key]
    raise KeyError(f"Unknown logic {name!r}. Available logics: {', '.join(LOGICS)}")


def list_logics() -> list[Logic]:
    return list(_REGISTRY)


def added_schemes(smaller: Logic, larger: Logic) -> list[Scheme]:
    """Primary schemes of *larger* that *smaller* does not derive."""
    return [s for s in PRIMARY if s in larger.primary and s not in smaller.effective]
