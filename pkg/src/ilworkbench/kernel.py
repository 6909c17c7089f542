# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Axiom schemes, Hilbert proofs and the proof checker.

Schemes are matched syntactically against patterns whose metavariables are the
uppercase variables ``A``, ``B`` and ``C`` (never produced by the parser).  ``G1`` is
decided by truth tables over the atoms of a formula: its variables and its maximal
``[]``- and ``|>``-rooted subformulas.

Proof lines are numbered from 1, in memory and in proof files.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Union

from ilworkbench.syntax import (
    BOT,
    And,
    Bot,
    Box,
    Formula,
    Imp,
    Neg,
    Or,
    ParseError,
    Rhd,
    Top,
    Var,
    dia,
    iff,
    parse,
    render,
)

if TYPE_CHECKING:
    from ilworkbench.logics import Logic

A, B, C = Var("A"), Var("B"), Var("C")
METAVARS = ("A", "B", "C")


class Scheme(str, enum.Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    J1 = "J1"
    J1p = "J1'"
    J2 = "J2"
    J2plus = "J2plus"
    J2plusp = "J2plus'"
    J3 = "J3"
    J4 = "J4"
    J4p = "J4'"
    J4plus = "J4plus"
    J4plusp = "J4plus'"
    J4pluspp = "J4plus''"
    J5 = "J5"
    J6 = "J6"

    @classmethod
    def lookup(cls, name: str) -> Scheme:
        """Resolve ``J2+``-style or enum-style names; raises ``KeyError`` listing valid names."""
        key = name.strip().replace("+", "plus").replace("′", "'").replace("″", "''")
        for s in cls:
            if s.value == key or s.name == key:
                return s
        raise KeyError(f"Unknown scheme {name!r}. Available schemes: {', '.join(s.value for s in cls)}")

    @property
    def label(self) -> str:
        return self.value.replace("plus", "+")

    @property
    def pattern(self) -> Formula | None:
        return PATTERNS.get(self)


PATTERNS: dict[Scheme, Formula] = {
    Scheme.G2: Imp(Box(Imp(A, B)), Imp(Box(A), Box(B))),
    Scheme.G3: Imp(Box(Imp(Box(A), A)), Box(A)),
    Scheme.J1: Imp(Box(Imp(A, B)), Rhd(A, B)),
    Scheme.J1p: Rhd(A, A),
    Scheme.J2: Imp(And(Rhd(A, B), Rhd(B, C)), Rhd(A, C)),
    Scheme.J2plus: Imp(And(Rhd(A, Or(B, C)), Rhd(B, C)), Rhd(A, C)),
    Scheme.J2plusp: Imp(And(Rhd(A, B), Rhd(And(B, Neg(C)), C)), Rhd(A, C)),
    Scheme.J3: Imp(And(Rhd(A, C), Rhd(B, C)), Rhd(Or(A, B), C)),
    Scheme.J4: Imp(Rhd(A, B), Imp(dia(A), dia(B))),
    Scheme.J4p: Imp(Rhd(A, B), Imp(Rhd(B, BOT), Rhd(A, BOT))),
    Scheme.J4plus: Imp(Box(Imp(A, B)), Imp(Rhd(C, A), Rhd(C, B))),
    Scheme.J4plusp: Imp(Box(A), Imp(Rhd(C, Imp(A, B)), Rhd(C, B))),
    Scheme.J4pluspp: Imp(Box(A), Imp(Rhd(C, B), Rhd(C, And(A, B)))),
    Scheme.J5: Rhd(dia(A), A),
    Scheme.J6: iff(Box(A), Rhd(Neg(A), BOT)),
}

Substitution = dict[str, Formula]


def substitute(pattern: Formula, subst: Substitution) -> Formula:
    """Replace metavariables of *pattern*; unbound metavariables are an error."""
    if isinstance(pattern, Var) and pattern.name in METAVARS:
        try:
            return subst[pattern.name]
        except KeyError:
            raise KeyError(f"metavariable {pattern.name} is not bound") from None
    kids = pattern.children()
    if not kids:
        return pattern
    return type(pattern)(*(substitute(k, subst) for k in kids))


def instantiate(scheme: Scheme, a: Formula | None = None, b: Formula | None = None, c: Formula | None = None) -> Formula:
    """The instance of *scheme* at the given arguments."""
    pattern = scheme.pattern
    if pattern is None:
        raise ValueError("G1 has no pattern; any tautology is an instance")
    subst = {k: v for k, v in (("A", a), ("B", b), ("C", c)) if v is not None}
    return substitute(pattern, subst)


def _match(pattern: Formula, f: Formula, subst: Substitution) -> bool:
    if isinstance(pattern, Var) and pattern.name in METAVARS:
        bound = subst.get(pattern.name)
        if bound is None:
            subst[pattern.name] = f
            return True
        return bound == f
    if type(pattern) is not type(f):
        return False
    if isinstance(pattern, Var):
        return pattern == f
    return all(_match(p, g, subst) for p, g in zip(pattern.children(), f.children()))


# ---------------------------------------------------------------------------
# Propositional layer (G1)
# ---------------------------------------------------------------------------

def prop_atoms(f: Formula, acc: dict[Formula, None] | None = None) -> list[Formula]:
    """Variables and maximal ``[]``/``|>``-rooted subformulas, in first-occurrence order."""
    out: dict[Formula, None] = {} if acc is None else acc
    if isinstance(f, (Var, Box, Rhd)):
        out.setdefault(f, None)
    else:
        for c in f.children():
            prop_atoms(c, out)
    return list(out)


def truth_table(f: Formula, columns: dict[Formula, int], full: int) -> int:
    """Evaluate *f* bit-parallel: each atom's column holds its value under every assignment."""
    match f:
        case Top():
            return full
        case Bot():
            return 0
        case Neg(a):
            return full & ~truth_table(a, columns, full)
        case And(a, b):
            return truth_table(a, columns, full) & truth_table(b, columns, full)
        case Or(a, b):
            return truth_table(a, columns, full) | truth_table(b, columns, full)
        case Imp(a, b):
            return (full & ~truth_table(a, columns, full)) | truth_table(b, columns, full)
    return columns[f]


def assignment_columns(n: int) -> tuple[list[int], int]:
    """Bit-sliced columns for *n* boolean inputs over all ``2**n`` assignments.

    Bit ``v`` of column ``i`` is bit ``i`` of ``v``.
    """
    size = 1 << n
    full = (1 << size) - 1
    cols: list[int] = []
    for i in range(n):
        width = 1 << i
        block = ((1 << width) - 1) << width
        col, length = block, 2 * width
        while length < size:
            col |= col << length
            length *= 2
        cols.append(col & full)
    return cols, full


class BudgetExceeded(RuntimeError):
    """A search would exceed a configured limit; ``bound`` is what it would need."""

    def __init__(self, message: str, bound: int, limit: int) -> None:
        super().__init__(f"{message}: needs {bound}, limit is {limit}")
        self.bound = bound
        self.limit = limit


# Tables wider than 2**_BLOCK_BITS assignments are evaluated block by block.
MAX_TAUTOLOGY_ATOMS = 24
_BLOCK_BITS = 16


def is_tautology(f: Formula) -> bool:
    """Truth-table check; ``BudgetExceeded`` beyond ``MAX_TAUTOLOGY_ATOMS`` atoms."""
    atoms = prop_atoms(f)
    n = len(atoms)
    if n > MAX_TAUTOLOGY_ATOMS:
        raise BudgetExceeded(f"tautology check over {n} propositional atoms", n, MAX_TAUTOLOGY_ATOMS)
    low = min(n, _BLOCK_BITS)
    cols, full = assignment_columns(low)
    columns = dict(zip(atoms, cols))
    for high in range(1 << (n - low)):
        for i, atom in enumerate(atoms[low:]):
            columns[atom] = full if high >> i & 1 else 0
        if truth_table(f, columns, full) != full:
            return False
    return True


def entails(premises: Sequence[Formula], conclusion: Formula) -> bool:
    """Propositional consequence, treating modal subformulas as atoms."""
    goal: Formula = conclusion
    for p in reversed(premises):
        goal = Imp(p, goal)
    return is_tautology(goal)


def is_instance(f: Formula, scheme: Scheme) -> Substitution | None:
    """The matching substitution, ``{}`` for a tautology under ``G1``, or ``None``."""
    if scheme is Scheme.G1:
        return {} if is_tautology(f) else None
    subst: Substitution = {}
    pattern = scheme.pattern
    assert pattern is not None
    return subst if _match(pattern, f, subst) else None


# ---------------------------------------------------------------------------
# Proofs
# ---------------------------------------------------------------------------

class Rule(str, enum.Enum):
    MP = "MP"
    NEC = "NEC"
    R1 = "R1"
    R2 = "R2"


ALL_RULES = frozenset(Rule)


@dataclass(frozen=True)
class Axiom:
    scheme: Scheme
    subst: tuple[tuple[str, Formula], ...] = ()


@dataclass(frozen=True)
class MP:
    minor: int
    major: int


@dataclass(frozen=True)
class Nec:
    line: int


@dataclass(frozen=True)
class R1:
    line: int
    side: Formula


@dataclass(frozen=True)
class R2:
    line: int
    side: Formula


Justification = Union[Axiom, MP, Nec, R1, R2]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    why: Justification


@dataclass(frozen=True)
class Proof:
    lines: tuple[ProofLine, ...]

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self) -> Iterator[ProofLine]:
        return iter(self.lines)

    @property
    def conclusion(self) -> Formula:
        if not self.lines:
            raise ValueError("empty proof has no conclusion")
        return self.lines[-1].formula


@dataclass(frozen=True)
class ProofVerdict:
    accepted: bool
    line: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.accepted


def _check_line(logic: Logic, lines: Sequence[ProofLine], n: int) -> str | None:
    line = lines[n - 1]
    f, why = line.formula, line.why

    def earlier(i: int) -> Formula | None:
        return lines[i - 1].formula if 1 <= i < n else None

    match why:
        case Axiom(scheme, subst):
            if scheme not in logic.schemes:
                return f"scheme {scheme.label} is not an axiom of {logic.name}"
            try:
                found = is_instance(f, scheme)
            except BudgetExceeded as e:
                return str(e)
            if found is None:
                what = "a tautology" if scheme is Scheme.G1 else f"an instance of {scheme.label}"
                return f"formula is not {what}"
            for key, value in subst:
                if found.get(key) != value:
                    return f"{key}={render(value)} does not match the instance"
            return None
        case MP(i, j):
            if Rule.MP not in logic.rules:
                return f"MP is not a rule of {logic.name}"
            minor, major = earlier(i), earlier(j)
            if minor is None or major is None:
                return "MP must cite earlier lines"
            if major != Imp(minor, f):
                return f"line {j} is not line {i} -> this line"
            return None
        case Nec(i):
            if Rule.NEC not in logic.rules:
                return f"NEC is not a rule of {logic.name}"
            prem = earlier(i)
            if prem is None:
                return "NEC must cite an earlier line"
            if f != Box(prem):
                return f"this line is not [] of line {i}"
            return None
        case R1(i, side) | R2(i, side):
            rule = Rule.R1 if isinstance(why, R1) else Rule.R2
            if rule not in logic.rules:
                return f"{rule.value} is not a rule of {logic.name}"
            prem = earlier(i)
            if prem is None:
                return f"{rule.value} must cite an earlier line"
            if not isinstance(prem, Imp):
                return f"line {i} is not an implication"
            a, b = prem.left, prem.right
            expected = Imp(Rhd(side, a), Rhd(side, b)) if rule is Rule.R1 else Imp(Rhd(b, side), Rhd(a, side))
            if f != expected:
                return f"{rule.value} from line {i} gives {render(expected)}"
            return None
    return f"unknown justification {why!r}"


def check_proof(logic: Logic, proof: Proof) -> ProofVerdict:
    """Check *proof* line by line in *logic*; the first failing line is reported."""
    for n in range(1, len(proof.lines) + 1):
        reason = _check_line(logic, proof.lines, n)
        if reason is not None:
            return ProofVerdict(False, n, reason)
    return ProofVerdict(True)


# ---------------------------------------------------------------------------
# Building proofs
# ---------------------------------------------------------------------------

@dataclass
class ProofBuilder:
    """Accumulates proof lines; every method returns the number of the line it added."""

    lines: list[ProofLine] = field(default_factory=list)

    def add(self, formula: Formula, why: Justification) -> int:
        self.lines.append(ProofLine(formula, why))
        return len(self.lines)

    def __getitem__(self, n: int) -> Formula:
        return self.lines[n - 1].formula

    def ax(self, scheme: Scheme, a: Formula | None = None, b: Formula | None = None, c: Formula | None = None) -> int:
        subst = tuple((k, v) for k, v in (("A", a), ("B", b), ("C", c)) if v is not None)
        return self.add(instantiate(scheme, a, b, c), Axiom(scheme, subst))

    def taut(self, f: Formula) -> int:
        return self.add(f, Axiom(Scheme.G1))

    def mp(self, minor: int, major: int) -> int:
        consequent = self[major]
        if not isinstance(consequent, Imp):
            raise ValueError(f"line {major} is not an implication")
        return self.add(consequent.right, MP(minor, major))

    def nec(self, n: int) -> int:
        return self.add(Box(self[n]), Nec(n))

    def r1(self, n: int, side: Formula) -> int:
        prem = self[n]
        assert isinstance(prem, Imp)
        return self.add(Imp(Rhd(side, prem.left), Rhd(side, prem.right)), R1(n, side))

    def r2(self, n: int, side: Formula) -> int:
        prem = self[n]
        assert isinstance(prem, Imp)
        return self.add(Imp(Rhd(prem.right, side), Rhd(prem.left, side)), R2(n, side))

    def prop(self, conclusion: Formula, *premises: int) -> int:
        """Derive *conclusion* from the cited lines by one tautology and modus ponens."""
        chain: Formula = conclusion
        for n in reversed(premises):
            chain = Imp(self[n], chain)
        cur = self.taut(chain)
        for n in premises:
            cur = self.mp(n, cur)
        return cur

    def box_mono(self, n: int) -> int:
        """From ``X -> Y`` derive ``[]X -> []Y`` (Nec and G2)."""
        prem = self[n]
        assert isinstance(prem, Imp)
        boxed = self.nec(n)
        k = self.ax(Scheme.G2, prem.left, prem.right)
        return self.mp(boxed, k)

    def include(self, proof: Proof) -> int:
        """Append *proof* renumbered; returns the number of its last line."""
        offset = len(self.lines)

        def shift(why: Justification) -> Justification:
            match why:
                case MP(i, j):
                    return MP(i + offset, j + offset)
                case Nec(i):
                    return Nec(i + offset)
                case R1(i, side):
                    return R1(i + offset, side)
                case R2(i, side):
                    return R2(i + offset, side)
            return why

        for line in proof.lines:
            self.add(line.formula, shift(line.why))
        return len(self.lines)

    def build(self) -> Proof:
        return Proof(tuple(self.lines))


def _split_iff(f: Formula) -> tuple[Formula, Formula]:
    if isinstance(f, And) and isinstance(f.left, Imp) and isinstance(f.right, Imp):
        if f.left.left == f.right.right and f.left.right == f.right.left:
            return f.left.left, f.left.right
    raise ValueError(f"not a biconditional: {render(f)}")


def congruence_proof(p_ab: Proof, p_cd: Proof, logic: Logic | None = None) -> Proof:
    """From proofs of ``A0 <-> A1`` and ``B0 <-> B1`` build one of ``A0|>B0 <-> A1|>B1``.

    Only G1, MP, R1 and R2 are used beyond the two input proofs.
    """
    if logic is not None:
        for p in (p_ab, p_cd):
            verdict = check_proof(logic, p)
            if not verdict:
                raise ValueError(f"input proof rejected at line {verdict.line}: {verdict.reason}")
    a0, a1 = _split_iff(p_ab.conclusion)
    b0, b1 = _split_iff(p_cd.conclusion)
    pb = ProofBuilder()
    ab = pb.include(p_ab)
    cd = pb.include(p_cd)
    a10 = pb.prop(Imp(a1, a0), ab)
    a01 = pb.prop(Imp(a0, a1), ab)
    b01 = pb.prop(Imp(b0, b1), cd)
    b10 = pb.prop(Imp(b1, b0), cd)
    step1 = pb.r2(a10, b0)   # A0|>B0 -> A1|>B0
    step2 = pb.r1(b01, a1)   # A1|>B0 -> A1|>B1
    step3 = pb.r2(a01, b1)   # A1|>B1 -> A0|>B1
    step4 = pb.r1(b10, a0)   # A0|>B1 -> A0|>B0
    pb.prop(iff(Rhd(a0, b0), Rhd(a1, b1)), step1, step2, step3, step4)
    return pb.build()


# ---------------------------------------------------------------------------
# Proof files
# ---------------------------------------------------------------------------

class ProofFormatError(ValueError):
    """Malformed proof file; ``line`` is the 1-based text line."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


_LINE_RE = re.compile(r"^\s*(\d+)\.\s*(.*?)\s*;\s*(.*?)\s*$")
_ARG_RE = re.compile(r"(?:^|\s)([ABC])=")


def _named_args(text: str) -> dict[str, str]:
    marks = list(_ARG_RE.finditer(text))
    out: dict[str, str] = {}
    for k, m in enumerate(marks):
        end = marks[k + 1].start() if k + 1 < len(marks) else len(text)
        out[m.group(1)] = text[m.end():end].strip()
    return out


def _parse_justification(text: str) -> Justification:
    head, _, rest = text.strip().partition(" ")
    head = head.upper()
    rest = rest.strip()
    if head == "AX":
        scheme_name, _, args = rest.partition(" ")
        scheme = Scheme.lookup(scheme_name)
        subst = tuple((k, parse(v)) for k, v in sorted(_named_args(args).items()))
        return Axiom(scheme, subst)
    if head == "MP":
        i, j = rest.split()
        return MP(int(i), int(j))
    if head == "NEC":
        return Nec(int(rest))
    if head in ("R1", "R2"):
        num, _, args = rest.partition(" ")
        side = _named_args(args).get("C")
        if side is None:
            raise ValueError(f"{head} needs C=<formula>")
        return (R1 if head == "R1" else R2)(int(num), parse(side))
    raise ValueError(f"unknown justification {head!r}")


def parse_proof(text: str) -> Proof:
    """Read the line format ``N. <formula> ; <justification>``; ``#`` starts a comment line."""
    lines: list[ProofLine] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _LINE_RE.match(raw)
        if m is None:
            raise ProofFormatError("expected 'N. <formula> ; <justification>'", lineno)
        if int(m.group(1)) != len(lines) + 1:
            raise ProofFormatError(f"expected line number {len(lines) + 1}", lineno)
        try:
            lines.append(ProofLine(parse(m.group(2)), _parse_justification(m.group(3))))
        except (ParseError, KeyError, ValueError) as e:
            raise ProofFormatError(str(e), lineno) from e
    return Proof(tuple(lines))


def format_justification(why: Justification) -> str:
    match why:
        case Axiom(scheme, subst):
            args = "".join(f" {k}={render(v)}" for k, v in subst)
            return f"AX {scheme.value}{args}"
        case MP(i, j):
            return f"MP {i} {j}"
        case Nec(i):
            return f"NEC {i}"
        case R1(i, side):
            return f"R1 {i} C={render(side)}"
        case R2(i, side):
            return f"R2 {i} C={render(side)}"
    raise TypeError(f"not a justification: {why!r}")


def format_proof(proof: Proof | Iterable[ProofLine]) -> str:
    lines = proof.lines if isinstance(proof, Proof) else tuple(proof)
    return "".join(f"{n}. {render(line.formula)} ; {format_justification(line.why)}\n" for n, line in enumerate(lines, 1))
