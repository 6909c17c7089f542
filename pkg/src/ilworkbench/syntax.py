# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Formulas of the interpretability language: AST, parser, printer and adequate sets.

The language has propositional variables, ``top``/``bot``, ``~ & | ->``, the unary
modality ``[]`` and the binary modality ``|>``.  ``<>A`` is stored as ``~[]~A``.

Binding strength, tightest first: ``~ [] <>``, ``&``, ``|``, ``|>``, ``->``.
``->`` associates to the right, ``&``/``|`` to the left and ``|>`` not at all.
"""

from __future__ import annotations

import functools
import itertools
import random
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import ClassVar

__all__ = [
    "AdequateContext",
    "And",
    "Bot",
    "Box",
    "Formula",
    "Imp",
    "Neg",
    "Or",
    "ParseError",
    "Rhd",
    "Top",
    "Var",
    "adequate_closure",
    "big_and",
    "big_or",
    "check_adequate",
    "dia",
    "iff",
    "order_key",
    "parse",
    "render",
    "rhd_operands",
    "simneg",
    "subformulas",
    "variables",
]


class Formula:
    """Base class of all formula nodes.

    Nodes are immutable and hash-consed by value; the hash is computed once.
    """

    tag: ClassVar[int] = 0
    _hash: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.tag, *self.children(), *self._atoms())))

    def children(self) -> tuple[Formula, ...]:
        return ()

    def _atoms(self) -> tuple[str, ...]:
        return ()

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Formula) or other.tag != self.tag or other._hash != self._hash:
            return False
        return self._atoms() == other._atoms() and self.children() == other.children()

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({render(self)!r})"


@dataclass(frozen=True, eq=False, repr=False)
class Var(Formula):
    name: str
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 0

    def _atoms(self) -> tuple[str, ...]:
        return (self.name,)


@dataclass(frozen=True, eq=False, repr=False)
class Top(Formula):
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 1


@dataclass(frozen=True, eq=False, repr=False)
class Bot(Formula):
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 2


@dataclass(frozen=True, eq=False, repr=False)
class Neg(Formula):
    sub: Formula
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 3

    def children(self) -> tuple[Formula, ...]:
        return (self.sub,)


@dataclass(frozen=True, eq=False, repr=False)
class Box(Formula):
    sub: Formula
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 4

    def children(self) -> tuple[Formula, ...]:
        return (self.sub,)


@dataclass(frozen=True, eq=False, repr=False)
class And(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 5

    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=False, repr=False)
class Or(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 6

    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=False, repr=False)
class Imp(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 7

    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=False, repr=False)
class Rhd(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, compare=False)
    tag: ClassVar[int] = 8

    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


TOP = Top()
BOT = Bot()


def dia(a: Formula) -> Formula:
    """``<>a``, stored as ``~[]~a``."""
    return Neg(Box(Neg(a)))


def iff(a: Formula, b: Formula) -> Formula:
    """``a <-> b`` as the conjunction of both implications."""
    return And(Imp(a, b), Imp(b, a))


def big_or(items: Iterable[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is ``bot``."""
    result: Formula | None = None
    for item in items:
        result = item if result is None else Or(result, item)
    return BOT if result is None else result


def big_and(items: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``top``."""
    result: Formula | None = None
    for item in items:
        result = item if result is None else And(result, item)
    return TOP if result is None else result


_BINARY: tuple[type[And] | type[Or] | type[Imp] | type[Rhd], ...] = (And, Or, Imp, Rhd)


def random_formula(
    rng: random.Random, depth: int, names: Sequence[str] = ("p", "q"), rhd: bool = True
) -> Formula:
    """A random formula of nesting depth at most *depth* over the variables *names*.

    ``rhd=False`` leaves out ``|>`` so the result is a plain modal formula.
    """
    if depth <= 0 or rng.random() < 0.2:
        pick = rng.randrange(len(names) + 2)
        if pick < len(names):
            return Var(names[pick])
        return TOP if pick == len(names) else BOT
    ops = _BINARY if rhd else _BINARY[:3]
    choice = rng.randrange(len(ops) + 2)
    if choice == 0:
        return Neg(random_formula(rng, depth - 1, names, rhd))
    if choice == 1:
        return Box(random_formula(rng, depth - 1, names, rhd))
    op = ops[choice - 2]
    return op(random_formula(rng, depth - 1, names, rhd), random_formula(rng, depth - 1, names, rhd))


# ---------------------------------------------------------------------------
# Total order
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _structural_key(f: Formula) -> tuple:
    return (f.tag, f._atoms(), tuple(_structural_key(c) for c in f.children()))


@functools.lru_cache(maxsize=None)
def size(f: Formula) -> int:
    return 1 + sum(size(c) for c in f.children())


def order_key(f: Formula) -> tuple:
    """Sort key of the fixed total order: size first, then structure."""
    return (size(f), _structural_key(f))


def variables(f: Formula) -> list[str]:
    """Variable names occurring in *f*, sorted."""
    return sorted({g.name for g in subformulas(f) if isinstance(g, Var)})


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class ParseError(ValueError):
    """Raised on malformed formula text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
    | (?P<rhd>\|>|▷)
    | (?P<imp>->|→)
    | (?P<or>\||∨)
    | (?P<and>&|∧)
    | (?P<neg>~|!|¬)
    | (?P<box>\[\]|□)
    | (?P<dia><>|◇|◊)
    | (?P<top>\#t|⊤)
    | (?P<bot>\#f|⊥)
    | (?P<lpar>\()
    | (?P<rpar>\))
    | (?P<word>[a-zA-Z][a-zA-Z0-9_]*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"box": "box", "dia": "dia", "top": "top", "bot": "bot"}


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup or ""
        if kind == "word":
            word = m.group()
            if word in _KEYWORDS:
                kind = _KEYWORDS[word]
            elif not word[0].islower():
                raise ParseError(f"variables must start with a lowercase letter: {word!r}", pos)
            else:
                kind = "var"
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def take(self, kind: str) -> _Token | None:
        if self.cur.kind == kind:
            tok = self.cur
            self.i += 1
            return tok
        return None

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.take(kind)
        if tok is None:
            found = self.cur.text or "end of input"
            raise ParseError(f"expected {what}, found {found!r}", self.cur.pos)
        return tok

    def parse(self) -> Formula:
        f = self.imp()
        if self.cur.kind != "eof":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return f

    def imp(self) -> Formula:
        left = self.rhd()
        if self.take("imp"):
            return Imp(left, self.imp())
        return left

    def rhd(self) -> Formula:
        left = self.disj()
        if self.take("rhd"):
            right = self.disj()
            if self.cur.kind == "rhd":
                raise ParseError("'|>' is non-associative; parenthesize chained '|>'", self.cur.pos)
            return Rhd(left, right)
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.take("or"):
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.take("and"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.take("neg"):
            return Neg(self.unary())
        if self.take("box"):
            return Box(self.unary())
        if self.take("dia"):
            return dia(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.cur
        if self.take("var"):
            return Var(tok.text)
        if self.take("top"):
            return TOP
        if self.take("bot"):
            return BOT
        if self.take("lpar"):
            f = self.imp()
            self.expect("rpar", "')'")
            return f
        found = tok.text or "end of input"
        raise ParseError(f"expected a formula, found {found!r}", tok.pos)


def parse(text: str) -> Formula:
    """Parse *text* in the ASCII (or Unicode) concrete syntax."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printer
# ---------------------------------------------------------------------------

_ASCII = {"neg": "~", "box": "[]", "dia": "<>", "and": " & ", "or": " | ", "imp": " -> ", "rhd": " |> ",
          "top": "top", "bot": "bot"}
_UNICODE = {"neg": "¬", "box": "□", "dia": "◇", "and": " ∧ ", "or": " ∨ ", "imp": " → ", "rhd": " ▷ ",
            "top": "⊤", "bot": "⊥"}

# binding levels: imp 1, rhd 2, or 3, and 4, unary 5
_LEVEL = {Imp: 1, Rhd: 2, Or: 3, And: 4}


def _level(f: Formula) -> int:
    return _LEVEL.get(type(f), 5)


def render(f: Formula, unicode: bool = False) -> str:
    """Render *f* with the fewest parentheses that parse back to *f*."""
    sym = _UNICODE if unicode else _ASCII

    def go(g: Formula, need: int) -> str:
        text = body(g)
        return f"({text})" if _level(g) < need else text

    def body(g: Formula) -> str:
        match g:
            case Var(name):
                return name
            case Top():
                return sym["top"]
            case Bot():
                return sym["bot"]
            case Neg(Box(Neg(a))):
                return sym["dia"] + go(a, 5)
            case Neg(a):
                return sym["neg"] + go(a, 5)
            case Box(a):
                return sym["box"] + go(a, 5)
            case And(a, b):
                return go(a, 4) + sym["and"] + go(b, 5)
            case Or(a, b):
                return go(a, 3) + sym["or"] + go(b, 4)
            case Rhd(a, b):
                return go(a, 3) + sym["rhd"] + go(b, 3)
            case Imp(a, b):
                return go(a, 2) + sym["imp"] + go(b, 1)
        raise TypeError(f"not a formula: {g!r}")

    return body(f)


# ---------------------------------------------------------------------------
# Subformulas, simneg, adequate sets
# ---------------------------------------------------------------------------

def _walk(f: Formula) -> Iterator[Formula]:
    yield f
    for c in f.children():
        yield from _walk(c)


def subformulas(f: Formula) -> set[Formula]:
    return set(_walk(f))


def simneg(f: Formula) -> Formula:
    """``~A``: strips a top-level negation instead of stacking a new one."""
    if isinstance(f, Neg):
        return f.sub
    return Neg(f)


def rhd_operands(phi: Iterable[Formula]) -> set[Formula]:
    out: set[Formula] = set()
    for f in phi:
        if isinstance(f, Rhd):
            out.add(f.left)
            out.add(f.right)
    return out


def _sorted(fs: Iterable[Formula]) -> list[Formula]:
    return sorted(set(fs), key=order_key)


def _subsets(items: list[Formula]) -> Iterator[tuple[Formula, ...]]:
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


def condition5_formulas(phi_rhd: list[Formula]) -> Iterator[Formula]:
    """All ``[](B -> C1 | ... | <>D1 | ...)`` over subsets of ``phi_rhd`` in canonical form."""
    ordered = _sorted(phi_rhd)
    subsets = list(_subsets(ordered))
    for b in ordered:
        for cs in subsets:
            for ds in subsets:
                yield Box(Imp(b, big_or(_sorted([*cs, *(dia(d) for d in ds)]))))


def _close_sub_simneg(fs: Iterable[Formula]) -> set[Formula]:
    out: set[Formula] = set()
    todo = list(fs)
    while todo:
        f = todo.pop()
        if f in out:
            continue
        out.add(f)
        todo.extend(f.children())
        todo.append(simneg(f))
    return out


@dataclass(frozen=True)
class AdequateContext:
    """A finite adequate set with its ``|>``-operands, both in the fixed total order."""

    phi: tuple[Formula, ...]
    phi_rhd: tuple[Formula, ...]
    index: dict[Formula, int] = field(compare=False, repr=False)

    @classmethod
    def of(cls, phi: Iterable[Formula]) -> AdequateContext:
        ordered = tuple(_sorted(phi))
        return cls(ordered, tuple(_sorted(rhd_operands(ordered))), {f: i for i, f in enumerate(ordered)})

    def __len__(self) -> int:
        return len(self.phi)

    def __contains__(self, f: object) -> bool:
        return f in self.index

    def bit(self, f: Formula) -> int:
        return 1 << self.index[f]

    def __hash__(self) -> int:
        return hash(self.phi)


def adequate_closure(seed: Iterable[Formula]) -> AdequateContext:
    """Smallest adequate set containing *seed* (under the canonical form of condition 5).

    Closing under subformulas and ``~`` and adding ``bot |> bot`` fixes the ``|>``-operands;
    conditions 3 to 5 then only add formulas over those operands, whose subformulas bring
    no new ``|>``-formulas, so one more subformula/``~`` pass reaches the fixpoint.
    """
    base = _close_sub_simneg([*seed, Rhd(BOT, BOT)])
    operands = _sorted(rhd_operands(base))
    extra: list[Formula] = []
    for b in operands:
        for c in operands:
            extra.append(Rhd(b, c))
        extra.append(Box(simneg(b)))
    extra.extend(condition5_formulas(operands))
    return AdequateContext.of(_close_sub_simneg([*base, *extra]))


def check_adequate(phi: Iterable[Formula]) -> list[str]:
    """Independently audit the five closure conditions; returns the violations found."""
    members = set(phi)
    problems: list[str] = []
    operands = rhd_operands(members)
    for f in members:
        for c in f.children():
            if c not in members:
                problems.append(f"subformula {render(c)} of {render(f)} missing")
        if simneg(f) not in members:
            problems.append(f"~{render(f)} missing")
    if BOT not in operands:
        problems.append("bot is not a |>-operand")
    for b in operands:
        for c in operands:
            if Rhd(b, c) not in members:
                problems.append(f"{render(Rhd(b, c))} missing")
        if Box(simneg(b)) not in members:
            problems.append(f"{render(Box(simneg(b)))} missing")
    ops = sorted(operands, key=order_key)
    for b in ops:
        for cmask, dmask in itertools.product(range(1 << len(ops)), repeat=2):
            disjuncts = {c for i, c in enumerate(ops) if cmask >> i & 1}
            disjuncts |= {Neg(Box(Neg(d))) for i, d in enumerate(ops) if dmask >> i & 1}
            body: Formula = BOT
            for i, g in enumerate(sorted(disjuncts, key=order_key)):
                body = g if i == 0 else Or(body, g)
            f = Box(Imp(b, body))
            if f not in members:
                problems.append(f"{render(f)} missing")
    return problems
