"""Tests for axiom schemes, the proof checker and the proof file format."""

from __future__ import annotations

import pytest

from ilworkbench.kernel import (
    MAX_TAUTOLOGY_ATOMS,
    MP,
    Axiom,
    BudgetExceeded,
    Nec,
    Proof,
    ProofBuilder,
    ProofFormatError,
    ProofLine,
    Rule,
    Scheme,
    check_proof,
    congruence_proof,
    entails,
    format_proof,
    instantiate,
    is_instance,
    is_tautology,
    parse_proof,
)
from ilworkbench.logics import get_logic, strict_logic
from ilworkbench.syntax import Imp, Neg, Var, big_and, big_or, iff, parse

p, q = Var("p"), Var("q")

J1_PROOF = """\
# p |> p from J1
1. p -> p ; AX G1
2. [](p -> p) ; NEC 1
3. [](p -> p) -> p |> p ; AX J1 A=p B=p
4. p |> p ; MP 2 3
"""


def test_scheme_lookup_accepts_plus_and_primes():
    assert Scheme.lookup("J4+") is Scheme.J4plus
    assert Scheme.lookup("J2plus") is Scheme.J2plus
    assert Scheme.lookup("J4+''") is Scheme.J4pluspp
    assert Scheme.J4plusp.label == "J4+'"
    with pytest.raises(KeyError) as exc:
        Scheme.lookup("J7")
    assert "Available schemes" in exc.value.args[0]


def test_instantiate_and_match():
    inst = instantiate(Scheme.J2, p, q, p)
    assert inst == parse("(p |> q) & (q |> p) -> p |> p")
    assert is_instance(inst, Scheme.J2) == {"A": p, "B": q, "C": p}
    assert is_instance(parse("p |> q -> p |> p"), Scheme.J2) is None
    with pytest.raises(ValueError):
        instantiate(Scheme.G1)


def test_is_instance_requires_consistent_metavariables():
    assert is_instance(parse("<>p |> p"), Scheme.J5) == {"A": p}
    assert is_instance(parse("<>p |> q"), Scheme.J5) is None


def test_tautologies_treat_modal_formulas_as_atoms():
    assert is_tautology(parse("[]p | ~[]p"))
    assert is_tautology(parse("(p |> q) & r -> r"))
    assert not is_tautology(parse("[]p -> p"))
    assert entails([parse("p"), parse("p -> [](q)")], parse("[]q"))


def test_wide_tautologies_are_checked_in_blocks():
    atoms = [Var(f"p{i}") for i in range(20)]
    assert is_tautology(Imp(big_and(atoms), atoms[-1]))
    assert not is_tautology(Imp(big_and(atoms), Neg(atoms[-1])))


def test_tautology_check_has_an_atom_limit():
    atoms = [Var(f"p{i}") for i in range(MAX_TAUTOLOGY_ATOMS + 1)]
    wide = big_or([Neg(atoms[0]), *atoms])
    with pytest.raises(BudgetExceeded) as exc:
        is_tautology(wide)
    assert exc.value.limit == MAX_TAUTOLOGY_ATOMS
    verdict = check_proof(get_logic("IL-"), Proof((ProofLine(wide, Axiom(Scheme.G1)),)))
    assert not verdict
    assert verdict.line == 1
    assert "propositional atoms" in verdict.reason


def test_check_proof_accepts_j1_derivation():
    proof = parse_proof(J1_PROOF)
    assert len(proof) == 4
    assert proof.conclusion == parse("p |> p")
    verdict = check_proof(get_logic("IL-(J1)"), proof)
    assert verdict.accepted
    assert verdict


def test_check_proof_reports_first_bad_line():
    verdict = check_proof(get_logic("IL-"), parse_proof(J1_PROOF))
    assert not verdict
    assert verdict.line == 3
    assert "not an axiom of IL-" in verdict.reason


def test_check_proof_rejects_bad_citations():
    lines = (
        ProofLine(parse("p -> p"), Axiom(Scheme.G1)),
        ProofLine(parse("p"), MP(1, 1)),
    )
    verdict = check_proof(get_logic("IL-"), Proof(lines))
    assert verdict.line == 2
    forward = Proof((ProofLine(parse("[]p"), Nec(2)), ProofLine(parse("p"), Axiom(Scheme.G1))))
    assert check_proof(get_logic("IL-"), forward).line == 1


def test_check_proof_rejects_non_tautology_and_wrong_substitution():
    bad_taut = Proof((ProofLine(parse("p -> q"), Axiom(Scheme.G1)),))
    assert "tautology" in check_proof(get_logic("IL-"), bad_taut).reason
    wrong = Proof((ProofLine(parse("<>p |> p"), Axiom(Scheme.J5, (("A", q),))),))
    assert "does not match" in check_proof(get_logic("IL-(J5)"), wrong).reason


def test_rules_can_be_withheld():
    no_nec = strict_logic(Scheme.J1, rules=frozenset({Rule.MP}))
    verdict = check_proof(no_nec, parse_proof(J1_PROOF))
    assert verdict.line == 2
    assert "NEC is not a rule" in verdict.reason


def test_builder_and_format_round_trip():
    pb = ProofBuilder()
    one = pb.taut(parse("p -> p"))
    two = pb.nec(one)
    three = pb.ax(Scheme.J1, p, p)
    pb.mp(two, three)
    proof = pb.build()
    assert format_proof(proof) == "".join(line for line in J1_PROOF.splitlines(keepends=True) if not line.startswith("#"))
    assert parse_proof(format_proof(proof)) == proof


def test_r1_r2_lines():
    pb = ProofBuilder()
    imp = pb.taut(parse("p & q -> p"))
    r1 = pb.r1(imp, q)
    r2 = pb.r2(imp, q)
    assert pb[r1] == parse("q |> p & q -> q |> p")
    assert pb[r2] == parse("p |> q -> p & q |> q")
    proof = pb.build()
    assert check_proof(get_logic("IL-"), proof)
    assert parse_proof(format_proof(proof)) == proof


def test_congruence_proof_is_checked():
    pb = ProofBuilder()
    pb.taut(iff(parse("p & q"), parse("q & p")))
    left = pb.build()
    pb2 = ProofBuilder()
    pb2.taut(iff(p, parse("~~p")))
    right = pb2.build()
    proof = congruence_proof(left, right, get_logic("IL-"))
    assert proof.conclusion == iff(parse("p & q |> p"), parse("q & p |> ~~p"))
    assert check_proof(get_logic("IL-"), proof)


@pytest.mark.parametrize(
    "text, line",
    [
        ("1. p -> p ; AX G1\n3. p ; MP 1 1\n", 2),
        ("1 p -> p ; AX G1\n", 1),
        ("# comment\n\n1. p -> ; AX G1\n", 3),
        ("1. p -> p ; BOGUS 1\n", 1),
        ("1. p |> p ; AX J9\n", 1),
        ("1. p |> p ; R1 1\n", 1),
    ],
)
def test_parse_proof_errors_carry_line_numbers(text, line):
    with pytest.raises(ProofFormatError) as exc:
        parse_proof(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")
