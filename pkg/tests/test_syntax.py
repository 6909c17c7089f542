"""Tests for formula parsing, printing and adequate sets."""

from __future__ import annotations

import random

import pytest

from ilworkbench.syntax import (
    BOT,
    And,
    Box,
    Imp,
    Neg,
    Or,
    ParseError,
    Rhd,
    Var,
    adequate_closure,
    check_adequate,
    condition5_formulas,
    dia,
    order_key,
    parse,
    random_formula,
    render,
    rhd_operands,
    simneg,
    size,
    subformulas,
    variables,
)

p, q, r = Var("p"), Var("q"), Var("r")


def test_parse_precedence():
    """-> is weakest, then |>, then |, then &."""
    assert parse("p & q | r") == Or(And(p, q), r)
    assert parse("p | q |> r") == Rhd(Or(p, q), r)
    assert parse("p |> q -> r") == Imp(Rhd(p, q), r)
    assert parse("p -> q -> r") == Imp(p, Imp(q, r))


def test_parse_unary_and_constants():
    assert parse("~[]p") == Neg(Box(p))
    assert parse("<>p") == dia(p) == Neg(Box(Neg(p)))
    assert parse("#f |> #t") == parse("bot |> top")
    assert parse("□p → ◇q") == Imp(Box(p), dia(q))


def test_rhd_is_non_associative():
    with pytest.raises(ParseError) as exc:
        parse("p |> q |> r")
    assert "non-associative" in str(exc.value)


@pytest.mark.parametrize("text", ["p &", "(p", "p q", "P", "p $ q", ""])
def test_parse_errors_report_position(text):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.position >= 0


def test_render_round_trips_through_parse():
    for text in ["(p |> q) & (q |> r) -> p |> r", "p |> q | r", "[](p -> q) -> (r |> p -> r |> q)",
                 "<>p |> p", "~(p & q)", "(p -> q) -> r", "(p |> q) |> r"]:
        g = parse(text)
        assert parse(render(g)) == g
        assert parse(render(g, unicode=True)) == g


def test_random_formulas_round_trip():
    rng = random.Random(2)
    for _ in range(200):
        g = random_formula(rng, 5, ("p", "q", "r"))
        assert parse(render(g)) == g, render(g)
        assert parse(render(g, unicode=True)) == g


def test_render_uses_fewest_parentheses():
    assert render(parse("((p |> q))")) == "p |> q"
    assert render(parse("(p & q) -> r")) == "p & q -> r"
    assert render(parse("~[]~p")) == "<>p"
    assert render(parse("p |> #f"), unicode=True) == "p ▷ ⊥"


def test_size_variables_subformulas():
    g = parse("[]p -> p |> q")
    assert size(g) == 6
    assert variables(g) == ["p", "q"]
    assert subformulas(g) == {g, Box(p), p, Rhd(p, q), q}


def test_simneg_strips_one_negation():
    assert simneg(p) == Neg(p)
    assert simneg(Neg(p)) == p
    assert simneg(Neg(Neg(p))) == Neg(p)


def test_order_key_is_size_first():
    items = [parse("p |> q"), p, parse("[]p")]
    assert sorted(items, key=order_key) == [p, parse("[]p"), parse("p |> q")]


def test_equal_formulas_share_a_hash():
    assert len({parse("p |> q"), Rhd(p, q)}) == 1


def test_adequate_closure_passes_audit():
    for text in ["[]p -> p", "p |> q", "<>p |> p"]:
        ctx = adequate_closure([parse(text)])
        assert check_adequate(ctx.phi) == []
        assert BOT in ctx.phi_rhd
        assert parse(text) in ctx


def test_adequate_closure_without_rhd_has_only_bot_operand():
    ctx = adequate_closure([parse("[]p -> p")])
    assert ctx.phi_rhd == (BOT,)
    assert Rhd(BOT, BOT) in ctx


def test_adequate_closure_operands_and_order():
    ctx = adequate_closure([parse("p |> q")])
    assert set(ctx.phi_rhd) == {p, q, BOT}
    assert rhd_operands(ctx.phi) == {p, q, BOT}
    assert list(ctx.phi) == sorted(ctx.phi, key=order_key)
    assert all(ctx.phi[ctx.index[g]] == g for g in ctx.phi)


def test_check_adequate_names_missing_members():
    problems = check_adequate([parse("p |> q")])
    assert any("missing" in msg for msg in problems)
    assert any("bot" in msg for msg in problems)


def _disjuncts(f):
    if isinstance(f, Or):
        return [*_disjuncts(f.left), f.right]
    return [f]


def test_condition5_disjuncts_follow_the_total_order():
    big = parse("(q & r) -> (q | r)")
    for f in condition5_formulas([big, p]):
        assert isinstance(f, Box) and isinstance(f.sub, Imp)
        parts = _disjuncts(f.sub.right)
        assert parts == sorted(parts, key=order_key), render(f)
    assert Box(Imp(p, Or(dia(p), big))) in set(condition5_formulas([big, p]))


def test_check_adequate_rejects_condition5_out_of_order():
    big = parse("(q & r) -> (q | r)")
    ctx = adequate_closure([Rhd(big, p)])
    assert check_adequate(ctx.phi) == []
    wrong = Box(Imp(p, Or(big, dia(p))))
    right = Box(Imp(p, Or(dia(p), big)))
    assert wrong not in ctx and right in ctx
    tampered = (set(ctx.phi) - {right}) | {wrong}
    assert any(render(right) in msg for msg in check_adequate(tampered))
