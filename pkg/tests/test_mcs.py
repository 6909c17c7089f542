"""Tests for maximal consistent sets over an adequate context."""

from __future__ import annotations

import pytest

from ilworkbench.logics import get_logic
from ilworkbench.mcs import (
    ContextMismatch,
    LemmaHypothesisError,
    MCSet,
    candidate_types,
    enumerate_KL,
    layout,
    lemma_pl3,
    lemma_pl5,
    prec,
    prec_C,
    prec_C_star,
    ranks,
)
from ilworkbench.semantics import BudgetExceeded
from ilworkbench.syntax import BOT, Rhd, Var, adequate_closure, parse, simneg

REFLECTION = parse("[]p -> p")
LOB = parse("[]([]p -> p) -> []p")


@pytest.fixture
def reflection_kl() -> list[MCSet]:
    return enumerate_KL(get_logic("IL-"), adequate_closure([REFLECTION]))


def test_sets_are_maximal(reflection_kl):
    assert reflection_kl
    for gamma in reflection_kl:
        for g in gamma.ctx.phi:
            assert (g in gamma) != (simneg(g) in gamma), g


def test_non_theorem_negation_is_consistent(reflection_kl):
    assert any(simneg(REFLECTION) in gamma for gamma in reflection_kl)


def test_theorem_negation_is_inconsistent():
    kl = enumerate_KL(get_logic("IL-"), adequate_closure([LOB]))
    assert kl
    assert not any(simneg(LOB) in gamma for gamma in kl)


def test_rhd_bot_bot_is_everywhere(reflection_kl):
    assert all(Rhd(BOT, BOT) in gamma for gamma in reflection_kl)


def test_prec_is_a_strict_order_and_ranks_follow_it(reflection_kl):
    r = ranks(reflection_kl)
    for a in reflection_kl:
        assert not prec(a, a)
        for b in reflection_kl:
            if prec(a, b):
                assert r[a.members] > r[b.members]
                for c in reflection_kl:
                    if prec(b, c):
                        assert prec(a, c)


def test_prec_c_refines_prec(reflection_kl):
    for a in reflection_kl:
        for b in reflection_kl:
            if prec_C(a, b, BOT):
                assert prec(a, b)


@pytest.fixture(scope="module")
def variable_kl() -> list[MCSet]:
    return enumerate_KL(get_logic("IL-"), adequate_closure([Var("p")]))


def test_successor_is_bot_critical(variable_kl):
    for gamma in variable_kl:
        for delta in variable_kl:
            if prec(gamma, delta):
                assert prec_C_star(gamma, delta, BOT), (gamma.render(), delta.render())


def test_critical_successor_survives_a_further_step(variable_kl):
    operands = variable_kl[0].ctx.phi_rhd
    for gamma in variable_kl:
        for delta in variable_kl:
            for c in operands:
                if not prec_C_star(gamma, delta, c):
                    continue
                for theta in variable_kl:
                    if prec(delta, theta):
                        assert prec_C_star(gamma, theta, c), (gamma.render(), delta.render(), theta.render())


def test_candidate_ceiling():
    ctx = adequate_closure([REFLECTION])
    assert len(candidate_types(get_logic("IL-"), ctx)) >= 1
    with pytest.raises(BudgetExceeded):
        candidate_types(get_logic("IL-"), ctx, ceiling=1)


def test_sets_from_different_contexts_do_not_mix(reflection_kl):
    other = enumerate_KL(get_logic("IL-"), adequate_closure([LOB]))
    with pytest.raises(ContextMismatch):
        prec(reflection_kl[0], other[0])
    with pytest.raises(ContextMismatch):
        layout(reflection_kl[0].ctx).operand(parse("p"))


def test_lemma_hypotheses_are_checked(reflection_kl):
    gamma = reflection_kl[0]
    with pytest.raises(LemmaHypothesisError):
        lemma_pl3(get_logic("IL-"), gamma, BOT, BOT, kl=reflection_kl)
    with pytest.raises(LemmaHypothesisError):
        lemma_pl5(get_logic("IL-"), gamma, gamma, BOT, BOT, kl=reflection_kl)


def test_render_lists_members(reflection_kl):
    text = reflection_kl[0].render()
    assert text.startswith("{") and text.endswith("}")
    assert "bot |> bot" in text


@pytest.mark.slow
def test_lemma_pl3_finds_a_critical_successor():
    logic = get_logic("IL-")
    a = parse("p |> #f")
    kl = enumerate_KL(logic, adequate_closure([a]))
    gamma = next(g for g in kl if simneg(a) in g)
    delta = lemma_pl3(logic, gamma, parse("p"), BOT, kl=kl)
    assert parse("p") in delta
    assert prec_C(gamma, delta, BOT)


@pytest.mark.slow
def test_lemma_pl5_stays_above_gamma():
    logic = get_logic("IL-(J4)")
    a = parse("p |> #f")
    kl = enumerate_KL(logic, adequate_closure([a]))
    p = parse("p")
    for gamma in kl:
        if Rhd(p, p) not in gamma:
            continue
        for delta in kl:
            if prec(gamma, delta) and p in delta:
                theta = lemma_pl5(logic, gamma, delta, p, p, kl=kl)
                assert prec(gamma, theta) and p in theta
                return
    pytest.skip("no set with the lemma's premises")
