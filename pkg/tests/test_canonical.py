"""Tests for the canonical countermodel constructions."""

from __future__ import annotations

import pytest

from ilworkbench.canonical import (
    ProvedError,
    UnsupportedLogic,
    canonical_ct1,
    canonical_model,
    construction_for,
    fmp_bound,
)
from ilworkbench.genveltman import GenFrame
from ilworkbench.kernel import Scheme
from ilworkbench.logics import get_logic, list_logics, strict_logic
from ilworkbench.mcs import enumerate_KL
from ilworkbench.semantics import BudgetExceeded
from ilworkbench.syntax import Box, Var, adequate_closure, parse, simneg
from ilworkbench.veltman import VeltmanFrame

P = Var("p")
REFLECTION = parse("[]p -> p")
LOB = parse("[]([]p -> p) -> []p")


@pytest.mark.parametrize(
    "name, kind",
    [
        ("IL-", "ct1"),
        ("IL-(J1,J4+)", "ct1"),
        ("CL", "ct1"),
        ("IL-(J2+,J5)", "ct2"),
        ("IL", "ct2"),
        ("IL-(J4)", "gct1"),
        ("IL-(J2,J4+)", "gct1"),
        ("IL-(J2,J5)", "gct2"),
        ("IL-(J2,J4+,J5)", "gct2"),
    ],
)
def test_construction_for(name, kind):
    assert construction_for(get_logic(name)) == kind


def test_every_registered_logic_has_a_construction():
    kinds = [construction_for(lg) for lg in list_logics()]
    assert kinds.count("ct1") == 10
    assert kinds.count("ct2") == 2
    assert kinds.count("gct1") == 6
    assert kinds.count("gct2") == 2


def test_unregistered_logics_are_rejected():
    with pytest.raises(UnsupportedLogic):
        construction_for(strict_logic(Scheme.J1))
    with pytest.raises(UnsupportedLogic):
        canonical_ct1(get_logic("IL"), REFLECTION)


@pytest.mark.parametrize("name", ["IL-", "IL", "IL-(J4)", "IL-(J2,J5)"])
def test_canonical_model_refutes_reflection(name):
    logic = get_logic(name)
    canon = canonical_model(logic, REFLECTION)
    assert canon.construction == construction_for(logic)
    assert canon.audit() == []
    assert canon.verify()
    model, root = canon
    assert not model.forces(root, REFLECTION)
    assert simneg(REFLECTION) in canon.worlds[root][0]
    cm = canon.countermodel()
    assert cm.world == root
    assert cm.size <= fmp_bound(logic, canon.ctx)


@pytest.mark.parametrize("name", ["IL-", "IL-(J1)", "IL-(J5)", "IL", "IL-(J4)", "IL-(J2,J5)"])
def test_truth_lemma_holds_over_the_closure_of_a_variable(name):
    logic = get_logic(name)
    canon = canonical_model(logic, P)
    assert canon.ctx == adequate_closure([P])
    assert canon.audit() == []
    assert canon.verify()
    assert not canon.model.forces(canon.root, P)
    assert canon.countermodel().size <= fmp_bound(logic, canon.ctx)


def test_frame_class_follows_construction():
    assert isinstance(canonical_model(get_logic("IL"), REFLECTION).model.frame, VeltmanFrame)
    assert isinstance(canonical_model(get_logic("IL-(J4)"), REFLECTION).model.frame, GenFrame)


def test_theorems_have_no_countermodel():
    with pytest.raises(ProvedError):
        canonical_model(get_logic("IL-"), LOB)


def test_precomputed_kl_is_used():
    logic = get_logic("IL-")
    kl = enumerate_KL(logic, adequate_closure([REFLECTION]))
    canon = canonical_model(logic, REFLECTION, kl=kl)
    assert {gamma for gamma, _ in canon.worlds.values()} <= set(kl)


def test_world_budget():
    with pytest.raises(BudgetExceeded):
        canonical_model(get_logic("IL-"), REFLECTION, max_worlds=1)


def test_fmp_bound():
    ctx = adequate_closure([REFLECTION])
    boxes = sum(isinstance(f, Box) for f in ctx.phi)
    assert fmp_bound(get_logic("IL-"), ctx) == 2 ** len(ctx) * len(ctx.phi_rhd)
    assert fmp_bound(get_logic("IL"), ctx) == 2 ** len(ctx) * (boxes + 1)


@pytest.mark.slow
def test_operand_tags_refute_rhd_reflexivity():
    logic = get_logic("IL-")
    canon = canonical_model(logic, parse("p |> p"))
    assert canon.audit() == []
    assert canon.countermodel().size == len(canon.worlds)


@pytest.mark.slow
def test_j1_proves_rhd_reflexivity():
    with pytest.raises(ProvedError):
        canonical_model(get_logic("IL-(J1)"), parse("p |> p"))


@pytest.mark.slow
def test_bot_interprets_everything():
    with pytest.raises(ProvedError):
        canonical_model(get_logic("IL-"), parse("#f |> p"))
