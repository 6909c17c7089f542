"""Tests for the registry of logics and the two lattices."""

from __future__ import annotations

import pytest

from ilworkbench.kernel import Scheme
from ilworkbench.logics import (
    EDGES,
    GEN_EDGES,
    LOGICS,
    FrameClass,
    added_schemes,
    get_logic,
    list_logics,
)


def test_registry_has_twenty_logics():
    assert len(list_logics()) == 20
    assert len(LOGICS) == 20
    veltman = [lg for lg in list_logics() if lg.complete_class is FrameClass.VELTMAN]
    assert len(veltman) == 12


def test_get_logic_tolerates_spacing_and_unicode_minus():
    assert get_logic("IL⁻(J1, J4+)") is get_logic("IL-(J1,J4+)")
    assert get_logic("IL") is LOGICS["IL"]
    with pytest.raises(KeyError) as exc:
        get_logic("IL-(J3)")
    assert "Available logics" in exc.value.args[0]


def test_effective_schemes_close_under_derivations():
    cl = get_logic("CL")
    assert cl.has(Scheme.J2plus, Scheme.J4plus, Scheme.J4)
    assert not cl.has(Scheme.J5)
    assert get_logic("IL-(J2+)").has(Scheme.J2, Scheme.J4plus, Scheme.J4)
    assert not get_logic("IL-(J2)").has(Scheme.J4plus)
    assert get_logic("IL-(J4+)").has(Scheme.J4)


def test_schemes_include_base_and_aliases():
    lg = get_logic("IL-(J4+)")
    assert {Scheme.G1, Scheme.G2, Scheme.G3, Scheme.J3, Scheme.J6} <= lg.schemes
    assert {Scheme.J4plus, Scheme.J4plusp, Scheme.J4pluspp} <= lg.schemes
    assert Scheme.J4 not in lg.schemes


def test_frame_conditions_follow_complete_class():
    assert get_logic("IL-(J2+)").frame_conditions == {"V_J2"}
    assert get_logic("IL-(J2,J4+,J5)").frame_conditions == {"G_J2", "G_J4plus", "G_J5"}
    assert get_logic("IL-(J4)").conditions_for(FrameClass.VELTMAN) == {"V_J4"}


def test_edges_grow_strictly():
    for smaller, larger in (*EDGES, *GEN_EDGES):
        a, b = get_logic(smaller), get_logic(larger)
        assert a.effective < b.effective or a.primary < b.primary, (smaller, larger)
        assert added_schemes(a, b), (smaller, larger)


def test_added_schemes():
    assert added_schemes(get_logic("IL-(J4+)"), get_logic("IL-(J2+)")) == [Scheme.J2plus]
    assert added_schemes(get_logic("CL"), get_logic("IL")) == [Scheme.J5]
    assert added_schemes(get_logic("IL-(J2)"), get_logic("IL-(J2,J4+)")) == [Scheme.J4plus]
