"""Tests for frame conditions and their characteristic instances."""

from __future__ import annotations

import random

import pytest

from ilworkbench.correspondence import (
    ConditionId,
    characteristic_instance,
    condition_for,
    correspondence_audit,
    gen_condition,
    satisfies,
    veltman_condition,
)
from ilworkbench.frames_io import shipped_model
from ilworkbench.genveltman import embed_frame
from ilworkbench.kernel import Scheme
from ilworkbench.logics import FrameClass, get_logic
from ilworkbench.search import random_frame
from ilworkbench.syntax import parse


def test_characteristic_instances():
    assert characteristic_instance(Scheme.J1) == parse("p |> p")
    assert characteristic_instance(Scheme.J5) == parse("<>p |> p")
    assert ConditionId.G_J4plus.instance == parse("[](q -> r) -> (p |> q -> p |> r)")
    with pytest.raises(KeyError):
        characteristic_instance(Scheme.J3)


def test_condition_for_maps_plus_schemes_on_veltman_frames():
    assert condition_for("J4+", "veltman") is ConditionId.V_J4
    assert condition_for("J2+", "native") is ConditionId.V_J2
    assert condition_for("J2+", "gen") is ConditionId.G_J2plus
    assert condition_for(Scheme.J5, FrameClass.GENERALIZED) is ConditionId.G_J5
    with pytest.raises(KeyError):
        condition_for("J6", "gen")


def test_veltman_conditions_on_chain(chain_frame):
    verdict = veltman_condition(chain_frame, "V_J1")
    assert not verdict
    assert verdict.witness == ("y", "z")
    for c in ("V_J4", "V_J2", "V_J5"):
        assert veltman_condition(chain_frame, c), c


def test_condition_kind_must_match_frame(chain_frame, split_frame):
    with pytest.raises(TypeError):
        gen_condition(chain_frame, "G_J1")
    with pytest.raises(TypeError):
        veltman_condition(split_frame, "V_J1")


def test_satisfies_names_failing_condition(chain_frame):
    assert satisfies(chain_frame, get_logic("IL-(J4+,J5)"))
    verdict = satisfies(chain_frame, get_logic("IL-(J1)"))
    assert verdict.clause.startswith("V_J1:")


def test_icp1_conditions():
    frame = shipped_model("icp1").frame
    for c in ("G_J2", "G_J4plus", "G_J5", "G_J4"):
        assert gen_condition(frame, c), c
    assert not gen_condition(frame, "G_J2plus")
    assert not gen_condition(frame, "G_J1")


def test_icp2_conditions():
    frame = shipped_model("icp2").frame
    for c in ("G_J1", "G_J4", "G_J5"):
        assert gen_condition(frame, c), c
    verdict = gen_condition(frame, "G_J4plus")
    assert not verdict
    assert verdict.witness[:2] == ("x", "y0")


def test_shipped_models_refute_the_added_instance():
    icp1 = shipped_model("icp1")
    assert not icp1.forces("x", characteristic_instance(Scheme.J2plus))
    icp2 = shipped_model("icp2")
    assert not icp2.forces("x", characteristic_instance(Scheme.J4plus))


@pytest.mark.parametrize("name", ["icp1", "icp2"])
def test_audit_agrees_on_shipped_frames(name):
    frame = shipped_model(name).frame
    for c in ("G_J1", "G_J4", "G_J4plus", "G_J2", "G_J2plus", "G_J5"):
        report = correspondence_audit(frame, c)
        assert report.agree, c
        if not report.holds:
            assert report.refutation is not None


def test_audit_report_for_failing_condition(chain_frame):
    report = correspondence_audit(chain_frame, "V_J1")
    assert not report.holds and not report.valid
    assert report.refutation is not None
    assert report.witness == ("y", "z")
    assert report.literal is None


def test_literal_reading_agrees_with_generators(chain_frame, split_frame):
    for frame in (embed_frame(chain_frame), split_frame):
        for c in ConditionId:
            if c.frame_class is FrameClass.GENERALIZED:
                assert gen_condition(frame, c, literal=True).ok == gen_condition(frame, c).ok, c


@pytest.mark.parametrize("kind", [FrameClass.VELTMAN, FrameClass.GENERALIZED])
def test_random_frames_agree(kind):
    """Conditions and instance validity coincide on seeded random frames."""
    rng = random.Random(7)
    conditions = [c for c in ConditionId if c.frame_class is kind]
    for _ in range(25):
        frame = random_frame(3, kind, rng)
        assert frame.check()
        for c in conditions:
            report = correspondence_audit(frame, c, literal=kind is FrameClass.GENERALIZED)
            assert report.agree, (c, frame.to_dict())
