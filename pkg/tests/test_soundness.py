"""Fuzz tests: axiom instances hold on frames of their logic, and embedding preserves truth."""

from __future__ import annotations

import itertools
import random

import pytest

from ilworkbench.genveltman import GenFrame, GenModel, embed_veltman
from ilworkbench.kernel import Scheme, instantiate
from ilworkbench.logics import FrameClass, list_logics
from ilworkbench.search import enumerate_frames, random_frame
from ilworkbench.semantics import Frame, Model
from ilworkbench.syntax import BOT, Box, Neg, Rhd, random_formula, variables
from ilworkbench.veltman import VeltmanFrame, VeltmanModel

NAMES = ("p", "q", "r")


def _random_model(frame: Frame, rng: random.Random) -> Model:
    val = {v: frozenset(w for w in frame.worlds if rng.random() < 0.5) for v in NAMES}
    if isinstance(frame, GenFrame):
        return GenModel(frame, val)
    assert isinstance(frame, VeltmanFrame)
    return VeltmanModel(frame, val)


def _sample_frames(logic, frame_class: FrameClass, rng: random.Random, n: int, count: int) -> list[Frame]:
    frames = list(itertools.islice(enumerate_frames(logic, n, frame_class, max_generators=1), 200))
    return rng.sample(frames, min(count, len(frames)))


def _assert_instances_hold(logic, frame_class: FrameClass, n: int, seed: int) -> None:
    rng = random.Random(seed)
    schemes = sorted((s for s in logic.schemes if s.pattern is not None), key=lambda s: s.value)
    for frame in _sample_frames(logic, frame_class, rng, n, 6):
        model = _random_model(frame, rng)
        for scheme in schemes:
            for _ in range(3):
                a, b, c = (random_formula(rng, 2, NAMES) for _ in range(3))
                inst = instantiate(scheme, a, b, c)
                assert model.valid(inst), (logic.name, scheme.label, str(inst), frame.to_dict())


@pytest.mark.parametrize("logic", list_logics()[:6], ids=str)
def test_axiom_instances_hold_on_veltman_frames_of_the_logic(logic):
    _assert_instances_hold(logic, FrameClass.VELTMAN, 3, seed=11)


@pytest.mark.slow
@pytest.mark.parametrize("logic", list_logics(), ids=str)
def test_axiom_instances_hold_on_frames_of_the_native_class(logic):
    n = 3 if logic.complete_class is FrameClass.VELTMAN else 2
    _assert_instances_hold(logic, logic.complete_class, n, seed=5)


@pytest.mark.parametrize("kind", [FrameClass.VELTMAN, FrameClass.GENERALIZED])
def test_box_is_interpretability_of_bot(kind):
    """``[]A`` and ``~A |> bot`` have the same truth set on every model."""
    rng = random.Random(3)
    for _ in range(20):
        model = _random_model(random_frame(3, kind, rng), rng)
        for _ in range(5):
            a = random_formula(rng, 3, NAMES)
            assert model.truth_set(Box(a)) == model.truth_set(Rhd(Neg(a), BOT)), str(a)


def test_embedding_agrees_on_random_models():
    rng = random.Random(17)
    for _ in range(20):
        model = _random_model(random_frame(3, FrameClass.VELTMAN, rng), rng)
        assert isinstance(model, VeltmanModel)
        embedded = embed_veltman(model)
        for _ in range(10):
            a = random_formula(rng, 4, NAMES)
            assert embedded.truth_set(a) == model.truth_set(a), str(a)


def test_random_formula_is_seeded_and_respects_options():
    first = [random_formula(random.Random(9), 4) for _ in range(3)]
    again = [random_formula(random.Random(9), 4) for _ in range(3)]
    assert first == again
    rng = random.Random(1)
    for _ in range(50):
        a = random_formula(rng, 3, ("s",), rhd=False)
        assert "|>" not in str(a)
        assert set(variables(a)) <= {"s"}
