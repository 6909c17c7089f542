"""Tests for re-running the shipped results."""

from __future__ import annotations

import pytest

from ilworkbench.reproduce import TARGETS, Check, reproduce, reproduce_library


def test_targets():
    assert set(TARGETS) == {"icp1", "icp2", "edges", "library"}
    with pytest.raises(KeyError) as exc:
        reproduce("icp3")
    assert "Available targets" in exc.value.args[0]


def test_check_compares_expected_and_actual():
    assert Check("x", True, True).ok
    failed = Check("x", False, True, "why")
    assert not failed.ok
    assert failed.to_dict() == {"check": "x", "expected": False, "actual": True, "ok": False, "detail": "why"}


def test_library_target():
    checks = reproduce_library()
    assert checks
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]


@pytest.mark.slow
@pytest.mark.parametrize("target", ["icp1", "icp2"])
def test_incompleteness_frames(target):
    checks = reproduce(target)
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]
    assert any("countermodel" in c.name for c in checks)


@pytest.mark.slow
def test_every_edge_is_strict():
    checks = reproduce("edges")
    assert len(checks) >= 30
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]
