"""Tests for the library of checked derivations."""

from __future__ import annotations

import pytest

from ilworkbench.kernel import check_proof, format_proof, parse_proof
from ilworkbench.library import get_entry, theorem_library, verify_library
from ilworkbench.logics import get_logic
from ilworkbench.syntax import parse


def test_every_entry_is_accepted():
    results = verify_library()
    assert len(results) == len(theorem_library())
    failed = [(e.name, v.line, v.reason) for e, v in results if not v]
    assert failed == []


def test_entry_names_are_unique_slugs():
    names = [e.name for e in theorem_library()]
    assert len(names) == len(set(names))
    assert all(n == n.lower() and " " not in n for n in names)


def test_get_entry_unknown_lists_names():
    with pytest.raises(KeyError) as exc:
        get_entry("no-such-entry")
    assert "boxneg-rhd" in exc.value.args[0]


def test_boxneg_rhd_conclusion():
    entry = get_entry("boxneg-rhd")
    assert entry.conclusion == parse("[]~p -> p |> q")
    assert entry.logic.name == "IL-"


def test_derived_schemes_are_rejected_without_their_source():
    """A derivation of J4 from J2 must not check in a logic lacking J2."""
    entry = get_entry("j2-to-j4")
    assert not check_proof(get_logic("IL-"), entry.proof)


def test_cl_entries_use_only_mp_and_nec():
    for name in ("cl-j6", "cl-j4plus", "cl-left-mono"):
        entry = get_entry(name)
        assert [r.value for r in sorted(entry.logic.rules)] == ["MP", "NEC"]
        assert check_proof(entry.logic, entry.proof)


def test_entries_survive_the_proof_file_format():
    for entry in theorem_library():
        assert parse_proof(format_proof(entry.proof)) == entry.proof
