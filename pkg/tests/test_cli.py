"""Tests for CLI commands via click.testing.CliRunner."""

from __future__ import annotations

import importlib.metadata
import json

import pytest
from click.testing import CliRunner

from ilworkbench.cli import cli

J1_PROOF = """\
1. p -> p ; AX G1
2. [](p -> p) ; NEC 1
3. [](p -> p) -> p |> p ; AX J1 A=p B=p
4. p |> p ; MP 2 3
"""

CHAIN = {
    "worlds": ["x", "y", "z"],
    "R": [["x", "y"], ["x", "z"], ["y", "z"]],
    "S": {"x": [["y", "z"], ["y", "y"], ["z", "z"]]},
    "val": {"p": ["y"], "q": ["z"]},
}


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _json(result) -> object:
    return json.loads(result.output)


def test_version(runner):
    """Version output must match the package version from the project."""
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert importlib.metadata.version("ilworkbench") in result.output


def test_help(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    for command in ("parse", "check-proof", "eval", "refute", "decide", "correspond", "reproduce"):
        assert command in result.output


# ---------------------------------------------------------------------------
# parse
# ---------------------------------------------------------------------------

def test_parse_json(runner):
    result = runner.invoke(cli, ["parse", "-f", "p |> q", "--format", "json"])
    assert result.exit_code == 0
    data = _json(result)
    assert data["formula"] == "p |> q"
    assert data["unicode"] == "p ▷ q"
    assert data["variables"] == ["p", "q"]


def test_parse_closure(runner):
    result = runner.invoke(cli, ["--format", "json", "parse", "-f", "p |> q", "--closure"])
    assert result.exit_code == 0
    closure = _json(result)["closure"]
    assert closure["adequate"]
    assert "bot" in closure["rhd_operands"]


def test_parse_error_is_usage_error(runner):
    result = runner.invoke(cli, ["parse", "-f", "p |> q |> r"])
    assert result.exit_code == 64
    assert "cannot parse" in result.output


# ---------------------------------------------------------------------------
# check-proof / library-verify
# ---------------------------------------------------------------------------

def test_check_proof_accepts(runner, tmp_path):
    proof = tmp_path / "j1.proof"
    proof.write_text(J1_PROOF)
    result = runner.invoke(cli, ["check-proof", "-l", "IL-(J1)", "-p", str(proof), "--format", "json"])
    assert result.exit_code == 0
    data = _json(result)
    assert data["accepted"]
    assert data["conclusion"] == "p |> p"


def test_check_proof_rejects_in_weaker_logic(runner, tmp_path):
    proof = tmp_path / "j1.proof"
    proof.write_text(J1_PROOF)
    result = runner.invoke(cli, ["check-proof", "-l", "IL-", "-p", str(proof), "--format", "json"])
    assert result.exit_code == 1
    data = _json(result)
    assert not data["accepted"]
    assert data["line"] == 3


def test_check_proof_conclusion_must_match(runner, tmp_path):
    proof = tmp_path / "j1.proof"
    proof.write_text(J1_PROOF)
    result = runner.invoke(cli, ["check-proof", "-l", "IL-(J1)", "-p", str(proof), "--conclusion", "q |> q"])
    assert result.exit_code == 1


def test_check_proof_file_errors(runner, tmp_path):
    result = runner.invoke(cli, ["check-proof", "-l", "IL-", "-p", str(tmp_path / "missing.proof")])
    assert result.exit_code == 66
    bad = tmp_path / "bad.proof"
    bad.write_text("1. p ; WHATEVER\n")
    result = runner.invoke(cli, ["check-proof", "-l", "IL-", "-p", str(bad)])
    assert result.exit_code == 66


def test_library_verify(runner, tmp_path):
    result = runner.invoke(cli, ["library-verify", "--format", "json"])
    assert result.exit_code == 0
    assert all(row["accepted"] for row in _json(result))

    result = runner.invoke(cli, ["library-verify", "-e", "j2-to-j4", "--dump", str(tmp_path / "proofs")])
    assert result.exit_code == 0
    dumped = (tmp_path / "proofs" / "j2-to-j4.proof").read_text()
    assert dumped.startswith("# j2-to-j4")


def test_library_verify_unknown_entry(runner):
    result = runner.invoke(cli, ["library-verify", "-e", "nope"])
    assert result.exit_code == 64


# ---------------------------------------------------------------------------
# eval / valid / frame-check
# ---------------------------------------------------------------------------

def test_eval(runner, write_json):
    path = write_json("chain.json", CHAIN)
    result = runner.invoke(cli, ["eval", "-m", path, "-f", "p |> q", "--format", "json"])
    assert result.exit_code == 0
    assert "x" in _json(result)["truth_set"]


def test_eval_unknown_world(runner, write_json):
    path = write_json("chain.json", CHAIN)
    result = runner.invoke(cli, ["eval", "-m", path, "-f", "p", "-w", "nowhere"])
    assert result.exit_code == 64


def test_missing_model_file(runner, tmp_path):
    result = runner.invoke(cli, ["eval", "-m", str(tmp_path / "none.json"), "-f", "p"])
    assert result.exit_code == 66


def test_valid_on_frame(runner, write_json):
    path = write_json("chain.json", CHAIN)
    result = runner.invoke(cli, ["valid", "-m", path, "-f", "[]([]p -> p) -> []p", "--frame", "--format", "json"])
    assert result.exit_code == 0
    assert _json(result)["valid"]
    result = runner.invoke(cli, ["valid", "-m", path, "-f", "p |> p", "--frame", "--format", "json"])
    data = _json(result)
    assert not data["valid"]
    assert "val" in data["refutation"]


def test_frame_check(runner, write_json):
    path = write_json("chain.json", CHAIN)
    result = runner.invoke(cli, ["frame-check", "--frame", path, "-l", "IL-(J1)", "--format", "json"])
    assert result.exit_code == 1
    checks = _json(result)["checks"]
    assert checks[0]["ok"]
    assert checks[1]["clause"].startswith("V_J1")
    result = runner.invoke(cli, ["frame-check", "--frame", path, "-l", "IL-(J4+,J5)"])
    assert result.exit_code == 0


def test_unknown_logic_is_usage_error(runner, write_json):
    path = write_json("chain.json", CHAIN)
    result = runner.invoke(cli, ["frame-check", "--frame", path, "-l", "IL-(J9)"])
    assert result.exit_code == 64
    assert "Available logics" in result.output


# ---------------------------------------------------------------------------
# refute / decide / canonical
# ---------------------------------------------------------------------------

def test_refute(runner):
    result = runner.invoke(cli, ["refute", "-l", "IL-", "-f", "p |> p", "-n", "2", "--format", "json"])
    assert result.exit_code == 0
    data = _json(result)
    assert data["found"]
    assert data["countermodel"]["worlds"] == 2


def test_decide_exit_codes(runner):
    lob = runner.invoke(cli, ["decide", "-l", "IL-", "-f", "[]([]p -> p) -> []p", "--format", "json"])
    assert lob.exit_code == 0
    assert _json(lob)["status"] == "theorem"

    refl = runner.invoke(cli, ["decide", "-l", "IL", "-f", "[]p -> p", "--mode", "exact", "--format", "json"])
    assert refl.exit_code == 10
    assert "countermodel" in _json(refl)

    guess = runner.invoke(cli, ["decide", "-l", "IL-", "-f", "[]([]p -> p) -> []p", "--mode", "practical:2"])
    assert guess.exit_code == 20


def test_decide_bad_mode(runner):
    result = runner.invoke(cli, ["decide", "-l", "IL-", "-f", "p", "--mode", "fast"])
    assert result.exit_code == 64


def test_decide_budget_from_config(runner, tmp_path):
    cfg = tmp_path / "tiny.toml"
    cfg.write_text("[ilworkbench.exact]\nmax_phi = 3\n")
    result = runner.invoke(cli, ["--config", str(cfg), "decide", "-l", "IL-", "-f", "[]p -> p"])
    assert result.exit_code == 1
    assert "formulas" in result.output


def test_canonical(runner):
    result = runner.invoke(cli, ["canonical", "-l", "IL-(J4)", "-f", "[]p -> p", "--format", "json"])
    assert result.exit_code == 0
    data = _json(result)
    assert data["construction"] == "gct1"
    assert data["truth_lemma"]["ok"]
    assert data["refuted_at_root"]


def test_canonical_of_theorem_fails(runner):
    result = runner.invoke(cli, ["canonical", "-l", "IL-", "-f", "[]([]p -> p) -> []p"])
    assert result.exit_code == 1
    assert "proves" in result.output


# ---------------------------------------------------------------------------
# logics / correspond / reproduce
# ---------------------------------------------------------------------------

def test_logics(runner):
    result = runner.invoke(cli, ["logics", "--format", "json"])
    assert result.exit_code == 0
    names = [row["name"] for row in _json(result)]
    assert len(names) == 20
    assert "IL-(J2,J4+,J5)" in names


def test_logics_edges(runner):
    result = runner.invoke(cli, ["logics", "--edges", "--format", "yaml"])
    assert result.exit_code == 0
    assert "smaller: IL-" in result.output


def test_correspond_shipped_frame(runner, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    result = runner.invoke(cli, ["correspond", "--class", "gen", "--frame", "icp2.json", "--format", "json"])
    assert result.exit_code == 0
    reports = {r["condition"]: r for r in _json(result)["reports"]}
    assert not reports["G_J4plus"]["holds"]
    assert reports["G_J1"]["holds"]
    assert all(r["agree"] for r in reports.values())


def test_correspond_random(runner):
    result = runner.invoke(cli, ["--seed", "3", "correspond", "--random", "5", "--worlds", "3", "--format", "json"])
    assert result.exit_code == 0
    data = _json(result)
    assert data["seed"] == 3
    assert data["disagreements"] == []


def test_correspond_needs_one_source(runner):
    result = runner.invoke(cli, ["correspond"])
    assert result.exit_code == 64


def test_reproduce_library(runner):
    result = runner.invoke(cli, ["reproduce", "library", "--format", "json"])
    assert result.exit_code == 0
    assert _json(result)["ok"]


def test_missing_config_file(runner, tmp_path):
    result = runner.invoke(cli, ["--config", str(tmp_path / "nope.toml"), "logics"])
    assert result.exit_code == 66
