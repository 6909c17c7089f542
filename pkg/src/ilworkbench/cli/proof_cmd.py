# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""``ilworkbench check-proof`` and ``ilworkbench library-verify`` commands."""

from __future__ import annotations

from pathlib import Path

import click
from rich.table import Table

from ilworkbench.cli import (
    ArgumentError,
    FileError,
    _parse,
    _read_text,
    _show,
    cli,
    common_options,
    console,
    emit,
)
from ilworkbench.kernel import ProofFormatError, ProofVerdict, check_proof, format_proof, parse_proof
from ilworkbench.library import get_entry, theorem_library, verify_library
from ilworkbench.logics import LOGICS, Logic
from ilworkbench.syntax import render


def _proof_logic(name: str) -> Logic:
    """Registered logics plus the auxiliary logics the library checks in."""
    known = {**{e.logic.name: e.logic for e in theorem_library()}, **LOGICS}
    key = name.replace(" ", "").replace("⁻", "-")
    if key not in known:
        raise ArgumentError(f"Unknown logic {name!r}. Available logics: {', '.join(known)}")
    return known[key]


# ---------------------------------------------------------------------------
# check-proof
# ---------------------------------------------------------------------------

@cli.command("check-proof")
@click.option("--logic", "-l", "logic_name", required=True, help="Logic the proof is checked in, e.g. IL-(J1).")
@click.option("--proof", "-p", "proof_path", required=True, type=click.Path(dir_okay=False),
              help="Proof file: one 'N. <formula> ; <justification>' per line.")
@click.option("--conclusion", default=None, help="Require the last line to be this formula.")
@common_options
def check_proof_cmd(ctx: click.Context, logic_name: str, proof_path: str, conclusion: str | None) -> None:
    """Check a Hilbert-style proof line by line.

    Justifications: 'Ax J2 A=p B=q C=r', 'MP i j', 'Nec i', 'R1 i C=<formula>', 'R2 i C=<formula>'.
    Exits 1 when the proof is rejected.
    """
    logic = _proof_logic(logic_name)
    try:
        proof = parse_proof(_read_text(proof_path))
    except ProofFormatError as e:
        raise FileError(f"{proof_path}: {e}")
    if not proof.lines:
        raise FileError(f"{proof_path}: no proof lines")
    verdict = check_proof(logic, proof)
    reason = verdict.reason
    if verdict and conclusion is not None and proof.conclusion != _parse(conclusion, "conclusion"):
        verdict = ProofVerdict(False, len(proof), "conclusion differs from --conclusion")
        reason = verdict.reason
    data = {
        "logic": logic.name,
        "lines": len(proof),
        "conclusion": render(proof.conclusion),
        "accepted": verdict.accepted,
        "line": verdict.line,
        "reason": reason,
    }
    table = Table(title=f"Proof check ({logic.name})")
    table.add_column("Lines", justify="right")
    table.add_column("Conclusion", style="white")
    table.add_column("Result")
    status = "[green]accepted[/green]" if verdict else f"[red]rejected at line {verdict.line}[/red]: {reason}"
    table.add_row(str(len(proof)), _show(ctx, proof.conclusion), status)
    emit(ctx, data, table)
    if not verdict:
        ctx.exit(1)


# ---------------------------------------------------------------------------
# library-verify
# ---------------------------------------------------------------------------

@cli.command("library-verify")
@click.option("--entry", "-e", "entries", multiple=True, help="Only these entries (repeatable).")
@click.option("--dump", "dump_dir", type=click.Path(file_okay=False), default=None,
              help="Also write every checked proof to DIR/<name>.proof.")
@common_options
def library_verify(ctx: click.Context, entries: tuple[str, ...], dump_dir: str | None) -> None:
    """Check every derivation in the theorem library.  Exits 1 if any is rejected."""
    if entries:
        try:
            selected = [get_entry(name) for name in entries]
        except KeyError as e:
            raise ArgumentError(e.args[0])
        results = [(e, check_proof(e.logic, e.proof)) for e in selected]
    else:
        results = verify_library()

    if dump_dir is not None:
        out = Path(dump_dir)
        out.mkdir(parents=True, exist_ok=True)
        for entry, _ in results:
            header = f"# {entry.name}: {entry.claim}\n# logic: {entry.logic.name}\n"
            (out / f"{entry.name}.proof").write_text(header + format_proof(entry.proof), encoding="utf-8")
        console.print(f"[green]Wrote {len(results)} proof(s) to {out}[/green]")

    data = [
        {
            "name": e.name,
            "logic": e.logic.name,
            "claim": e.claim,
            "conclusion": render(e.conclusion),
            "lines": len(e.proof),
            "accepted": v.accepted,
            "reason": v.reason,
        }
        for e, v in results
    ]
    table = Table(title="Theorem library")
    table.add_column("Entry", style="cyan")
    table.add_column("Logic", style="cyan")
    table.add_column("Claim", style="white")
    table.add_column("Lines", justify="right")
    table.add_column("Result")
    for e, v in results:
        table.add_row(e.name, e.logic.name, e.claim, str(len(e.proof)),
                      "[green]ok[/green]" if v else f"[red]line {v.line}: {v.reason}[/red]")
    emit(ctx, data, table)
    if not all(v for _, v in results):
        ctx.exit(1)
