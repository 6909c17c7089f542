# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""``ilworkbench eval``, ``ilworkbench valid`` and ``ilworkbench frame-check`` commands."""

from __future__ import annotations

import click
from rich.table import Table

from ilworkbench.cli import (
    ArgumentError,
    _get_logic,
    _parse,
    _read_model,
    _show,
    cli,
    common_options,
    emit,
)
from ilworkbench.correspondence import satisfies
from ilworkbench.semantics import BudgetExceeded, UnknownWorldError, frame_refutation, natural_key
from ilworkbench.syntax import render

CLASS_CHOICE = click.Choice(["auto", "veltman", "gen"])


def _sorted(ws: frozenset[str]) -> list[str]:
    return sorted(ws, key=natural_key)


@cli.command("eval")
@click.option("--model", "-m", "model_path", required=True, type=click.Path(dir_okay=False), help="Model file (JSON/YAML).")
@click.option("--formula", "-f", required=True, help="Formula to evaluate.")
@click.option("--world", "-w", default=None, help="Only report this world.")
@click.option("--class", "kind", type=CLASS_CHOICE, default="auto", help="Frame class of the file (default: detect).")
@common_options
def eval_cmd(ctx: click.Context, model_path: str, formula: str, world: str | None, kind: str) -> None:
    """Evaluate a formula at the worlds of a model."""
    model = _read_model(model_path, kind)
    f = _parse(formula)
    try:
        truth = model.truth_set(f)
        if world is not None:
            model.forces(world, f)
    except UnknownWorldError as e:
        raise ArgumentError(str(e))
    worlds = [world] if world is not None else list(model.frame.worlds)
    data = {
        "formula": render(f),
        "truth_set": _sorted(truth),
        "worlds": {w: w in truth for w in worlds},
    }
    table = Table(title=_show(ctx, f))
    table.add_column("World", style="cyan")
    table.add_column("Forces")
    for w in worlds:
        table.add_row(w, "[green]yes[/green]" if w in truth else "[red]no[/red]")
    emit(ctx, data, table)


@cli.command("valid")
@click.option("--model", "-m", "model_path", required=True, type=click.Path(dir_okay=False), help="Model or frame file.")
@click.option("--formula", "-f", required=True, help="Formula to check.")
@click.option("--frame", "on_frame", is_flag=True, help="Quantify over every valuation of the file's frame.")
@click.option("--class", "kind", type=CLASS_CHOICE, default="auto", help="Frame class of the file (default: detect).")
@common_options
def valid_cmd(ctx: click.Context, model_path: str, formula: str, on_frame: bool, kind: str) -> None:
    """Model validity, or frame validity with --frame (valuation space bounded by search.valuation_bits)."""
    model = _read_model(model_path, kind)
    f = _parse(formula)
    data: dict = {"formula": render(f), "scope": "frame" if on_frame else "model"}
    if on_frame:
        try:
            ref = frame_refutation(model.frame, f, ctx.obj["config"].search.valuation_bits)
        except BudgetExceeded as e:
            raise click.ClickException(str(e))
        data["valid"] = ref is None
        if ref is not None:
            data["refutation"] = {"world": ref.world, "val": {p: _sorted(ws) for p, ws in sorted(ref.valuation.items())}}
    else:
        failing = [w for w in model.frame.worlds if not model.forces(w, f)]
        data["valid"] = not failing
        if failing:
            data["refutation"] = {"world": failing[0]}

    table = Table(title=f"{data['scope']} validity")
    table.add_column("Formula", style="white")
    table.add_column("Valid")
    table.add_column("Fails at", style="dim")
    detail = ""
    if "refutation" in data:
        r = data["refutation"]
        detail = r["world"] + "".join(f"  {p}@{{{', '.join(ws)}}}" for p, ws in r.get("val", {}).items())
    table.add_row(_show(ctx, f), "[green]yes[/green]" if data["valid"] else "[red]no[/red]", detail)
    emit(ctx, data, table)


@cli.command("frame-check")
@click.option("--frame", "frame_path", required=True, type=click.Path(dir_okay=False), help="Frame or model file.")
@click.option("--logic", "-l", "logic_name", default=None, help="Also check this logic's frame conditions.")
@click.option("--class", "kind", type=CLASS_CHOICE, default="auto", help="Frame class of the file (default: detect).")
@click.option("--auto-reduce", is_flag=True, help="Minimize non-antichain generator lists instead of rejecting them.")
@common_options
def frame_check(ctx: click.Context, frame_path: str, logic_name: str | None, kind: str, auto_reduce: bool) -> None:
    """Check frame invariants (and a logic's conditions).  Exits 1 on failure."""
    logic = _get_logic(logic_name) if logic_name else None
    frame = _read_model(frame_path, kind, auto_reduce).frame
    checks = [("frame", frame.check())]
    if logic is not None and checks[0][1]:
        checks.append((logic.name, satisfies(frame, logic)))
    data = {
        "worlds": len(frame.worlds),
        "checks": [{"check": name, "ok": v.ok, "clause": v.clause, "witness": list(v.witness)} for name, v in checks],
    }
    table = Table(title=f"Frame check ({frame_path})")
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Witness", style="dim")
    for name, v in checks:
        table.add_row(name, "[green]ok[/green]" if v else f"[red]{v.clause}[/red]", ", ".join(v.witness))
    emit(ctx, data, table)
    if not all(v for _, v in checks):
        ctx.exit(1)
