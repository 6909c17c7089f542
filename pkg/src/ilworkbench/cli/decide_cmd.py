# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""``ilworkbench refute``, ``ilworkbench decide`` and ``ilworkbench canonical`` commands."""

from __future__ import annotations

import click
from rich.table import Table

from ilworkbench.canonical import MAX_WORLDS, ProvedError, UnsupportedLogic, canonical_model
from ilworkbench.cli import ArgumentError, _get_logic, _parse, _show, cli, common_options, emit, output
from ilworkbench.decide import decide, parse_mode
from ilworkbench.frames_io import model_to_dict
from ilworkbench.oracles import get_oracle_class
from ilworkbench.oracles.exact import ExactOracle
from ilworkbench.search import Countermodel, bounded_refute
from ilworkbench.semantics import BudgetExceeded
from ilworkbench.syntax import render


def _countermodel_dict(cm: Countermodel) -> dict:
    return {"root": cm.world, "worlds": cm.size, "frames_tried": cm.frames_tried, "model": model_to_dict(cm.model)}


def _summary(ctx: click.Context, title: str, rows: list[tuple[str, str]], model: dict | None) -> None:
    table = Table(title=title, show_header=False)
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="white")
    for k, v in rows:
        table.add_row(k, v)
    output.print(table)
    if model is not None:
        output.print_json(data=model)


@cli.command("refute")
@click.option("--logic", "-l", "logic_name", required=True, help="Logic name, e.g. IL-(J2,J4+,J5).")
@click.option("--formula", "-f", required=True, help="Formula to refute.")
@click.option("--max-worlds", "-n", type=click.IntRange(min=1), default=None, help="World budget (default: search.max_worlds).")
@click.option("--class", "search_class", type=click.Choice(["native", "gen"]), default=None,
              help="Search the logic's complete class (native) or generalized frames (gen).")
@click.option("--max-generators", type=click.IntRange(min=1), default=None, help="Generators per S_x(y) in generalized search.")
@common_options
def refute(ctx: click.Context, logic_name: str, formula: str, max_worlds: int | None,
           search_class: str | None, max_generators: int | None) -> None:
    """Search for a finite countermodel in the logic's frame class."""
    logic = _get_logic(logic_name)
    f = _parse(formula)
    cfg = ctx.obj["config"].with_search(max_worlds=max_worlds, search_class=search_class, max_generators=max_generators)
    cm = bounded_refute(logic, f, config=cfg.search)
    data: dict = {"logic": logic.name, "formula": render(f), "max_worlds": cfg.search.max_worlds, "found": cm is not None}
    if cm is not None:
        data["countermodel"] = _countermodel_dict(cm)
    rows = [("logic", logic.name), ("formula", _show(ctx, f)), ("max worlds", str(cfg.search.max_worlds))]
    if cm is None:
        rows.append(("result", "[yellow]no countermodel within budget[/yellow]"))
    else:
        rows += [("result", f"[red]refuted[/red] at {cm.world}"), ("worlds", str(cm.size)), ("frames tried", str(cm.frames_tried))]
    emit(ctx, data, lambda: _summary(ctx, "Countermodel search", rows, data.get("countermodel", {}).get("model")))


@cli.command("decide")
@click.option("--logic", "-l", "logic_name", required=True, help="Logic name, e.g. IL-(J1).")
@click.option("--formula", "-f", required=True, help="Formula to decide.")
@click.option("--mode", default=None, help="exact or practical:N (default: from the configured oracle).")
@click.option("--oracle", "oracle_name", default=None, help="Use a registered oracle plugin instead of the mode's default.")
@common_options
def decide_cmd(ctx: click.Context, logic_name: str, formula: str, mode: str | None, oracle_name: str | None) -> None:
    """Decide whether the logic proves the formula.

    Exit codes: 0 theorem, 10 non-theorem, 20 unknown.
    """
    logic = _get_logic(logic_name)
    f = _parse(formula)
    cfg = ctx.obj["config"]
    if mode is None:
        mode = "exact" if cfg.oracle == "exact" else f"practical:{cfg.search.max_worlds}"
    try:
        m = parse_mode(mode)
    except ValueError as e:
        raise ArgumentError(str(e))
    oracle = None
    if oracle_name is not None:
        try:
            oracle = get_oracle_class(oracle_name).from_config(cfg)
        except KeyError as e:
            raise ArgumentError(e.args[0])
    try:
        decision = decide(logic, f, m, cfg, oracle)
    except RuntimeError as e:  # BudgetExceeded, OracleExhausted, unknown in exact mode
        raise click.ClickException(str(e))
    data = decision.to_dict()
    rows = [("logic", logic.name), ("formula", _show(ctx, f)), ("mode", str(m)),
            ("status", decision.status.value), ("detail", decision.detail)]
    model = data["countermodel"] if decision.countermodel is not None else None
    emit(ctx, data, lambda: _summary(ctx, "Decision", rows, model))
    ctx.exit(decision.status.exit_code)


@cli.command("canonical")
@click.option("--logic", "-l", "logic_name", required=True, help="One of the registered logics.")
@click.option("--formula", "-f", required=True, help="Formula to refute.")
@click.option("--max-worlds", type=click.IntRange(min=1), default=MAX_WORLDS, show_default=True,
              help="Refuse to build larger models.")
@common_options
def canonical(ctx: click.Context, logic_name: str, formula: str, max_worlds: int) -> None:
    """Build the canonical countermodel over K_L and audit its truth lemma.  Exits 1 if an audit fails."""
    logic = _get_logic(logic_name)
    f = _parse(formula)
    try:
        oracle = ExactOracle(ctx.obj["config"])
        oracle.context(f)
        cm = canonical_model(logic, f, oracle, max_worlds=max_worlds)
    except (ProvedError, UnsupportedLogic, BudgetExceeded) as e:
        raise click.ClickException(str(e))
    mismatches = cm.audit()
    verdict = cm.verify()
    refuted = not cm.model.forces(cm.root, f)
    data = {
        "logic": logic.name,
        "formula": render(f),
        "construction": cm.construction,
        "root": cm.root,
        "worlds": len(cm.worlds),
        "phi": len(cm.ctx),
        "truth_lemma": {"ok": not mismatches, "mismatches": [[w, render(g)] for w, g in mismatches]},
        "frame_conditions": {"ok": verdict.ok, "clause": verdict.clause},
        "refuted_at_root": refuted,
        "model": model_to_dict(cm.model),
    }
    rows = [("logic", logic.name), ("formula", _show(ctx, f)), ("construction", cm.construction),
            ("worlds", str(len(cm.worlds))), ("|Phi|", str(len(cm.ctx))), ("root", cm.root),
            ("truth lemma", "[green]ok[/green]" if not mismatches else f"[red]{len(mismatches)} mismatch(es)[/red]"),
            ("frame conditions", "[green]ok[/green]" if verdict else f"[red]{verdict.clause}[/red]"),
            ("refuted at root", "[green]yes[/green]" if refuted else "[red]no[/red]")]
    emit(ctx, data, lambda: _summary(ctx, "Canonical model", rows, data["model"]))
    if mismatches or not verdict or not refuted:
        ctx.exit(1)
