# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""``ilworkbench correspond`` command."""

from __future__ import annotations

import random

import click
from rich.table import Table

from ilworkbench.cli import ArgumentError, _read_model, cli, common_options, emit
from ilworkbench.correspondence import AuditReport, condition_for, correspondence_audit
from ilworkbench.logics import FrameClass
from ilworkbench.search import random_frame
from ilworkbench.semantics import BudgetExceeded, Frame, natural_key

_SCHEMES = {"veltman": ("J1", "J4", "J2", "J5"), "gen": ("J1", "J4", "J4+", "J2", "J2+", "J5")}


def _report_dict(r: AuditReport) -> dict:
    out: dict = {"condition": r.condition.value, "holds": r.holds, "valid": r.valid, "agree": r.agree}
    if r.witness:
        out["witness"] = list(r.witness)
    if r.refutation is not None:
        out["refutation"] = {
            "world": r.refutation.world,
            "val": {p: sorted(ws, key=natural_key) for p, ws in sorted(r.refutation.valuation.items())},
        }
    if r.literal is not None:
        out["literal"] = r.literal
    return out


@cli.command("correspond")
@click.option("--class", "kind", type=click.Choice(["veltman", "gen"]), default="veltman", show_default=True,
              help="Frame class whose conditions are checked.")
@click.option("--frame", "frame_path", type=click.Path(dir_okay=False), default=None, help="Frame file to audit.")
@click.option("--scheme", "schemes", multiple=True, help="Scheme (J1 J2 J2+ J4 J4+ J5); default: all for the class.")
@click.option("--random", "samples", type=click.IntRange(min=1), default=None,
              help="Audit this many random frames instead of --frame (seeded by --seed).")
@click.option("--worlds", type=click.IntRange(1, 6), default=4, show_default=True, help="Worlds per random frame.")
@click.option("--literal", is_flag=True, help="Also check the power-set reading of generalized conditions.")
@common_options
def correspond(ctx: click.Context, kind: str, frame_path: str | None, schemes: tuple[str, ...],
               samples: int | None, worlds: int, literal: bool) -> None:
    """Compare frame conditions with validity of their characteristic instances.

    Prints whether each condition holds and whether the instance is valid on the frame.
    Exits 1 if they ever disagree.
    """
    if (frame_path is None) == (samples is None):
        raise click.UsageError("give exactly one of --frame or --random")
    try:
        conditions = [condition_for(s, kind) for s in (schemes or _SCHEMES[kind])]
    except KeyError as e:
        raise ArgumentError(e.args[0])
    frames: list[tuple[str, Frame]]
    if frame_path is not None:
        frames = [(frame_path, _read_model(frame_path, kind).frame)]
    else:
        assert samples is not None
        rng = random.Random(ctx.obj["seed"])
        cls = FrameClass.VELTMAN if kind == "veltman" else FrameClass.GENERALIZED
        frames = [(f"sample {i}", random_frame(worlds, cls, rng)) for i in range(samples)]
    bits = ctx.obj["config"].search.valuation_bits
    reports: list[tuple[str, AuditReport]] = []
    try:
        for name, frame in frames:
            reports.extend((name, correspondence_audit(frame, c, literal, bits)) for c in conditions)
    except BudgetExceeded as e:
        raise click.ClickException(str(e))

    disagreements = [(n, r) for n, r in reports if not r.agree]
    if frame_path is not None:
        data: dict = {"frame": frame_path, "reports": [_report_dict(r) for _, r in reports]}
        table = Table(title=f"Correspondence ({kind})")
        table.add_column("Condition", style="cyan")
        table.add_column("Holds")
        table.add_column("Instance valid")
        table.add_column("Witness", style="dim")
        for _, r in reports:
            table.add_row(r.condition.value, _yes(r.holds), _yes(r.valid), ", ".join(r.witness))
    else:
        counts = {c: sum(r.holds for _, r in reports if r.condition is c) for c in conditions}
        data = {
            "samples": samples,
            "worlds": worlds,
            "seed": ctx.obj["seed"],
            "conditions": {c.value: {"holds": counts[c], "fails": len(frames) - counts[c]} for c in conditions},
            "disagreements": [{"frame": n, **_report_dict(r)} for n, r in disagreements],
        }
        table = Table(title=f"Correspondence over {samples} random {kind} frame(s), {worlds} worlds")
        table.add_column("Condition", style="cyan")
        table.add_column("Holds", justify="right")
        table.add_column("Fails", justify="right")
        table.add_column("Disagreements", justify="right")
        for c in conditions:
            bad = sum(r.condition is c for _, r in disagreements)
            table.add_row(c.value, str(counts[c]), str(len(frames) - counts[c]), _count(bad))
    emit(ctx, data, table)
    if disagreements:
        ctx.exit(1)


def _yes(flag: bool) -> str:
    return "[green]true[/green]" if flag else "[red]false[/red]"


def _count(n: int) -> str:
    return "0" if not n else f"[red]{n}[/red]"

