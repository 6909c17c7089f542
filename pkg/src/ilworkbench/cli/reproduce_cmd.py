# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""``ilworkbench reproduce`` command."""

from __future__ import annotations

import click
from rich.table import Table

from ilworkbench.cli import cli, common_options, emit
from ilworkbench.reproduce import TARGETS, reproduce


@cli.command("reproduce")
@click.argument("target", type=click.Choice(list(TARGETS)))
@common_options
def reproduce_cmd(ctx: click.Context, target: str) -> None:
    """Re-run a shipped result: icp1, icp2, edges or library.  Exits 1 if any check fails."""
    checks = reproduce(target, ctx.obj["config"].search)
    data = {"target": target, "ok": all(c.ok for c in checks), "checks": [c.to_dict() for c in checks]}
    table = Table(title=f"reproduce {target}")
    table.add_column("Check", style="cyan")
    table.add_column("Expected")
    table.add_column("Actual")
    table.add_column("", justify="center")
    table.add_column("Detail", style="dim")
    for c in checks:
        mark = "[green]ok[/green]" if c.ok else "[red]FAIL[/red]"
        table.add_row(c.name, str(c.expected), str(c.actual), mark, c.detail)
    emit(ctx, data, table)
    if not data["ok"]:
        ctx.exit(1)
