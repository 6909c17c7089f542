# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""``ilworkbench parse`` command."""

from __future__ import annotations

import click
from rich.table import Table

from ilworkbench.cli import _parse, _show, cli, common_options, emit
from ilworkbench.syntax import adequate_closure, check_adequate, render, size, subformulas, variables


@cli.command("parse")
@click.option("--formula", "-f", required=True, help="Formula text.")
@click.option("--closure", is_flag=True, help="Also report the adequate closure of the formula.")
@common_options
def parse_formula(ctx: click.Context, formula: str, closure: bool) -> None:
    """Parse a formula and print its canonical rendering.

    ASCII syntax: ~ & | -> [] <> |> top bot; |> binds tighter than -> and looser than |.
    """
    f = _parse(formula)
    data: dict = {
        "formula": render(f),
        "unicode": render(f, unicode=True),
        "size": size(f),
        "variables": variables(f),
        "subformulas": len(subformulas(f)),
    }
    if closure:
        phi = adequate_closure([f])
        problems = check_adequate(phi.phi)
        data["closure"] = {
            "size": len(phi),
            "rhd_operands": [render(g) for g in phi.phi_rhd],
            "adequate": not problems,
        }
    table = Table(title="Formula")
    table.add_column("Property", style="cyan")
    table.add_column("Value", style="white")
    table.add_row("formula", _show(ctx, f))
    table.add_row("size", str(data["size"]))
    table.add_row("variables", ", ".join(data["variables"]) or "(none)")
    table.add_row("subformulas", str(data["subformulas"]))
    if closure:
        table.add_row("|Phi|", str(data["closure"]["size"]))
        table.add_row("Phi_|>", ", ".join(_show(ctx, g) for g in phi.phi_rhd))
        table.add_row("adequate", "yes" if data["closure"]["adequate"] else "[red]no[/red]")
    emit(ctx, data, table)
