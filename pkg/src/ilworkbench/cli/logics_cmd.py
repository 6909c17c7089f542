# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""``ilworkbench logics`` command."""

from __future__ import annotations

import click
from rich.table import Table

from ilworkbench.cli import _get_logic, cli, common_options, emit
from ilworkbench.kernel import Scheme
from ilworkbench.logics import EDGES, GEN_EDGES, PRIMARY, added_schemes, list_logics


def _labels(schemes: frozenset[Scheme]) -> list[str]:
    return [s.label for s in PRIMARY if s in schemes]


@cli.command("logics")
@click.option("--edges", is_flag=True, help="List the lattice edges and the schemes each one adds.")
@common_options
def logics(ctx: click.Context, edges: bool) -> None:
    """Dump the registry of the twenty logics."""
    if edges:
        rows = [
            {"smaller": a, "larger": b, "lattice": lattice,
             "added": [s.label for s in added_schemes(_get_logic(a), _get_logic(b))]}
            for lattice, pairs in (("veltman", EDGES), ("gen", GEN_EDGES))
            for a, b in pairs
        ]
        table = Table(title="Lattice edges")
        table.add_column("Smaller", style="cyan")
        table.add_column("Larger", style="cyan")
        table.add_column("Lattice")
        table.add_column("Adds", style="white")
        for row in rows:
            table.add_row(row["smaller"], row["larger"], row["lattice"], ", ".join(row["added"]))
        emit(ctx, rows, table)
        return

    data = [
        {
            "name": lg.name,
            "schemes": _labels(lg.primary),
            "effective": _labels(lg.effective),
            "class": lg.complete_class.value,
            "conditions": sorted(lg.frame_conditions),
        }
        for lg in list_logics()
    ]
    table = Table(title="Logics")
    table.add_column("Logic", style="cyan")
    table.add_column("Schemes", style="white")
    table.add_column("Derives", style="dim")
    table.add_column("Complete for")
    table.add_column("Conditions", style="white")
    for row in data:
        extra = [s for s in row["effective"] if s not in row["schemes"]]
        table.add_row(row["name"], ", ".join(row["schemes"]) or "-", ", ".join(extra) or "-",
                      row["class"], ", ".join(row["conditions"]) or "-")
    emit(ctx, data, table)
