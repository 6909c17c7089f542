# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""ilworkbench CLI -- parse, prove, evaluate, refute and decide in IL and its sublogics.

The CLI is split into per-command modules under this package.  The ``cli`` click group
and the shared helpers (``console``, ``common_options``, ``_get_logic`` and the output
helpers) live here so every command module can import them.
"""

from __future__ import annotations

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, TypeVar, cast

import click
import yaml
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from ilworkbench import __version__
from ilworkbench.config import ConfigError, WorkbenchConfig, load_config
from ilworkbench.frames_io import SHIPPED, read_model, shipped_model
from ilworkbench.logics import Logic, get_logic
from ilworkbench.semantics import FrameError, Model
from ilworkbench.syntax import Formula, ParseError, parse, render

console = Console(stderr=True)
output = Console(highlight=False, soft_wrap=True)

EX_USAGE = 64
EX_NOINPUT = 66
FORMATS = ("table", "json", "yaml")


class ArgumentError(click.UsageError):
    """Bad argument value (unknown logic, unparsable formula ...)."""

    exit_code = EX_USAGE


class FileError(click.ClickException):
    """Unreadable or malformed input file."""

    exit_code = EX_NOINPUT


class WorkbenchGroup(click.Group):
    """Click group that reports usage errors with exit code 64."""

    def main(self, *args: Any, **kwargs: Any) -> Any:
        if not kwargs.pop("standalone_mode", True):
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EX_USAGE)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        sys.exit(rv if isinstance(rv, int) else 0)


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _get_logic(name: str) -> Logic:
    try:
        return get_logic(name)
    except KeyError as e:
        raise ArgumentError(e.args[0])


def _parse(text: str, what: str = "formula") -> Formula:
    try:
        return parse(text)
    except ParseError as e:
        raise ArgumentError(f"cannot parse {what} {text!r}: {e}")


def _read_model(path: str, kind: str = "auto", auto_reduce: bool = False) -> Model:
    """Load a frame/model file; a bare name of a shipped frame (``icp1.json``) falls back to the packaged copy."""
    p = Path(path)
    if not p.exists() and p.parent == Path(".") and p.stem in SHIPPED:
        return shipped_model(p.stem)
    try:
        return read_model(path, kind, auto_reduce)
    except OSError as e:
        raise FileError(f"cannot read {path}: {e.strerror or e}")
    except FrameError as e:
        raise FileError(f"{path}: {e}")


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FileError(f"cannot read {path}: {e.strerror or e}")


def _show(ctx: click.Context, f: Formula) -> str:
    return render(f, unicode=ctx.obj["unicode"])


def emit(ctx: click.Context, data: Any, table: Table | Callable[[], None] | None = None) -> None:
    """Print *data* as JSON/YAML on stdout, or *table* when the format is ``table``."""
    fmt = ctx.obj["format"]
    if fmt == "json":
        click.echo(json.dumps(data, indent=2, ensure_ascii=False))
    elif fmt == "yaml":
        click.echo(yaml.safe_dump(data, sort_keys=False, allow_unicode=True), nl=False)
    elif isinstance(table, Table):
        output.print(table)
    elif table is not None:
        table()
    else:
        output.print_json(data=data)


def _setup_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING
    root = logging.getLogger("ilworkbench")
    root.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in root.handlers):
        root.addHandler(RichHandler(console=console, show_path=False))


F = TypeVar("F", bound=Callable[..., Any])


def common_options(f: F) -> F:
    """Add --format, --unicode and --threads to a command (overriding the group-level values)."""
    @functools.wraps(f)  # type: ignore[arg-type]
    @click.option("--format", "fmt", type=click.Choice(FORMATS), default=None, help="Output format (default: config, else table).")
    @click.option("--unicode", "-u", is_flag=True, default=None, help="Render formulas with Unicode symbols.")
    @click.option("--threads", "-j", type=click.IntRange(min=1), default=None, help="Worker processes for countermodel search.")
    @click.pass_context
    def wrapper(
        ctx: click.Context,
        fmt: str | None,
        unicode: bool | None,
        threads: int | None,
        *args: Any,
        **kwargs: Any,
    ) -> Any:
        if fmt is not None:
            ctx.obj["format"] = fmt
        if unicode:
            ctx.obj["unicode"] = True
        if threads is not None:
            ctx.obj["config"] = ctx.obj["config"].with_search(threads=threads)
        return f(ctx, *args, **kwargs)
    return cast(F, wrapper)


# ---------------------------------------------------------------------------
# Top-level click group
# ---------------------------------------------------------------------------


def _cli_callback(
    ctx: click.Context,
    config_path: str | None,
    fmt: str | None,
    unicode: bool,
    threads: int | None,
    seed: int,
    verbose: bool,
) -> None:
    """Workbench for the interpretability logic IL and its sublogics."""
    _setup_logging(verbose)
    if config_path and not Path(config_path).is_file():
        raise FileError(f"config file not found: {config_path}")
    try:
        cfg: WorkbenchConfig = load_config(Path(config_path) if config_path else None)
    except ConfigError as e:
        raise FileError(str(e))
    ctx.ensure_object(dict)
    ctx.obj["config"] = cfg.with_search(threads=threads)
    ctx.obj["format"] = fmt or (cfg.format if cfg.format in FORMATS else "table")
    ctx.obj["unicode"] = unicode
    ctx.obj["seed"] = seed
    ctx.obj["verbose"] = verbose


cli = cast(
    WorkbenchGroup,
    click.group(cls=WorkbenchGroup)(
        click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
                     help="Config file (default: ILWORKBENCH_CONFIG or nearest .ilworkbench.toml).")(
            click.option("--format", "fmt", type=click.Choice(FORMATS), default=None,
                         help="Output format: table (default), json, yaml.")(
                click.option("--unicode", "-u", is_flag=True, help="Render formulas with Unicode symbols.")(
                    click.option("--threads", "-j", type=click.IntRange(min=1), default=None,
                                 help="Worker processes for countermodel search.")(
                        click.option("--seed", type=int, default=0, show_default=True,
                                     help="Seed for random sampling (correspond --random).")(
                            click.option("--verbose", "-v", is_flag=True, help="Verbose output.")(
                                click.version_option(__version__)(
                                    click.pass_context(_cli_callback)
                                )
                            )
                        )
                    )
                )
            )
        )
    ),
)


# ---------------------------------------------------------------------------
# Register all command modules (import triggers @cli.command registration)
# ---------------------------------------------------------------------------

from ilworkbench.cli import (  # noqa: E402, F401
    correspond_cmd,
    decide_cmd,
    logics_cmd,
    model_cmd,
    parse_cmd,
    proof_cmd,
    reproduce_cmd,
)
