# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

""".ilworkbench.toml configuration loading.

Searches upward from cwd for ``.ilworkbench.toml``; ``ILWORKBENCH_*`` environment
variables override the file and CLI flags override both.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    try:
        import tomllib  # type: ignore[import-not-found]
    except ModuleNotFoundError:
        import tomli as tomllib  # type: ignore[no-redef]

CONFIG_NAME = ".ilworkbench.toml"
SEARCH_CLASSES = ("native", "gen")


class ConfigError(ValueError):
    """The configuration file or an override could not be used."""


@dataclass(frozen=True)
class SearchConfig:
    """Limits for countermodel search."""

    max_worlds: int = 3
    max_generators: int = 2
    frame_budget: int = 200_000
    valuation_bits: int = 20
    threads: int = 1
    search_class: str = "native"


@dataclass(frozen=True)
class ExactConfig:
    """Limits for the exact (type elimination) oracle."""

    ceiling: int = 65_536
    max_phi: int = 400


@dataclass(frozen=True)
class WorkbenchConfig:
    """Resolved configuration for the current invocation."""

    search: SearchConfig = field(default_factory=SearchConfig)
    exact: ExactConfig = field(default_factory=ExactConfig)
    oracle: str = "exact"
    format: str = "table"
    config_path: Path | None = None

    def with_search(self, **changes: Any) -> WorkbenchConfig:
        """Copy with some search limits replaced; ``None`` values are ignored."""
        updates = {k: v for k, v in changes.items() if v is not None}
        return replace(self, search=replace(self.search, **updates)) if updates else self


def find_config_file(start: Path | None = None) -> Path | None:
    """Walk upward from *start* (default cwd) looking for ``.ilworkbench.toml``."""
    cur = (start or Path.cwd()).resolve()
    while True:
        candidate = cur / CONFIG_NAME
        if candidate.is_file():
            return candidate
        if cur.parent == cur:
            return None
        cur = cur.parent


def _int(value: Any, key: str) -> int:
    try:
        out = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    if out < 0:
        raise ConfigError(f"{key} must not be negative")
    return out


def _search(raw: dict[str, Any]) -> SearchConfig:
    d = SearchConfig()
    cls = raw.get("search_class", d.search_class)
    if cls not in SEARCH_CLASSES:
        raise ConfigError(f"search_class must be one of {', '.join(SEARCH_CLASSES)}, got {cls!r}")
    return SearchConfig(
        max_worlds=_int(raw.get("max_worlds", d.max_worlds), "search.max_worlds"),
        max_generators=_int(raw.get("max_generators", d.max_generators), "search.max_generators"),
        frame_budget=_int(raw.get("frame_budget", d.frame_budget), "search.frame_budget"),
        valuation_bits=_int(raw.get("valuation_bits", d.valuation_bits), "search.valuation_bits"),
        threads=max(1, _int(raw.get("threads", d.threads), "search.threads")),
        search_class=cls,
    )


def _apply_env(cfg: WorkbenchConfig) -> WorkbenchConfig:
    env = os.environ
    search = cfg.search
    if env.get("ILWORKBENCH_MAX_WORLDS"):
        search = replace(search, max_worlds=_int(env["ILWORKBENCH_MAX_WORLDS"], "ILWORKBENCH_MAX_WORLDS"))
    if env.get("ILWORKBENCH_THREADS"):
        search = replace(search, threads=max(1, _int(env["ILWORKBENCH_THREADS"], "ILWORKBENCH_THREADS")))
    return replace(
        cfg,
        search=search,
        oracle=env.get("ILWORKBENCH_ORACLE") or cfg.oracle,
        format=env.get("ILWORKBENCH_FORMAT") or cfg.format,
    )


def load_config(path: Path | None = None) -> WorkbenchConfig:
    """Load and return config.  Returns defaults (plus environment) if no file found."""
    if path is None:
        explicit = os.environ.get("ILWORKBENCH_CONFIG")
        path = Path(explicit) if explicit else find_config_file()
    if path is None or not path.is_file():
        return _apply_env(WorkbenchConfig())

    try:
        raw: dict[str, Any] = tomllib.loads(path.read_text())
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    section = raw.get("ilworkbench", {})
    exact = section.get("exact", {})
    d = ExactConfig()

    cfg = WorkbenchConfig(
        search=_search(section.get("search", {})),
        exact=ExactConfig(
            ceiling=_int(exact.get("ceiling", d.ceiling), "exact.ceiling"),
            max_phi=_int(exact.get("max_phi", d.max_phi), "exact.max_phi"),
        ),
        oracle=section.get("oracle", "exact"),
        format=section.get("format", "table"),
        config_path=path,
    )
    return _apply_env(cfg)
