# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Oracle plugin registry -- discovers oracles via the ``ilworkbench.oracles`` entry-point group."""

from __future__ import annotations

from importlib.metadata import entry_points

from ilworkbench.oracle import Oracle
from ilworkbench.oracles.bounded import BoundedOracle
from ilworkbench.oracles.exact import ExactOracle

_BUILTIN: dict[str, type[Oracle]] = {"bounded": BoundedOracle, "exact": ExactOracle}


def get_oracle_class(name: str) -> type[Oracle]:
    """Load an oracle class by its registered name.

    Raises ``KeyError`` with a helpful message when the name is unknown.
    """
    if name in _BUILTIN:
        return _BUILTIN[name]
    eps = entry_points(group="ilworkbench.oracles")
    for ep in eps:
        if ep.name == name:
            return ep.load()
    raise KeyError(f"Unknown oracle {name!r}. Available oracles: {', '.join(list_oracle_names())}")


def list_oracle_names() -> list[str]:
    """Return sorted names of all built-in and registered oracles."""
    eps = entry_points(group="ilworkbench.oracles")
    return sorted(set(_BUILTIN) | {ep.name for ep in eps})
