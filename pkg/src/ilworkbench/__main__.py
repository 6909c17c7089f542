# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""Entry point for the ilworkbench CLI (run via ``ilworkbench``, ``ilw``, or ``python -m ilworkbench``)."""

from __future__ import annotations

import sys


def main() -> None:
    """Run the CLI."""
    try:
        from ilworkbench.cli import cli
    except ImportError:
        sys.stderr.write("ilworkbench CLI dependencies missing. Install with: pip install ilworkbench\n")
        sys.exit(1)
    cli()


if __name__ == "__main__":
    main()
