# Copyright (c) 2026 Ramin Firoozye
# SPDX-License-Identifier: AGPL-3.0-or-later

"""ilworkbench -- interpretability logic IL and its sublogics: proofs, Veltman semantics and decision."""

from ilworkbench.syntax import Formula, parse, render

__all__ = ["__version__", "Formula", "parse", "render"]
__version__ = "0.1.0"
