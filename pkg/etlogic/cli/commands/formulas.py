"""
Formula commands

``parse``: echo a formula's canonical rendering, AST and structural facts.
"""

from __future__ import annotations

import argparse
import logging

from etlogic.cli.app import CommandRouter, arg, intended_warnings
from etlogic.core.config import ToolkitSettings
from etlogic.models.reports import CommandResult, ReportVerdict
from etlogic.services.syntax import (
    constants,
    formula_depth,
    free_vars,
    is_closed,
    is_intended,
    parse_formula,
    render_formula,
)
from etlogic.utils.serialization import formula_to_tree

logger = logging.getLogger(__name__)

router = CommandRouter("formulas")


@router.command(
    "parse",
    help="parse a formula and report its structure",
    arguments=(arg("--formula", required=True, help="∈T formula, e.g. '$c == ($c :false)'"),),
)
def parse_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    f = parse_formula(args.formula)
    rendered = render_formula(f)
    intended = is_intended(f)
    free = sorted(free_vars(f), key=lambda v: v.index)
    warnings = intended_warnings(f)
    return CommandResult(
        command="parse",
        verdict=ReportVerdict.OK,
        summary=rendered,
        details={
            "formula": rendered,
            "intended": intended,
            "closed": is_closed(f),
            "free_vars": [str(v) for v in free],
            "constants": sorted(f"${c.name}" for c in constants(f)),
            "depth": formula_depth(f),
            "tree": formula_to_tree(f),
        },
        lines=[
            f"formula:   {rendered}",
            f"intended:  {'yes' if intended else 'no'}",
            f"free vars: {', '.join(map(str, free)) or '-'}",
            f"depth:     {formula_depth(f)}",
        ],
        warnings=warnings,
    )
