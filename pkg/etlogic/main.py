"""
``etl`` entry point — logging setup and output; the work happens in ``cli.app.run``.

Human output goes to stdout through rich; logs go to stderr through a
``RichHandler``. With ``--json`` stdout carries exactly one JSON document,
``CommandResult.model_dump_json()``.
"""

from __future__ import annotations

import logging
import sys
from typing import Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from etlogic.cli.app import global_options, run
from etlogic.models.reports import CommandResult, ReportVerdict

logger = logging.getLogger(__name__)

_LEVELS = {0: logging.WARNING, 1: logging.INFO}

_STYLES = {
    ReportVerdict.OK: "green",
    ReportVerdict.HOLDS: "green",
    ReportVerdict.ACCEPTED: "green",
    ReportVerdict.REFUTED: "yellow",
    ReportVerdict.REJECTED: "yellow",
    ReportVerdict.BUDGET_EXCEEDED: "red",
    ReportVerdict.ERROR: "red",
}


def configure_logging(verbosity: int) -> None:
    level = _LEVELS.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=verbosity > 1, markup=False)],
        force=True,
    )


def render_result(result: CommandResult, console: Console) -> None:
    style = _STYLES[result.verdict]
    head = f"[{style}]{result.verdict.value}[/{style}]"
    console.print(f"{head} {escape(result.summary)}" if result.summary else head)
    for line in result.lines:
        console.print(escape(line), highlight=False)
    for warning in result.warnings:
        logger.warning(warning)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    options = global_options(argv)
    configure_logging(options.verbose)
    result = run(argv)
    if options.json:
        sys.stdout.write(result.model_dump_json() + "\n")
    else:
        render_result(result, Console(soft_wrap=True))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
