"""
CLI application — argument parsing and dispatch, with no printing.

``run(argv)`` parses the arguments, hands them to the registered command and
returns a ``CommandResult``. Every failure a user can cause (unknown
subcommand, bad flag, unparsable formula, unreadable file, budget over the
cap) comes back as a result with exit code 2 instead of an exception or a
``SystemExit``. ``etlogic.main`` does the printing.

--- WHERE TO CHANGE IF A COMMAND IS ADDED ---
Add it to one of the ``cli/commands`` modules (or a new one listed in
``ROUTERS``) with ``@router.command``.
"""

from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from pydantic import ValidationError

from etlogic.core.config import DEFAULT_SETTINGS, ToolkitSettings, settings_from_args
from etlogic.models.reports import CommandResult
from etlogic.services.calculus import ProofFormatError
from etlogic.services.syntax import Formula, FormulaSyntaxError, is_intended, render_formula

logger = logging.getLogger(__name__)

PROG = "etl"

Handler = Callable[[argparse.Namespace, ToolkitSettings], CommandResult]


class UsageError(Exception):
    def __init__(self, message: str, usage: str = "") -> None:
        super().__init__(message)
        self.usage = usage


class HelpRequested(Exception):
    def __init__(self, text: str) -> None:
        super().__init__("help requested")
        self.text = text


class ToolkitArgumentParser(argparse.ArgumentParser):
    """An ArgumentParser that raises instead of printing and exiting."""

    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message, self.format_usage())

    def print_help(self, file=None) -> None:
        raise HelpRequested(self.format_help())

    def exit(self, status: int = 0, message: str | None = None):  # type: ignore[override]
        raise UsageError(message or f"exit status {status}", self.format_usage())


# ---------------------------------------------------------------------------
# Command registration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Arg:
    flags: tuple[str, ...]
    options: dict[str, Any]


def arg(*flags: str, **options: Any) -> Arg:
    return Arg(flags, options)


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    handler: Handler
    arguments: tuple[Arg, ...]


@dataclass
class CommandRouter:
    """A group of commands, mounted on the main parser by ``build_parser``."""

    tag: str
    commands: list[Command] = field(default_factory=list)

    def command(self, name: str, *, help: str, arguments: Sequence[Arg] = ()):
        def register(handler: Handler) -> Handler:
            self.commands.append(Command(name, help, handler, tuple(arguments)))
            return handler
        return register


def intended_warnings(*formulas: Formula) -> list[str]:
    """One warning per formula with a quantifier that binds no free occurrence."""
    return [
        f"{render_formula(f)} has a quantifier binding no free occurrence"
        for f in formulas
        if not is_intended(f)
    ]


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies must not reset values given before the subcommand
    json_default = argparse.SUPPRESS if suppress else False
    verbose_default = argparse.SUPPRESS if suppress else 0
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=json_default, help="print one JSON document")
    common.add_argument(
        "-v", "--verbose", action="count", default=verbose_default, help="log more (-v info, -vv debug)"
    )
    return common


def build_parser(routers: Sequence[CommandRouter] | None = None) -> ToolkitArgumentParser:
    from etlogic.cli.commands import ROUTERS

    parser = ToolkitArgumentParser(
        prog=PROG,
        description="Four-valued non-Fregean logic toolkit.",
        parents=[_common_options(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub_common = _common_options(suppress=True)
    for router in routers if routers is not None else ROUTERS:
        for command in router.commands:
            child = sub.add_parser(command.name, help=command.help, description=command.help, parents=[sub_common])
            for a in command.arguments:
                child.add_argument(*a.flags, **a.options)
            child.set_defaults(handler=command.handler)
    return parser


def global_options(argv: Sequence[str]) -> argparse.Namespace:
    """``--json`` and the verbosity count, wherever they appear in *argv*."""
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--json", action="store_true")
    pre.add_argument("-v", "--verbose", action="count", default=0)
    known, _ = pre.parse_known_args(list(argv))
    return known


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def run(argv: Sequence[str], settings: ToolkitSettings = DEFAULT_SETTINGS) -> CommandResult:
    """Parse *argv*, run the chosen command, and report. Never raises for user errors."""
    argv = list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except HelpRequested as exc:
        return CommandResult(command="help", verdict="ok", lines=exc.text.splitlines())
    except UsageError as exc:
        return CommandResult.error(_command_name(argv), str(exc), *exc.usage.splitlines())

    if getattr(args, "handler", None) is None:
        return CommandResult.error("", "no command given", *parser.format_usage().splitlines())

    try:
        active = settings_from_args(args, settings)
    except ValidationError as exc:
        messages = [f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors()]
        return CommandResult.error(args.command, "invalid settings", *messages)

    logger.debug("running %s with %s", args.command, active)
    try:
        return args.handler(args, active)
    except FormulaSyntaxError as exc:
        return CommandResult.error(args.command, str(exc), *exc.diagnostic().splitlines()[1:])
    except ProofFormatError as exc:
        return CommandResult.error(args.command, str(exc), *exc.diagnostic().splitlines()[1:])
    except OSError as exc:
        return CommandResult.error(args.command, f"cannot read input: {exc}")
    except ValueError as exc:
        # every library error class derives from ValueError
        return CommandResult.error(args.command, str(exc))


def _command_name(argv: Sequence[str]) -> str:
    return next((a for a in argv if not a.startswith("-")), "")
