"""
Proof commands

``check`` a proof file, ``rename`` a constant in one, run the golden ``corpus``.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from etlogic.cli.app import CommandRouter, arg
from etlogic.core.config import ToolkitSettings
from etlogic.core.paths import get_corpus_root
from etlogic.models.reports import CommandResult, ProofRecord, ReportVerdict
from etlogic.services.calculus import (
    check_derivation,
    check_entry,
    load_corpus,
    load_proof,
    render_proof,
    rename_constant,
)
from etlogic.services.syntax import Variable, parse_formula

logger = logging.getLogger(__name__)

router = CommandRouter("proofs")


@router.command(
    "check",
    help="check a proof file",
    arguments=(arg("path", help="proof file"),),
)
def check_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    derivation = load_proof(args.path)
    verdict = check_derivation(derivation)
    return CommandResult(
        command="check",
        verdict=ReportVerdict.ACCEPTED if verdict.accepted else ReportVerdict.REJECTED,
        summary=str(verdict),
        details={"path": str(args.path), "steps": len(derivation.steps), "verdict": verdict.model_dump(mode="json")},
    )


@router.command(
    "rename",
    help="replace a constant by a fresh variable throughout a proof",
    arguments=(
        arg("path", help="proof file"),
        arg("--constant", required=True, help="constant name, with or without '$'"),
        arg("--variable", required=True, help="fresh variable, e.g. v7"),
    ),
)
def rename_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    target = parse_formula(args.variable)
    if not isinstance(target, Variable):
        raise ValueError(f"--variable must be a variable, got {args.variable!r}")
    renamed = rename_constant(load_proof(args.path), args.constant, target)
    verdict = check_derivation(renamed)
    text = render_proof(renamed)
    return CommandResult(
        command="rename",
        verdict=ReportVerdict.ACCEPTED if verdict.accepted else ReportVerdict.REJECTED,
        summary=f"renamed ${args.constant.lstrip('$')} to {target}: {verdict}",
        details={"proof": text, "verdict": verdict.model_dump(mode="json")},
        lines=text.splitlines(),
    )


@router.command(
    "corpus",
    help="check every golden proof, its soundness and renaming",
    arguments=(
        arg("directory", nargs="?", default=None, help="proof directory (default: the project's proofs/)"),
        arg("--budget", type=int, default=None, help="interpretation budget per step for the soundness check"),
    ),
)
def corpus_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    directory = Path(args.directory) if args.directory else get_corpus_root()
    entries = load_corpus(directory)
    if not entries:
        return CommandResult.error("corpus", f"no proof files in {directory}")
    records = []
    lines = []
    for entry in entries:
        report = check_entry(entry, budget=settings.budget)
        records.append(
            ProofRecord(
                name=report.name,
                accepted=report.verdict.accepted,
                reason=report.verdict.reason.value if report.verdict.reason else None,
                step=report.verdict.step if not report.verdict.accepted else report.unsound_step,
                sound=report.unsound_step is None,
                rename_preserved=report.rename_preserved,
            )
        )
        lines.append(f"{'ok ' if report.ok else 'BAD'} {report.name}: {report.verdict}")
    failed = [r.name for r in records if not (r.accepted and r.sound and r.rename_preserved)]
    return CommandResult(
        command="corpus",
        verdict=ReportVerdict.REJECTED if failed else ReportVerdict.ACCEPTED,
        summary=f"{len(records) - len(failed)}/{len(records)} proofs pass",
        details={"directory": str(directory), "failed": failed},
        lines=lines,
        proofs=records,
    )
