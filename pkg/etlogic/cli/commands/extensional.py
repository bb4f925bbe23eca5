"""
Extensional-model commands

``eval``, ``satisfies`` and ``consequence`` over the finite ∈T models.
"""

from __future__ import annotations

import argparse
import logging

from etlogic.cli.app import CommandRouter, arg, intended_warnings
from etlogic.core.config import ToolkitSettings
from etlogic.models.reports import CommandResult, ReportVerdict
from etlogic.services.semantics import (
    ConsequenceStatus,
    ModelFlavor,
    eval_gamma,
    extensional_consequence,
    parse_assignment,
    parse_model,
    render_assignment,
    render_model,
    satisfies,
)
from etlogic.services.syntax import parse_formula, render_formula
from etlogic.utils.serialization import to_record

logger = logging.getLogger(__name__)

router = CommandRouter("extensional")

_MODEL_ARGS = (
    arg("--model", required=True, help="e.g. 'flavor=b4 theory{p0=B} consts{$c=B} default=N'"),
    arg("--formula", required=True, help="∈T formula"),
    arg("--assign", default="", help="variable assignment, e.g. 'v0=1 *=N'"),
)


def _interpretation(args: argparse.Namespace):
    model, default = parse_model(args.model)
    gamma = parse_assignment(args.assign, default if default is not None else model.universe[0])
    return model, gamma


@router.command("eval", help="Γ-value of a formula in an extensional model", arguments=_MODEL_ARGS)
def eval_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    model, gamma = _interpretation(args)
    f = parse_formula(args.formula)
    value = eval_gamma(model, f, gamma)
    satisfied = value in model.true_set
    return CommandResult(
        command="eval",
        verdict=ReportVerdict.OK,
        summary=f"Γ({render_formula(f)}) = {value}",
        details={
            "value": value.value,
            "satisfied": satisfied,
            "model": render_model(model),
            "assignment": render_assignment(gamma),
        },
        lines=[f"value: {value}", f"satisfied: {'yes' if satisfied else 'no'}"],
        warnings=intended_warnings(f),
    )


@router.command("satisfies", help="does (M, γ) satisfy a formula?", arguments=_MODEL_ARGS)
def satisfies_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    model, gamma = _interpretation(args)
    f = parse_formula(args.formula)
    holds = satisfies(model, gamma, f)
    return CommandResult(
        command="satisfies",
        verdict=ReportVerdict.HOLDS if holds else ReportVerdict.REFUTED,
        summary=f"{'satisfied' if holds else 'not satisfied'}: {render_formula(f)}",
        details={"satisfied": holds, "value": eval_gamma(model, f, gamma).value},
        warnings=intended_warnings(f),
    )


@router.command(
    "consequence",
    help="extensional consequence over the enumerable model family",
    arguments=(
        arg("--premise", action="append", default=[], help="premise formula (repeatable)"),
        arg("--concl", required=True, help="conclusion formula"),
        arg(
            "--flavor",
            dest="flavors",
            action="append",
            choices=[f.value for f in ModelFlavor],
            help="model flavor to include (repeatable; default all four non-degenerate)",
        ),
        arg("--include-unit-models", action="store_true", help="also scan the two one-element models"),
        arg("--budget", type=int, default=None, help="maximum number of interpretations to scan"),
    ),
)
def consequence_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    premises = [parse_formula(text) for text in args.premise]
    conclusion = parse_formula(args.concl)
    result = extensional_consequence(
        premises,
        conclusion,
        settings.flavors,
        include_unit_models=settings.include_unit_models,
        budget=settings.budget,
    )
    warnings = intended_warnings(*premises, conclusion)
    details = {
        "status": result.status.value,
        "examined": result.examined,
        "required": result.required,
        "flavors": [f.value for f in settings.flavors],
    }
    if result.status is ConsequenceStatus.BUDGET_EXCEEDED:
        message = f"{result.required} interpretations needed, budget is {settings.budget}"
        return CommandResult(
            command="consequence",
            verdict=ReportVerdict.BUDGET_EXCEEDED,
            summary=message,
            details=details,
            warnings=[*warnings, message],
        )
    if result.status is ConsequenceStatus.VALID:
        return CommandResult(
            command="consequence",
            verdict=ReportVerdict.HOLDS,
            summary=f"valid over the family ({result.examined} interpretations)",
            details=details,
            warnings=warnings,
        )
    counter = result.counter
    details["counterexample"] = to_record(counter)
    return CommandResult(
        command="consequence",
        verdict=ReportVerdict.REFUTED,
        summary=f"counterexample after {result.examined} interpretations",
        details=details,
        lines=[f"model: {render_model(counter.model)}", f"assignment: {render_assignment(counter.assignment)}"],
        warnings=warnings,
    )

