"""
Parameter-logic commands

``entail``: consequence in one flavor with the first countervaluation.
``classify``: theory class of a valuation, checked against its members.
``closure-member``: membership in an intersection of complete theories.
"""

from __future__ import annotations

import argparse
import logging

from etlogic.cli.app import CommandRouter, arg
from etlogic.core.config import ToolkitSettings
from etlogic.models.reports import CommandResult, ReportVerdict
from etlogic.services.manyvalued import (
    Flavor,
    classification_check,
    desk_universe,
    entails,
    intersection_membership,
    parse_valuation,
)
from etlogic.services.syntax import parse_propositional, render_propositional

logger = logging.getLogger(__name__)

router = CommandRouter("propositional")

FLAVOR_CHOICES = [f.value for f in Flavor]


@router.command(
    "entail",
    help="does a set of parameter formulas entail another in a flavor?",
    arguments=(
        arg("--flavor", choices=FLAVOR_CHOICES, default=Flavor.B4.value, help="logic flavor (default b4)"),
        arg("--premise", action="append", default=[], help="premise, e.g. '{p0 & ~p0}' (repeatable)"),
        arg("--concl", required=True, help="conclusion"),
    ),
)
def entail_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    flavor = Flavor.parse(args.flavor)
    premises = [parse_propositional(text) for text in args.premise]
    conclusion = parse_propositional(args.concl)
    result = entails(flavor, premises, conclusion)
    shown = f"{', '.join(map(render_propositional, premises)) or '∅'} ⊨[{flavor.value}] {render_propositional(conclusion)}"
    if result.holds:
        return CommandResult(
            command="entail",
            verdict=ReportVerdict.HOLDS,
            summary=f"{shown} holds",
            details={"flavor": flavor.value, "holds": True},
        )
    countermodel = str(result.countermodel)
    return CommandResult(
        command="entail",
        verdict=ReportVerdict.REFUTED,
        summary=f"{shown} fails",
        details={"flavor": flavor.value, "holds": False, "countermodel": countermodel},
        lines=[f"countermodel: {countermodel}"],
    )


@router.command(
    "classify",
    help="classify the complete theory of a valuation",
    arguments=(
        arg("--valuation", required=True, help="valuation, e.g. 'p0=B p1=N'"),
        arg("--universe-depth", type=int, default=None, help="depth of the formula universe for the check"),
    ),
)
def classify_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    v = parse_valuation(args.valuation)
    atoms = v.atoms or (0,)
    universe = desk_universe(atoms, settings.universe_depth)
    check = classification_check(v, universe)
    theory_class = check.theory_class
    verdict = ReportVerdict.OK if check.consistent else ReportVerdict.REFUTED
    return CommandResult(
        command="classify",
        verdict=verdict,
        summary=f"{v}: {theory_class.value}",
        details={
            "valuation": str(v),
            "class": theory_class.value,
            "least_flavor": theory_class.least_flavor.value,
            "universe_size": len(universe),
            "gap_free_agrees": check.gap_free_agrees,
            "glut_free_agrees": check.glut_free_agrees,
        },
        lines=[
            f"least flavor: {theory_class.least_flavor.value}",
            f"checked against {len(universe)} formulas of depth ≤ {settings.universe_depth}: "
            f"{'consistent' if check.consistent else 'INCONSISTENT'}",
        ],
    )


@router.command(
    "closure-member",
    help="is a formula in the intersection of the theories of some valuations?",
    arguments=(
        arg("--valuation", action="append", required=True, help="member valuation (repeatable)"),
        arg("--formula", required=True, help="parameter formula"),
    ),
)
def closure_member_command(args: argparse.Namespace, settings: ToolkitSettings) -> CommandResult:
    family = [parse_valuation(text) for text in args.valuation]
    a = parse_propositional(args.formula)
    member = intersection_membership(family, a)
    return CommandResult(
        command="closure-member",
        verdict=ReportVerdict.HOLDS if member else ReportVerdict.REFUTED,
        summary=f"{render_propositional(a)} is {'' if member else 'not '}in the intersection of {len(family)} theories",
        details={"member": member, "family": [str(v) for v in family]},
    )
