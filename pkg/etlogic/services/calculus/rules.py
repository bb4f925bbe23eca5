"""
Rule instances — one checker per rule of the sequent calculus.

Each checker gets the step and its premise steps (already resolved, arity and
parameter keys already validated) and returns ``None`` for a correct instance
or a ``RuleFailure``. Unless a rule is listed in ``OWN_CONTEXT_RULES`` the
premises must carry exactly the step's context; that is checked by the
caller before the rule checker runs.

Substituted formulas are compared with ``==``: ``apply_substitution`` puts
binders in canonical form, so the expected formula is unique.
"""

from __future__ import annotations

import logging
from typing import Callable, Iterable, NamedTuple

from ..manyvalued import Flavor, entails
from ..substitution import alpha_congruent, substitute, syntactic_reference
from ..syntax import (
    Exists,
    FalseOp,
    Formula,
    Identity,
    Or,
    ParamExpr,
    PropFormula,
    PropNot,
    Reference,
    TruthOp,
    Variable,
    free_vars,
    render_formula,
)
from .derivation import DerivationStep, ReasonCode, Rule

logger = logging.getLogger(__name__)


class RuleFailure(NamedTuple):
    reason: ReasonCode
    message: str


RuleChecker = Callable[[DerivationStep, tuple[DerivationStep, ...]], "RuleFailure | None"]

RULE_CHECKERS: dict[Rule, RuleChecker] = {}

# Rules whose premises may (or must) carry a context different from the step's.
OWN_CONTEXT_RULES = frozenset({Rule.R2, Rule.R4, Rule.R7, Rule.R9})


def rule(which: Rule):
    def register(fn: RuleChecker) -> RuleChecker:
        RULE_CHECKERS[which] = fn
        return fn
    return register


def _side(message: str) -> RuleFailure:
    return RuleFailure(ReasonCode.SIDE_CONDITION, message)


def _show(f: Formula) -> str:
    return render_formula(f)


def _show_set(formulas: Iterable[Formula]) -> str:
    return "{" + "; ".join(sorted(_show(f) for f in formulas)) + "}"


# ---------------------------------------------------------------------------
# Base-logic oracle
# ---------------------------------------------------------------------------

def derive_base(context: Iterable[Formula], a: PropFormula | ParamExpr) -> bool:
    """Is *a* classically entailed by the parameter formulas in *context*?

    Context members that are not embedded parameter formulas are ignored.
    """
    target = a.expr if isinstance(a, ParamExpr) else a
    premises = [f.expr for f in context if isinstance(f, ParamExpr)]
    return entails(Flavor.CLASSICAL, premises, target).holds


# ---------------------------------------------------------------------------
# Structural rules
# ---------------------------------------------------------------------------

@rule(Rule.R1)
def _r1(step, premises):
    if step.conclusion not in step.context:
        return _side(f"{_show(step.conclusion)} is not in the context")
    return None


@rule(Rule.R2)
def _r2(step, premises):
    (p,) = premises
    if p.conclusion != step.conclusion:
        return _side("weakening must keep the conclusion")
    if not p.context <= step.context:
        missing = p.context - step.context
        return RuleFailure(ReasonCode.CONTEXT_MISMATCH, f"premise context has {_show_set(missing)} not in the step context")
    return None


@rule(Rule.R3)
def _r3(step, premises):
    first, second = premises
    if second.conclusion != FalseOp(first.conclusion):
        return _side(
            f"second premise must conclude ({_show(first.conclusion)}) :false, got {_show(second.conclusion)}"
        )
    return None


@rule(Rule.R4)
def _r4(step, premises):
    first, second = premises
    if not first.conclusion == second.conclusion == step.conclusion:
        return _side("both premises must conclude the step's conclusion")
    for phi in first.context:
        if first.context == step.context | {phi} and second.context == step.context | {FalseOp(phi)}:
            return None
    return RuleFailure(
        ReasonCode.CONTEXT_MISMATCH,
        "premise contexts are not Δ ∪ {φ} and Δ ∪ {φ :false} for the step context Δ",
    )


# ---------------------------------------------------------------------------
# Disjunction
# ---------------------------------------------------------------------------

@rule(Rule.R5)
def _r5(step, premises):
    (p,) = premises
    if not (isinstance(step.conclusion, Or) and step.conclusion.left == p.conclusion):
        return _side(f"conclusion must be {_show(p.conclusion)} \\/ ψ")
    return None


@rule(Rule.R6)
def _r6(step, premises):
    (p,) = premises
    if not (isinstance(step.conclusion, Or) and step.conclusion.right == p.conclusion):
        return _side(f"conclusion must be ψ \\/ {_show(p.conclusion)}")
    return None


@rule(Rule.R7)
def _r7(step, premises):
    first, second = premises
    if not first.conclusion == second.conclusion == step.conclusion:
        return _side("both premises must conclude the step's conclusion")
    disjunctions = [d for d in step.context if isinstance(d, Or)]
    if not disjunctions:
        return _side("the step context has no disjunction to eliminate")
    for d in disjunctions:
        # Δ may or may not keep the disjunction itself
        for delta in (step.context - {d}, step.context):
            if first.context == delta | {d.left} and second.context == delta | {d.right}:
                return None
    return RuleFailure(ReasonCode.CONTEXT_MISMATCH, "premise contexts do not split a context disjunction")


# ---------------------------------------------------------------------------
# Quantifiers
# ---------------------------------------------------------------------------

def _binder_conditions(x: Variable, z: Variable, template: Formula) -> RuleFailure | None:
    free = free_vars(template)
    if x not in free:
        return _side(f"{x} is not free in the template {_show(template)}")
    if z in free - {x}:
        return _side(f"{z} is free in the template {_show(template)}")
    return None


@rule(Rule.R8)
def _r8(step, premises):
    (p,) = premises
    params = step.param_map
    x, z, template, witness = params["x"], params["z"], params["template"], params["witness"]
    failure = _binder_conditions(x, z, template)
    if failure:
        return failure
    instance = substitute(template, x, witness)
    if p.conclusion != instance:
        return _side(f"premise must conclude {_show(instance)}, got {_show(p.conclusion)}")
    expected = Exists(z, substitute(template, x, z))
    if step.conclusion != expected:
        return _side(f"conclusion must be {_show(expected)}, got {_show(step.conclusion)}")
    return None


@rule(Rule.R9)
def _r9(step, premises):
    (p,) = premises
    params = step.param_map
    x, z, y, template = params["x"], params["z"], params["y"], params["template"]
    failure = _binder_conditions(x, z, template)
    if failure:
        return failure
    if p.conclusion != step.conclusion:
        return _side("∃-elimination must keep the conclusion")
    existential = Exists(z, substitute(template, x, z))
    if existential not in step.context:
        return _side(f"{_show(existential)} is not in the step context")
    instance = substitute(template, x, y)
    for delta in (step.context - {existential}, step.context):
        if p.context == delta | {instance}:
            break
    else:
        return RuleFailure(
            ReasonCode.CONTEXT_MISMATCH,
            f"premise context must be Δ ∪ {{{_show(instance)}}}",
        )
    occupied: set[Variable] = set(free_vars(Exists(x, template))) | free_vars(step.conclusion)
    for f in delta:
        occupied |= free_vars(f)
    if y in occupied:
        return RuleFailure(
            ReasonCode.EIGENVARIABLE_VIOLATION,
            f"eigenvariable {y} occurs free in the context, the existential or the conclusion",
        )
    return None


# ---------------------------------------------------------------------------
# Identity and reference
# ---------------------------------------------------------------------------

@rule(Rule.R10)
def _r10(step, premises):
    (p,) = premises
    if not isinstance(p.conclusion, Identity):
        return _side(f"premise must be an identity, got {_show(p.conclusion)}")
    params = step.param_map
    x, template = params["x"], params["template"]
    expected = Identity(substitute(template, x, p.conclusion.left), substitute(template, x, p.conclusion.right))
    if step.conclusion != expected:
        return _side(f"conclusion must be {_show(expected)}, got {_show(step.conclusion)}")
    return None


@rule(Rule.R11)
def _r11(step, premises):
    (p,) = premises
    if not isinstance(p.conclusion, Identity):
        return _side(f"premise must be an identity, got {_show(p.conclusion)}")
    expected = Or(FalseOp(p.conclusion.left), p.conclusion.right)
    if step.conclusion != expected:
        return _side(f"conclusion must be {_show(expected)}, got {_show(step.conclusion)}")
    return None


@rule(Rule.R12)
def _r12(step, premises):
    f = step.conclusion
    if not isinstance(f, Identity):
        return _side(f"conclusion must be an identity, got {_show(f)}")
    if not alpha_congruent(f.left, f.right):
        return _side(f"{_show(f.left)} and {_show(f.right)} are not alpha-congruent")
    return None


@rule(Rule.R13)
def _r13(step, premises):
    f = step.conclusion
    if not isinstance(f, Reference):
        return _side(f"conclusion must be a reference, got {_show(f)}")
    if not syntactic_reference(f.left, f.right):
        return _side(f"{_show(f.left)} does not syntactically refer into {_show(f.right)}")
    return None


@rule(Rule.R14)
def _r14(step, premises):
    first, second = premises
    a, b, f = first.conclusion, second.conclusion, step.conclusion
    if not (isinstance(a, Reference) and isinstance(b, Reference) and isinstance(f, Reference)):
        return _side("premises and conclusion must all be references")
    if a.right != b.left:
        return _side(f"middle formulas differ: {_show(a.right)} vs {_show(b.left)}")
    if f != Reference(a.left, b.right):
        return _side(f"conclusion must be {_show(Reference(a.left, b.right))}")
    return None


# ---------------------------------------------------------------------------
# Truth operator
# ---------------------------------------------------------------------------

@rule(Rule.R15)
def _r15(step, premises):
    (p,) = premises
    if step.conclusion != TruthOp(p.conclusion):
        return _side(f"conclusion must be ({_show(p.conclusion)}) :true")
    return None


@rule(Rule.R16)
def _r16(step, premises):
    (p,) = premises
    if p.conclusion != TruthOp(step.conclusion):
        return _side(f"premise must be ({_show(step.conclusion)}) :true")
    return None


# ---------------------------------------------------------------------------
# Bridge rules and the base oracle
# ---------------------------------------------------------------------------

def _not_param(f: Formula) -> RuleFailure:
    return RuleFailure(ReasonCode.NOT_PARAM_FORMULA, f"{_show(f)} is not a parameter formula")


@rule(Rule.R17)
def _r17(step, premises):
    (p,) = premises
    if not isinstance(p.conclusion, ParamExpr):
        return _not_param(p.conclusion)
    if not isinstance(step.conclusion, FalseOp):
        return _side(f"conclusion must be a :false application, got {_show(step.conclusion)}")
    if not isinstance(step.conclusion.body, ParamExpr):
        return _not_param(step.conclusion.body)
    if p.conclusion.expr != PropNot(step.conclusion.body.expr):
        return _side(f"premise must be the negation of {_show(step.conclusion.body)}")
    return None


@rule(Rule.R18)
def _r18(step, premises):
    (p,) = premises
    if not isinstance(p.conclusion, FalseOp):
        return _side(f"premise must be a :false application, got {_show(p.conclusion)}")
    if not isinstance(p.conclusion.body, ParamExpr):
        return _not_param(p.conclusion.body)
    if not isinstance(step.conclusion, ParamExpr):
        return _not_param(step.conclusion)
    if step.conclusion.expr != PropNot(p.conclusion.body.expr):
        return _side(f"conclusion must be the negation of {_show(p.conclusion.body)}")
    return None


@rule(Rule.RK)
def _rk(step, premises):
    if not isinstance(step.conclusion, ParamExpr):
        return _not_param(step.conclusion)
    if not derive_base(step.context, step.conclusion):
        return RuleFailure(
            ReasonCode.BASE_ORACLE_REFUTED,
            f"the parameter context does not classically entail {_show(step.conclusion)}",
        )
    return None
