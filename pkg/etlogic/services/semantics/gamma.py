"""
Γ — denotations of ∈T formulas in an extensional model.

    Γ(x, γ)       = γ(x)
    Γ(c)          = the value class of c
    Γ(a)          = v(a) under the theory valuation
    Γ(φ :true)    = Γ(φ)
    Γ(φ :false)   = ∼Γ(φ)
    Γ(φ ∨ ψ)      = sup,   Γ(φ ∧ ψ) = inf
    Γ(φ ≡ ψ)      = 1 if Γ(φ) = Γ(ψ) else 0
    Γ(φ < ψ)      = 1
    Γ(∃x.φ)       = sup over m ∈ M of Γ(φ, γ_x^m),   ∀ by inf

In the one-element models every formula denotes the sole element (the
identity and reference clauses would otherwise leave M).
"""

from __future__ import annotations

import logging

from ..manyvalued import TruthValue, UnknownAtomError, eval_param, join_all, meet_all
from ..substitution import Substitution, apply_substitution
from ..syntax import (
    And,
    Constant,
    Exists,
    FalseOp,
    Forall,
    Formula,
    Identity,
    Or,
    ParamExpr,
    Reference,
    TruthOp,
    Variable,
    render_formula,
)
from .model import Assignment, ExtensionalModel, ModelEvaluationError, check_assignment

logger = logging.getLogger(__name__)


class SubstitutionDomainError(ValueError):
    """The substitution property was asked for a σ that moves non-variables."""


def eval_gamma(model: ExtensionalModel, f: Formula, gamma: Assignment) -> TruthValue:
    """Γ(f, γ) in *model*.

    Raises:
        ModelEvaluationError: unknown constant or parameter atom, or γ maps
            into values outside the model's universe.
    """
    check_assignment(model, gamma)
    return _gamma(model, f, gamma)


def _gamma(model: ExtensionalModel, f: Formula, gamma: Assignment) -> TruthValue:
    match f:
        case Variable():
            return gamma(f)
        case Constant(name):
            return model.constant_value(name)
        case ParamExpr(expr):
            try:
                return eval_param(model.theory, expr)
            except UnknownAtomError as exc:
                raise ModelEvaluationError(f"{exc} (in {render_formula(f)})") from exc
        case TruthOp(body):
            return _gamma(model, body, gamma)
        case FalseOp(body):
            return _gamma(model, body, gamma).negation()
        case Or(left, right):
            return _gamma(model, left, gamma).join(_gamma(model, right, gamma))
        case And(left, right):
            return _gamma(model, left, gamma).meet(_gamma(model, right, gamma))
        case Identity(left, right):
            same = _gamma(model, left, gamma) == _gamma(model, right, gamma)
            if model.flavor.is_degenerate:
                return model.universe[0]
            return TruthValue.ONE if same else TruthValue.ZERO
        case Reference(left, right):
            _gamma(model, left, gamma)
            _gamma(model, right, gamma)
            return model.universe[0] if model.flavor.is_degenerate else TruthValue.ONE
        case Exists(var, body):
            return join_all(_gamma(model, body, gamma.updated(var, m)) for m in model.universe)
        case Forall(var, body):
            return meet_all(_gamma(model, body, gamma.updated(var, m)) for m in model.universe)
    raise TypeError(f"not an ∈T formula: {f!r}")


def satisfies(model: ExtensionalModel, gamma: Assignment, f: Formula) -> bool:
    """(M, γ) ⊨ f iff Γ(f, γ) ∈ TRUE."""
    return eval_gamma(model, f, gamma) in model.true_set


def substituted_assignment(model: ExtensionalModel, sigma: Substitution, gamma: Assignment) -> Assignment:
    """γσ : x ↦ Γ(σ(x), γ); agrees with γ off the support of σ."""
    check_assignment(model, gamma)
    result = gamma
    for atom in sigma.support:
        if not isinstance(atom, Variable):
            raise SubstitutionDomainError(
                f"γσ is only defined for substitutions on variables, σ moves {render_formula(atom)}"
            )
        result = result.updated(atom, _gamma(model, sigma(atom), gamma))
    return result


def verify_substitution_property(
    model: ExtensionalModel,
    f: Formula,
    sigma: Substitution,
    gamma: Assignment,
) -> bool:
    """Does Γ(f[σ], γ) equal Γ(f, γσ)?"""
    if not sigma.is_variable_only:
        raise SubstitutionDomainError(f"substitution {sigma} moves constants or parameter formulas")
    left = eval_gamma(model, apply_substitution(sigma, f), gamma)
    right = eval_gamma(model, f, substituted_assignment(model, sigma, gamma))
    if left != right:
        logger.info("substitution property fails for %s under %s: %s != %s", render_formula(f), sigma, left, right)
    return left == right
