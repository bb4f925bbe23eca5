"""
Model-condition harness: which truth and structure conditions a model fails
on a concrete instance. Empty lists mean the instance is fine.

Truth conditions are compared through ``|m|``, the value an element has by
its membership in TRUE and FALSE.
"""

from __future__ import annotations

from typing import Sequence

from ..manyvalued import eval_param, join_all, meet_all
from ..substitution import Substitution, syntactic_reference
from ..syntax import (
    And,
    Exists,
    FalseOp,
    Forall,
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
)
from .gamma import eval_gamma, verify_substitution_property
from .model import Assignment, ExtensionalModel


def truth_condition_violations(
    model: ExtensionalModel,
    phi: Formula,
    psi: Formula,
    gamma: Assignment,
    param: PropFormula | None = None,
    var: Variable = Variable(0),
) -> list[str]:
    """Names of the conditions (i)–(x) that fail for φ, ψ, γ (and parameter formula *param*)."""
    def g(f: Formula, assignment: Assignment = gamma):
        return eval_gamma(model, f, assignment)

    size = model.classify

    true_set, false_set = model.true_set, model.false_set
    only_false = false_set - true_set
    g_phi, g_psi = g(phi), g(psi)
    instances = [g(phi, gamma.updated(var, m)) for m in model.universe]

    checks = {
        "(i)": size(g(TruthOp(phi))) == size(g_phi),
        "(ii)": (g(FalseOp(phi)) in true_set) == (g_phi in false_set),
        "(iii)": (g(FalseOp(phi)) in false_set) == (g_phi in true_set),
        "(iv)": size(g(Or(phi, psi))) == size(g_phi).join(size(g_psi)),
        "(v)": size(g(And(phi, psi))) == size(g_phi).meet(size(g_psi)),
        "(vi)": (g(Identity(phi, psi)) in only_false) == (g_phi != g_psi),
        "(vii)": (g(Reference(phi, psi)) in only_false) == (not model.refers(g_phi, g_psi)),
        "(viii)": size(g(Exists(var, phi))) == join_all(size(m) for m in instances),
        "(ix)": size(g(Forall(var, phi))) == meet_all(size(m) for m in instances),
    }
    if param is not None:
        denotation = g(ParamExpr(param))
        told_true = eval_param(model.theory, param).designated
        told_false = eval_param(model.theory, PropNot(param)).designated
        checks["(x)"] = (denotation in true_set) == told_true and (denotation in false_set) == told_false
    return [name for name, ok in checks.items() if not ok]


def structure_condition_violations(
    model: ExtensionalModel,
    phi: Formula,
    psi: Formula,
    sigma: Substitution,
    gamma: Assignment,
    other: Assignment,
    extra_vars: Sequence[Variable] = (),
) -> list[str]:
    """Names of EP, CP, SP, RP that fail on this instance.

    CP is only tested when γ and *other* agree on the free variables of φ;
    SP needs σ to move variables only.
    """
    out = []
    watched = set(free_vars(phi)) | set(extra_vars)
    if any(eval_gamma(model, x, gamma) != gamma(x) for x in sorted(watched, key=lambda v: v.index)):
        out.append("EP")
    if gamma.agrees_with(other, free_vars(phi)) and eval_gamma(model, phi, gamma) != eval_gamma(model, phi, other):
        out.append("CP")
    if not verify_substitution_property(model, phi, sigma, gamma):
        out.append("SP")
    if syntactic_reference(phi, psi) and not model.refers(eval_gamma(model, phi, gamma), eval_gamma(model, psi, gamma)):
        out.append("RP")
    return out
