"""
Constant renaming — replace a constant by a fresh variable throughout a
derivation, keeping every step an instance of the same rule.

Only formulas that mention the constant are rewritten; the others stay
structurally identical. Rewritten formulas come out of ``apply_substitution``
with canonical binders, so the ∃-binder of an R8 conclusion or R9 context
formula may change name: the ``z`` parameter of those steps is read back
from the rewritten existential.
"""

from __future__ import annotations

import logging

from ..substitution import substitute
from ..syntax import Constant, Exists, Formula, Variable, constants, render_formula, variables
from .derivation import Derivation, DerivationStep, Rule, Sequent

logger = logging.getLogger(__name__)


class RenameError(ValueError):
    """The target variable already occurs in the derivation."""


def rename_constant(d: Derivation, name: str, target: Variable) -> Derivation:
    """``d`` with ``$name`` replaced by *target* in every sequent and parameter.

    Raises:
        RenameError: *target* occurs, free or bound, somewhere in *d*.
    """
    name = name.lstrip("$")
    for f in d.formulas:
        if target in variables(f):
            raise RenameError(f"{target} already occurs in the derivation (in {render_formula(f)})")

    constant = Constant(name)

    def rename(f: Formula) -> Formula:
        return substitute(f, constant, target) if constant in constants(f) else f

    steps = tuple(_rename_step(step, rename) for step in d.steps)
    logger.debug("renamed $%s to %s in %d steps", name, target, len(steps))
    return Derivation(steps, d.final)


def _rename_step(step: DerivationStep, rename) -> DerivationStep:
    params = {key: rename(value) for key, value in step.params}
    sequent = Sequent(frozenset(rename(f) for f in step.context), rename(step.conclusion))
    if step.rule in (Rule.R8.value, Rule.R9.value):
        old = step.param_map
        x, z, template = old.get("x"), old.get("z"), old.get("template")
        if isinstance(x, Variable) and isinstance(z, Variable) and template is not None:
            renamed = rename(Exists(z, substitute(template, x, z)))
            if isinstance(renamed, Exists):
                params["z"] = renamed.var
    return step.with_sequent(sequent, params)
