"""
Semantics — extensional ∈T models, the Γ function, satisfaction and
consequence over the enumerable model family.
"""

from .conditions import structure_condition_violations, truth_condition_violations
from .consequence import (
    DEFAULT_BUDGET,
    ConsequenceResult,
    ConsequenceStatus,
    Counterexample,
    Signature,
    extensional_consequence,
    family_flavors,
    interpretation_count,
    is_satisfiable,
    iter_interpretations,
)
from .gamma import (
    SubstitutionDomainError,
    eval_gamma,
    satisfies,
    substituted_assignment,
    verify_substitution_property,
)
from .model import (
    NON_DEGENERATE_FLAVORS,
    UNIT_FLAVORS,
    Assignment,
    ExtensionalModel,
    ModelBuildError,
    ModelEvaluationError,
    ModelFlavor,
    build_model,
    parse_assignment,
    parse_model,
    render_assignment,
    render_model,
)

__all__ = [
    "DEFAULT_BUDGET",
    "NON_DEGENERATE_FLAVORS",
    "UNIT_FLAVORS",
    "Assignment",
    "ConsequenceResult",
    "ConsequenceStatus",
    "Counterexample",
    "ExtensionalModel",
    "ModelBuildError",
    "ModelEvaluationError",
    "ModelFlavor",
    "Signature",
    "SubstitutionDomainError",
    "build_model",
    "eval_gamma",
    "extensional_consequence",
    "family_flavors",
    "interpretation_count",
    "is_satisfiable",
    "iter_interpretations",
    "parse_assignment",
    "parse_model",
    "render_assignment",
    "render_model",
    "satisfies",
    "structure_condition_violations",
    "substituted_assignment",
    "truth_condition_violations",
    "verify_substitution_property",
]
