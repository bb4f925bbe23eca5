"""
Substitution — capture-avoiding substitution, composition, alpha-congruence
and the syntactical reference relation ≺.
"""

from .alpha import alpha_congruent
from .reference import syntactic_reference
from .substitution import (
    EPSILON,
    Substitution,
    SubstitutionError,
    apply_substitution,
    compose,
    forced_variable,
    least_variable_not_in,
    parse_substitution,
    render_substitution,
    substitute,
)

__all__ = [
    "EPSILON",
    "Substitution",
    "SubstitutionError",
    "alpha_congruent",
    "apply_substitution",
    "compose",
    "forced_variable",
    "least_variable_not_in",
    "parse_substitution",
    "render_substitution",
    "substitute",
    "syntactic_reference",
]
