"""
Many-valued — the four-valued lattice and the parameter logic's semantics.

Valuations stand for complete B4/K3/P3/classical theories; consequence is
decided by enumerating valuations over the occurring atoms.
"""

from .consequence import (
    EntailmentResult,
    entails,
    is_classical_tautology,
    is_classically_unsatisfiable,
    occurring_atoms,
)
from .lattice import ENUMERATION_ORDER, Flavor, TheoryClass, TruthValue, join_all, meet_all
from .theories import (
    ClassificationCheck,
    EmptyTheoryFamilyError,
    classification_check,
    check_prime,
    classify_theory,
    completeness_violations,
    definition_violations,
    intersection_membership,
    theory_of,
)
from .universe import desk_universe
from .valuation import (
    Membership,
    UnknownAtomError,
    Valuation,
    ValuationError,
    enumerate_valuations,
    eval_param,
    parse_valuation,
    render_valuation,
    theory_membership,
    valuation_from_entries,
    valuation_from_theory,
)

__all__ = [
    "ENUMERATION_ORDER",
    "ClassificationCheck",
    "EmptyTheoryFamilyError",
    "EntailmentResult",
    "Flavor",
    "Membership",
    "TheoryClass",
    "TruthValue",
    "UnknownAtomError",
    "Valuation",
    "ValuationError",
    "check_prime",
    "classification_check",
    "classify_theory",
    "completeness_violations",
    "definition_violations",
    "desk_universe",
    "entails",
    "enumerate_valuations",
    "eval_param",
    "intersection_membership",
    "is_classical_tautology",
    "is_classically_unsatisfiable",
    "join_all",
    "meet_all",
    "occurring_atoms",
    "parse_valuation",
    "render_valuation",
    "theory_membership",
    "theory_of",
    "valuation_from_entries",
    "valuation_from_theory",
]
