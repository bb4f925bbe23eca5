"""
Calculus — the sequent-calculus proof checker, the base-logic oracle rule,
constant renaming and the golden derivation corpus.
"""

from .checker import check_derivation
from .corpus import (
    CorpusEntry,
    CorpusReport,
    SoundnessBudgetError,
    check_entry,
    load_corpus,
    renaming_preserves_acceptance,
    soundness_counterexample,
)
from .derivation import Derivation, DerivationStep, ReasonCode, Rule, Sequent, Verdict
from .proof_format import ProofFormatError, load_proof, parse_proof, render_proof, render_step
from .rename import RenameError, rename_constant
from .rules import derive_base

__all__ = [
    "CorpusEntry",
    "CorpusReport",
    "Derivation",
    "DerivationStep",
    "ProofFormatError",
    "ReasonCode",
    "RenameError",
    "Rule",
    "Sequent",
    "SoundnessBudgetError",
    "Verdict",
    "check_derivation",
    "check_entry",
    "derive_base",
    "load_corpus",
    "load_proof",
    "parse_proof",
    "render_proof",
    "render_step",
    "rename_constant",
    "renaming_preserves_acceptance",
    "soundness_counterexample",
]
