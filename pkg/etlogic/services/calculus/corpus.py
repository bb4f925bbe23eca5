"""
Golden corpus — loading ``*.proof`` files and the checks run over each one:
acceptance, the soundness smoke test against classical extensional models,
and acceptance after renaming each constant to a fresh variable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from ..semantics import (
    DEFAULT_BUDGET,
    ConsequenceStatus,
    Counterexample,
    ModelFlavor,
    extensional_consequence,
)
from ..substitution import least_variable_not_in
from ..syntax import constants, variables
from .checker import check_derivation
from .derivation import Derivation, Verdict
from .proof_format import load_proof
from .rename import rename_constant

logger = logging.getLogger(__name__)

PROOF_SUFFIX = ".proof"


class SoundnessBudgetError(ValueError):
    """A step's sequent has more classical interpretations than the budget allows."""


@dataclass(frozen=True, slots=True)
class CorpusEntry:
    name: str
    path: Path
    derivation: Derivation


@dataclass(frozen=True, slots=True)
class CorpusReport:
    name: str
    verdict: Verdict
    unsound_step: int | None = None
    rename_preserved: bool = True

    @property
    def ok(self) -> bool:
        return self.verdict.accepted and self.unsound_step is None and self.rename_preserved


def load_corpus(directory: str | Path) -> list[CorpusEntry]:
    """Every proof file in *directory*, sorted by file name."""
    directory = Path(directory)
    entries = [
        CorpusEntry(path.stem, path, load_proof(path))
        for path in sorted(directory.glob(f"*{PROOF_SUFFIX}"))
    ]
    logger.info("loaded %d proofs from %s", len(entries), directory)
    return entries


def soundness_counterexample(
    d: Derivation,
    *,
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, Counterexample] | None:
    """First step whose context holds but conclusion fails in a classical extensional model.

    Raises:
        SoundnessBudgetError: some step needs more interpretations than *budget*.
    """
    for step in d.steps:
        result = extensional_consequence(step.context, step.conclusion, (ModelFlavor.CLASSICAL,), budget=budget)
        if result.status is ConsequenceStatus.BUDGET_EXCEEDED:
            raise SoundnessBudgetError(
                f"step {step.id} needs {result.required} interpretations, budget {budget}"
            )
        if result.status is ConsequenceStatus.COUNTEREXAMPLE:
            return step.id, result.counter
    return None


def renaming_preserves_acceptance(d: Derivation) -> bool:
    """Rename every constant of an accepted *d* to a fresh variable and re-check."""
    used = set()
    names = set()
    for f in d.formulas:
        used |= variables(f)
        names |= {c.name for c in constants(f)}
    fresh = least_variable_not_in(used)
    for name in sorted(names):
        if not check_derivation(rename_constant(d, name, fresh)).accepted:
            logger.info("renaming $%s to %s broke the derivation", name, fresh)
            return False
    return True


def check_entry(entry: CorpusEntry, *, budget: int = DEFAULT_BUDGET) -> CorpusReport:
    verdict = check_derivation(entry.derivation)
    if not verdict.accepted:
        return CorpusReport(entry.name, verdict)
    found = soundness_counterexample(entry.derivation, budget=budget)
    return CorpusReport(
        entry.name,
        verdict,
        unsound_step=found[0] if found else None,
        rename_preserved=renaming_preserves_acceptance(entry.derivation),
    )
