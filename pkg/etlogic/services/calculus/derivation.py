"""
Derivation data — sequents, steps, rules, reason codes and verdicts.

A derivation is a list of numbered steps; each step names a rule, the ids of
earlier steps it uses as premises, its sequent ``Δ ⊢ φ`` and the explicit
parameters its rule needs (templates, witnesses, eigenvariables). The checker
verifies instances, it never searches for them.

--- WHERE TO CHANGE IF A RULE IS ADDED ---
``Rule`` (arity and parameter keys here), the checker function in
``rules.py`` and a golden proof under ``proofs/``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Optional

from pydantic import BaseModel, ConfigDict

from ..syntax import Formula


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class Rule(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    R6 = "R6"
    R7 = "R7"
    R8 = "R8"
    R9 = "R9"
    R10 = "R10"
    R11 = "R11"
    R12 = "R12"
    R13 = "R13"
    R14 = "R14"
    R15 = "R15"
    R16 = "R16"
    R17 = "R17"
    R18 = "R18"
    RK = "RK"

    @property
    def arity(self) -> int:
        return _ARITY.get(self, 1)

    @property
    def param_keys(self) -> frozenset[str]:
        return _PARAM_KEYS.get(self, frozenset())


_ARITY: dict[Rule, int] = {
    Rule.R1: 0,
    Rule.R12: 0,
    Rule.R13: 0,
    Rule.RK: 0,
    Rule.R3: 2,
    Rule.R4: 2,
    Rule.R7: 2,
    Rule.R14: 2,
}

_PARAM_KEYS: dict[Rule, frozenset[str]] = {
    Rule.R8: frozenset({"x", "z", "template", "witness"}),
    Rule.R9: frozenset({"x", "z", "y", "template"}),
    Rule.R10: frozenset({"x", "template"}),
}

VARIABLE_PARAMS = frozenset({"x", "y", "z"})


class ReasonCode(str, Enum):
    """Why a step was rejected."""

    UNKNOWN_RULE = "UNKNOWN_RULE"
    BAD_PREMISE_REF = "BAD_PREMISE_REF"
    CONTEXT_MISMATCH = "CONTEXT_MISMATCH"
    SIDE_CONDITION = "SIDE_CONDITION"
    EIGENVARIABLE_VIOLATION = "EIGENVARIABLE_VIOLATION"
    NOT_PARAM_FORMULA = "NOT_PARAM_FORMULA"
    MALFORMED_PARAMS = "MALFORMED_PARAMS"
    BASE_ORACLE_REFUTED = "BASE_ORACLE_REFUTED"


# ---------------------------------------------------------------------------
# Sequents and steps
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Sequent:
    """``Δ ⊢ φ``; the context is a set, so listing order and repeats do not matter."""

    context: frozenset[Formula]
    conclusion: Formula

    @classmethod
    def of(cls, context: Iterable[Formula], conclusion: Formula) -> Sequent:
        return cls(frozenset(context), conclusion)


@dataclass(frozen=True, slots=True)
class DerivationStep:
    id: int
    rule: str
    premises: tuple[int, ...]
    sequent: Sequent
    params: tuple[tuple[str, Formula], ...] = ()
    line: Optional[int] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(self.premises))
        params = tuple(self.params)
        table = dict(params)
        if len(table) != len(params):
            repeated = sorted(key for key, n in Counter(key for key, _ in params).items() if n > 1)
            raise ValueError(f"step {self.id}: repeated parameter key(s) {', '.join(repeated)}")
        object.__setattr__(self, "params", tuple(sorted(table.items())))

    @property
    def context(self) -> frozenset[Formula]:
        return self.sequent.context

    @property
    def conclusion(self) -> Formula:
        return self.sequent.conclusion

    @property
    def param_map(self) -> dict[str, Formula]:
        return dict(self.params)

    def with_sequent(self, sequent: Sequent, params: Mapping[str, Formula] | None = None) -> DerivationStep:
        return DerivationStep(
            self.id,
            self.rule,
            self.premises,
            sequent,
            tuple((params if params is not None else self.param_map).items()),
            self.line,
        )


@dataclass(frozen=True, slots=True)
class Derivation:
    steps: tuple[DerivationStep, ...]
    final: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def final_id(self) -> Optional[int]:
        if self.final is not None:
            return self.final
        return self.steps[-1].id if self.steps else None

    def step(self, step_id: int) -> DerivationStep | None:
        return next((s for s in self.steps if s.id == step_id), None)

    @property
    def final_step(self) -> DerivationStep | None:
        final_id = self.final_id
        return None if final_id is None else self.step(final_id)

    @property
    def formulas(self) -> Iterable[Formula]:
        """Every formula in every sequent and parameter."""
        for s in self.steps:
            yield from s.context
            yield s.conclusion
            for _, value in s.params:
                yield value


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------

class Verdict(BaseModel):
    """Accepted, or Rejected at the earliest failing step."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    accepted: bool
    step: Optional[int] = None
    reason: Optional[ReasonCode] = None
    message: str = ""

    @classmethod
    def accept(cls) -> Verdict:
        return cls(accepted=True)

    @classmethod
    def reject(cls, step: int | None, reason: ReasonCode, message: str) -> Verdict:
        return cls(accepted=False, step=step, reason=reason, message=message)

    def __str__(self) -> str:
        if self.accepted:
            return "Accepted"
        return f"Rejected(step {self.step}, {self.reason.value}): {self.message}"
