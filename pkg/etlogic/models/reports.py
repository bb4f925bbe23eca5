"""
Report schemas — Pydantic v2 models for everything a command prints.

Defines the data contracts for:
- the verdict vocabulary shared by all commands
- the single ``CommandResult`` each invocation produces (``--json`` dumps it)
- the per-proof record of the ``corpus`` command
"""

from __future__ import annotations

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class ReportVerdict(str, Enum):
    """What a command concluded; fixes the exit code."""

    OK = "ok"
    HOLDS = "holds"
    ACCEPTED = "accepted"
    REFUTED = "refuted"
    REJECTED = "rejected"
    BUDGET_EXCEEDED = "budget_exceeded"
    ERROR = "error"


EXIT_CODES: dict[ReportVerdict, int] = {
    ReportVerdict.OK: 0,
    ReportVerdict.HOLDS: 0,
    ReportVerdict.ACCEPTED: 0,
    ReportVerdict.REFUTED: 1,
    ReportVerdict.REJECTED: 1,
    ReportVerdict.BUDGET_EXCEEDED: 2,
    ReportVerdict.ERROR: 2,
}


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------

class ProofRecord(BaseModel):
    """One golden proof as checked by ``corpus``."""

    model_config = ConfigDict(extra="forbid")

    name: str
    accepted: bool
    reason: Optional[str] = None
    step: Optional[int] = None
    sound: bool = True
    rename_preserved: bool = True


class CommandResult(BaseModel):
    """The outcome of one CLI invocation.

    ``details`` holds the machine-readable witness (countermodel, rejection
    reason, value); ``lines`` the human-readable report body.
    """

    model_config = ConfigDict(extra="forbid")

    command: str
    verdict: ReportVerdict
    exit_code: int = 0
    summary: str = ""
    details: dict[str, Any] = Field(default_factory=dict)
    lines: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)
    proofs: list[ProofRecord] = Field(default_factory=list)

    @model_validator(mode="before")
    @classmethod
    def _derive_exit_code(cls, data: Any) -> Any:
        if isinstance(data, dict) and "exit_code" not in data and "verdict" in data:
            data = {**data, "exit_code": EXIT_CODES[ReportVerdict(data["verdict"])]}
        return data

    @model_validator(mode="after")
    def _consistent(self) -> CommandResult:
        if self.exit_code != EXIT_CODES[self.verdict]:
            raise ValueError(f"exit code {self.exit_code} does not match verdict {self.verdict.value}")
        return self

    @classmethod
    def error(cls, command: str, message: str, *lines: str) -> CommandResult:
        return cls(command=command, verdict=ReportVerdict.ERROR, summary=message, lines=list(lines))
