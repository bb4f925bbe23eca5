"""
Proof files — the line-oriented derivation format.

    # comment
    step 1 rule=R12 premises=[] ctx={} concl=$c == $c
    step 2 rule=R8 premises=[1] ctx={} concl=ex v0 . v0 == $c param.x=v0 param.z=v0 param.template=v0 == $c param.witness=$c
    final 2

One step per line; ``#`` starts a comment; blank lines are ignored. The
optional ``final <id>`` line designates the final step (default: the last).
"""

from __future__ import annotations

import logging
from pathlib import Path

from ..syntax import Formula, FormulaSyntaxError, SourceSpan, parse_fragment, render_formula
from .derivation import Derivation, DerivationStep, Sequent

logger = logging.getLogger(__name__)


class ProofFormatError(ValueError):
    """A proof file line that does not parse, with its 1-based line number."""

    def __init__(self, message: str, *, line_no: int, span: SourceSpan | None = None, text: str = "") -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.span = span
        self.text = text

    def diagnostic(self) -> str:
        if self.span is None or not self.text:
            return str(self)
        prefix = self.text.encode("utf-8")[: self.span.start].decode("utf-8", errors="replace")
        return f"{self}\n  {self.text}\n  {' ' * len(prefix)}^"


def _parse_line(line: str, line_no: int, start: str):
    try:
        return parse_fragment(line, start)
    except FormulaSyntaxError as exc:
        raise ProofFormatError(str(exc), line_no=line_no, span=exc.span, text=line) from exc


def parse_proof(text: str) -> Derivation:
    """Parse a whole proof file.

    Raises:
        ProofFormatError: a line that is neither a step nor a ``final`` line,
            a repeated ``final`` line, or a file without steps.
    """
    steps: list[DerivationStep] = []
    final: int | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("final"):
            if final is not None:
                raise ProofFormatError("the final step is designated twice", line_no=line_no, text=line)
            final = _parse_line(line, line_no, "final_line")
            continue
        step_id, rule, premises, context, conclusion, params = _parse_line(line, line_no, "step_line")
        keys = [key for key, _ in params]
        if len(keys) != len(set(keys)):
            raise ProofFormatError(f"step {step_id} repeats a parameter", line_no=line_no, text=line)
        steps.append(
            DerivationStep(step_id, rule, premises, Sequent.of(context, conclusion), params, line=line_no)
        )
    if not steps:
        raise ProofFormatError("no steps found", line_no=max(1, len(text.splitlines())))
    logger.debug("parsed proof: %d steps, final=%s", len(steps), final)
    return Derivation(tuple(steps), final)


def load_proof(path: str | Path) -> Derivation:
    return parse_proof(Path(path).read_text(encoding="utf-8"))


def _render_context(context) -> str:
    if not context:
        return "{}"
    return "{ " + " ; ".join(sorted(render_formula(f) for f in context)) + " }"


def render_step(step: DerivationStep) -> str:
    premises = ",".join(str(p) for p in step.premises)
    params = "".join(f" param.{key}={render_formula(value)}" for key, value in _ordered_params(step))
    return (
        f"step {step.id} rule={step.rule} premises=[{premises}] ctx={_render_context(step.context)} "
        f"concl={render_formula(step.conclusion)}{params}"
    )


_PARAM_ORDER = ("x", "z", "y", "template", "witness")


def _ordered_params(step: DerivationStep) -> list[tuple[str, Formula]]:
    params = step.param_map
    return [(key, params[key]) for key in _PARAM_ORDER if key in params]


def render_proof(d: Derivation) -> str:
    lines = [render_step(step) for step in d.steps]
    if d.final is not None:
        lines.append(f"final {d.final}")
    return "\n".join(lines) + "\n"
