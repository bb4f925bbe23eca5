"""Derivation checker: walks the steps in order and stops at the first bad one."""

from __future__ import annotations

import logging

from ..syntax import Variable
from .derivation import VARIABLE_PARAMS, Derivation, DerivationStep, ReasonCode, Rule, Verdict
from .rules import OWN_CONTEXT_RULES, RULE_CHECKERS

logger = logging.getLogger(__name__)


def check_derivation(d: Derivation) -> Verdict:
    """Accepted iff every step is a correct instance of its rule.

    Never raises for a bad derivation; the verdict names the earliest
    failing step and a reason code.
    """
    if not d.steps:
        return Verdict.reject(None, ReasonCode.BAD_PREMISE_REF, "the derivation has no steps")

    seen: dict[int, DerivationStep] = {}
    previous_id: int | None = None
    for step in d.steps:
        verdict = _check_step(step, seen, previous_id)
        if verdict is not None:
            logger.info("step %d rejected: %s", step.id, verdict)
            return verdict
        seen[step.id] = step
        previous_id = step.id

    if d.final_id not in seen:
        return Verdict.reject(d.final_id, ReasonCode.BAD_PREMISE_REF, f"final step {d.final_id} does not exist")
    logger.debug("derivation of %d steps accepted", len(d.steps))
    return Verdict.accept()


def _check_step(step: DerivationStep, seen: dict[int, DerivationStep], previous_id: int | None) -> Verdict | None:
    def reject(reason: ReasonCode, message: str) -> Verdict:
        return Verdict.reject(step.id, reason, message)

    try:
        which = Rule(step.rule)
    except ValueError:
        return reject(ReasonCode.UNKNOWN_RULE, f"unknown rule {step.rule!r}")

    if step.id < 1 or (previous_id is not None and step.id <= previous_id):
        return reject(ReasonCode.BAD_PREMISE_REF, f"step ids must be positive and strictly increasing, got {step.id}")
    if len(step.premises) != which.arity:
        return reject(
            ReasonCode.BAD_PREMISE_REF,
            f"{which.value} takes {which.arity} premise(s), got {len(step.premises)}",
        )
    premises = []
    for ref in step.premises:
        if ref not in seen:
            return reject(ReasonCode.BAD_PREMISE_REF, f"premise {ref} is not an earlier step")
        premises.append(seen[ref])

    keys = set(step.param_map)
    if keys != which.param_keys:
        expected = ", ".join(sorted(which.param_keys)) or "none"
        return reject(
            ReasonCode.MALFORMED_PARAMS,
            f"{which.value} needs params {{{expected}}}, got {{{', '.join(sorted(keys)) or 'none'}}}",
        )
    for key in keys & VARIABLE_PARAMS:
        if not isinstance(step.param_map[key], Variable):
            return reject(ReasonCode.MALFORMED_PARAMS, f"param.{key} must be a variable")

    if which not in OWN_CONTEXT_RULES:
        for p in premises:
            if p.context != step.context:
                return reject(ReasonCode.CONTEXT_MISMATCH, f"premise {p.id} has a different context")

    failure = RULE_CHECKERS[which](step, tuple(premises))
    if failure is not None:
        return reject(failure.reason, failure.message)
    return None
