"""
Terms — the abstract syntax of the parameter logic and of the ∈T language.

Two trees live here:

- ``PropFormula``: classical propositional formulas over indexed atoms
  ``p0, p1, …`` with ``~``, ``&``, ``|`` and ``=>``. These are the
  expressions of the parameter logic and are evaluated four-valued by
  ``services.manyvalued``.
- ``Formula``: the ∈T language. Leaves are variables ``v<N>``, constants
  ``$name`` and embedded parameter formulas (``ParamExpr``); connectives are
  the postfix truth/falsity operators, ``∨``, ``∧``, identity ``≡``,
  reference ``<`` and the two quantifiers.

Every node is a frozen, slotted dataclass, so structural equality and hashing
come for free and trees can be shared across threads. Pattern matching on the
node classes (``match f: case Or(left, right): …``) is the expected way to
walk them.

--- WHERE TO CHANGE IF A CONNECTIVE IS ADDED ---
Add the node here, then teach ``parser.py`` (parse), ``render.py`` (print),
``queries.py`` (free variables / subformulas), ``substitution`` (apply, alpha),
``semantics.gamma`` (evaluation) and ``utils.serialization`` (tree dump).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TypeAlias, Union


# ---------------------------------------------------------------------------
# Parameter logic
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PropAtom:
    index: int

    def __str__(self) -> str:
        return f"p{self.index}"


@dataclass(frozen=True, slots=True)
class PropNot:
    operand: PropFormula


@dataclass(frozen=True, slots=True)
class PropAnd:
    left: PropFormula
    right: PropFormula


@dataclass(frozen=True, slots=True)
class PropOr:
    left: PropFormula
    right: PropFormula


@dataclass(frozen=True, slots=True)
class PropImplies:
    """``a => b``; evaluated as ``~a | b``."""

    left: PropFormula
    right: PropFormula


PropFormula: TypeAlias = Union[PropAtom, PropNot, PropAnd, PropOr, PropImplies]


# ---------------------------------------------------------------------------
# ∈T atoms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Variable:
    index: int

    def __str__(self) -> str:
        return f"v{self.index}"


@dataclass(frozen=True, slots=True)
class Constant:
    name: str

    def __str__(self) -> str:
        return f"${self.name}"


@dataclass(frozen=True, slots=True)
class ParamExpr:
    """A parameter-logic formula embedded as an ∈T leaf (``{p0 & ~p1}``)."""

    expr: PropFormula


# ---------------------------------------------------------------------------
# ∈T connectives
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class TruthOp:
    """Postfix ``:true``."""

    body: Formula


@dataclass(frozen=True, slots=True)
class FalseOp:
    """Postfix ``:false``."""

    body: Formula


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Identity:
    """``φ == ψ``: the two formulas denote the same proposition."""

    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Reference:
    """``φ < ψ``: ψ refers to φ."""

    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Exists:
    var: Variable
    body: Formula


@dataclass(frozen=True, slots=True)
class Forall:
    var: Variable
    body: Formula


Atom: TypeAlias = Union[Variable, Constant, ParamExpr]
Binder: TypeAlias = Union[Exists, Forall]
Formula: TypeAlias = Union[
    Variable, Constant, ParamExpr,
    TruthOp, FalseOp,
    Or, And, Identity, Reference,
    Exists, Forall,
]

ATOM_TYPES = (Variable, Constant, ParamExpr)
POSTFIX_TYPES = (TruthOp, FalseOp)
BINARY_TYPES = (Or, And, Identity, Reference)
BINDER_TYPES = (Exists, Forall)

FORMULA_TYPES = (*ATOM_TYPES, *POSTFIX_TYPES, *BINARY_TYPES, *BINDER_TYPES)


def implies(left: Formula, right: Formula) -> Formula:
    """``left -> right``, i.e. ``(left :false) \\/ right``."""
    return Or(FalseOp(left), right)