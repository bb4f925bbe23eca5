"""Pretty printer, inverse of ``parser``.

Parentheses are minimal under the grammar's precedence with two exceptions:
a postfix application used as an operand of a binary connective is wrapped
(``$c == ($c :false)``), and a quantifier used as an operand is wrapped because
its body would otherwise swallow the rest of the line.
"""

from __future__ import annotations

from .terms import (
    And,
    Constant,
    Exists,
    FalseOp,
    Forall,
    Formula,
    Identity,
    Or,
    ParamExpr,
    PropAnd,
    PropAtom,
    PropFormula,
    PropImplies,
    PropNot,
    PropOr,
    Reference,
    TruthOp,
    Variable,
)

_QUANT, _REL, _OR, _AND, _POSTFIX, _LEAF = 0, 1, 3, 4, 5, 6

_BINARY_SYMBOLS = {Or: "\\/", And: "/\\", Identity: "==", Reference: "<"}
_BINARY_LEVELS = {Or: _OR, And: _AND, Identity: _REL, Reference: _REL}


def _level(f: Formula) -> int:
    match f:
        case Exists() | Forall():
            return _QUANT
        case TruthOp() | FalseOp():
            return _POSTFIX
        case Or() | And() | Identity() | Reference():
            return _BINARY_LEVELS[type(f)]
    return _LEAF


def _wrap(text: str, needed: bool) -> str:
    return f"({text})" if needed else text


def _binary_operand(child: Formula, parent_level: int, *, right: bool) -> str:
    level = _level(child)
    if level in (_QUANT, _POSTFIX):
        needed = True
    elif parent_level == _REL:
        needed = level <= _REL
    else:
        needed = level < parent_level or (right and level == parent_level)
    return _wrap(render_formula(child), needed)


def render_formula(f: Formula) -> str:
    match f:
        case Variable(index):
            return f"v{index}"
        case Constant(name):
            return f"${name}"
        case ParamExpr(expr):
            return "{" + render_propositional(expr) + "}"
        case TruthOp(body):
            return f"{_wrap(render_formula(body), _level(body) < _POSTFIX)} :true"
        case FalseOp(body):
            return f"{_wrap(render_formula(body), _level(body) < _POSTFIX)} :false"
        case Or(left, right) | And(left, right) | Identity(left, right) | Reference(left, right):
            level = _BINARY_LEVELS[type(f)]
            return (
                f"{_binary_operand(left, level, right=False)} "
                f"{_BINARY_SYMBOLS[type(f)]} "
                f"{_binary_operand(right, level, right=True)}"
            )
        case Exists(var, body):
            return f"ex {var} . {render_formula(body)}"
        case Forall(var, body):
            return f"all {var} . {render_formula(body)}"
    raise TypeError(f"not an ∈T formula: {f!r}")


# ---------------------------------------------------------------------------
# Parameter formulas
# ---------------------------------------------------------------------------

_P_IMP, _P_OR, _P_AND, _P_NOT, _P_ATOM = 0, 1, 2, 3, 4
_P_SYMBOLS = {PropImplies: "=>", PropOr: "|", PropAnd: "&"}
_P_LEVELS = {PropImplies: _P_IMP, PropOr: _P_OR, PropAnd: _P_AND}


def _p_level(a: PropFormula) -> int:
    if isinstance(a, PropAtom):
        return _P_ATOM
    if isinstance(a, PropNot):
        return _P_NOT
    return _P_LEVELS[type(a)]


def render_propositional(a: PropFormula) -> str:
    match a:
        case PropAtom(index):
            return f"p{index}"
        case PropNot(operand):
            return "~" + _wrap(render_propositional(operand), _p_level(operand) < _P_NOT)
        case PropImplies(left, right):
            # right-associative
            return (
                f"{_wrap(render_propositional(left), _p_level(left) <= _P_IMP)} => "
                f"{render_propositional(right)}"
            )
        case PropOr(left, right) | PropAnd(left, right):
            level = _P_LEVELS[type(a)]
            return (
                f"{_wrap(render_propositional(left), _p_level(left) < level)} "
                f"{_P_SYMBOLS[type(a)]} "
                f"{_wrap(render_propositional(right), _p_level(right) <= level)}"
            )
    raise TypeError(f"not a parameter formula: {a!r}")
