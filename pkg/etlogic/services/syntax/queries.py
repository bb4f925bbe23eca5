"""Structural queries over ∈T and parameter formulas."""

from __future__ import annotations

from typing import Iterator

from .terms import (
    And,
    Atom,
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


def children(f: Formula) -> tuple[Formula, ...]:
    """Immediate subformulas; a binder's variable is not one of them."""
    match f:
        case Variable() | Constant() | ParamExpr():
            return ()
        case Exists(_, body) | Forall(_, body) | TruthOp(body) | FalseOp(body):
            return (body,)
        case Or(left, right) | And(left, right) | Identity(left, right) | Reference(left, right):
            return (left, right)
    raise TypeError(f"not an ∈T formula: {f!r}")


def subformulas(f: Formula) -> list[Formula]:
    """Every subtree of *f*, *f* first, in pre-order."""
    out: list[Formula] = []
    stack = [f]
    while stack:
        node = stack.pop()
        out.append(node)
        stack.extend(reversed(children(node)))
    return out


def free_vars(f: Formula) -> frozenset[Variable]:
    match f:
        case Variable():
            return frozenset({f})
        case Constant() | ParamExpr():
            return frozenset()
        case Exists(var, body) | Forall(var, body):
            return free_vars(body) - {var}
        case _:
            result: frozenset[Variable] = frozenset()
            for child in children(f):
                result |= free_vars(child)
            return result


def variables(f: Formula) -> frozenset[Variable]:
    """All variables of *f*, bound ones and binder variables included."""
    found = set()
    for node in subformulas(f):
        if isinstance(node, Variable):
            found.add(node)
        elif isinstance(node, (Exists, Forall)):
            found.add(node.var)
    return frozenset(found)


def constants(f: Formula) -> frozenset[Constant]:
    return frozenset(node for node in subformulas(f) if isinstance(node, Constant))


def param_exprs(f: Formula) -> frozenset[ParamExpr]:
    return frozenset(node for node in subformulas(f) if isinstance(node, ParamExpr))


def fcl(f: Formula) -> frozenset[Atom]:
    """Free variables, constants and parameter expressions of *f*.

    These are exactly the atoms a substitution can see through *f*.
    """
    return free_vars(f) | constants(f) | param_exprs(f)


def is_closed(f: Formula) -> bool:
    return not free_vars(f)


def is_intended(f: Formula) -> bool:
    """True iff every quantifier in *f* binds a variable free in its body.

    ``ex v0 . $c`` and ``all v0 . ex v0 . v0`` parse fine but are not intended.
    """
    for node in subformulas(f):
        if isinstance(node, (Exists, Forall)) and node.var not in free_vars(node.body):
            return False
    return True


def formula_depth(f: Formula) -> int:
    """Nesting depth of ∈T connectives; atoms (incl. parameter leaves) are 0."""
    kids = children(f)
    if not kids:
        return 0
    return 1 + max(formula_depth(child) for child in kids)


# ---------------------------------------------------------------------------
# Parameter formulas
# ---------------------------------------------------------------------------

def prop_children(a: PropFormula) -> tuple[PropFormula, ...]:
    match a:
        case PropAtom():
            return ()
        case PropNot(operand):
            return (operand,)
        case PropAnd(left, right) | PropOr(left, right) | PropImplies(left, right):
            return (left, right)
    raise TypeError(f"not a parameter formula: {a!r}")


def prop_atoms(a: PropFormula) -> frozenset[int]:
    """Indices of the atoms occurring in *a*."""
    if isinstance(a, PropAtom):
        return frozenset({a.index})
    result: frozenset[int] = frozenset()
    for child in prop_children(a):
        result |= prop_atoms(child)
    return result


def prop_depth(a: PropFormula) -> int:
    kids = prop_children(a)
    if not kids:
        return 0
    return 1 + max(prop_depth(child) for child in kids)


def iter_prop_subformulas(a: PropFormula) -> Iterator[PropFormula]:
    yield a
    for child in prop_children(a):
        yield from iter_prop_subformulas(child)


def formula_prop_atoms(f: Formula) -> frozenset[int]:
    """Parameter atoms occurring anywhere inside *f*'s embedded expressions."""
    result: frozenset[int] = frozenset()
    for leaf in param_exprs(f):
        result |= prop_atoms(leaf.expr)
    return result
