"""Alpha-congruence: equality up to a consistent renaming of bound variables."""

from __future__ import annotations

from ..syntax import (
    And,
    Constant,
    Exists,
    FalseOp,
    Forall,
    Formula,
    Identity,
    Or,
    ParamExpr,
    Reference,
    TruthOp,
    Variable,
)

_Env = dict[Variable, int]


def alpha_congruent(f: Formula, g: Formula) -> bool:
    """True iff *f* and *g* differ at most in the names of bound variables.

    Free atoms must match exactly; parameter formulas are compared
    structurally and never renamed.
    """
    return _congruent(f, g, {}, {}, 0)


def _congruent(f: Formula, g: Formula, left: _Env, right: _Env, depth: int) -> bool:
    if type(f) is not type(g):
        return False
    match f:
        case Variable():
            bound_f, bound_g = left.get(f), right.get(g)
            if bound_f is None and bound_g is None:
                return f == g
            # both must point at the same enclosing binder
            return bound_f == bound_g
        case Constant() | ParamExpr():
            return f == g
        case TruthOp(body) | FalseOp(body):
            return _congruent(body, g.body, left, right, depth)
        case Or(l, r) | And(l, r) | Identity(l, r) | Reference(l, r):
            return _congruent(l, g.left, left, right, depth) and _congruent(r, g.right, left, right, depth)
        case Exists(var, body) | Forall(var, body):
            return _congruent(
                body,
                g.body,
                {**left, var: depth},
                {**right, g.var: depth},
                depth + 1,
            )
    raise TypeError(f"not an ∈T formula: {f!r}")
