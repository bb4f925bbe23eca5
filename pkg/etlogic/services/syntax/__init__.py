"""
Syntax — the ∈T formula language, its parameter logic and their text forms.

Exposes the AST node classes, the lark-based parser, the renderer and the
structural queries (free variables, subformulas, intended-formula check).
"""

from .parser import (
    FormulaSyntaxError,
    SourceSpan,
    SyntaxErrorKind,
    parse_formula,
    parse_fragment,
    parse_propositional,
)
from .queries import (
    children,
    constants,
    fcl,
    formula_depth,
    formula_prop_atoms,
    free_vars,
    is_closed,
    is_intended,
    param_exprs,
    prop_atoms,
    prop_depth,
    subformulas,
    variables,
)
from .render import render_formula, render_propositional
from .terms import (
    ATOM_TYPES,
    FORMULA_TYPES,
    And,
    Atom,
    Binder,
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
    implies,
)

__all__ = [
    "ATOM_TYPES",
    "FORMULA_TYPES",
    "And",
    "Atom",
    "Binder",
    "Constant",
    "Exists",
    "FalseOp",
    "Forall",
    "Formula",
    "FormulaSyntaxError",
    "Identity",
    "Or",
    "ParamExpr",
    "PropAnd",
    "PropAtom",
    "PropFormula",
    "PropImplies",
    "PropNot",
    "PropOr",
    "Reference",
    "SourceSpan",
    "SyntaxErrorKind",
    "TruthOp",
    "Variable",
    "children",
    "constants",
    "fcl",
    "formula_depth",
    "formula_prop_atoms",
    "free_vars",
    "implies",
    "is_closed",
    "is_intended",
    "param_exprs",
    "parse_formula",
    "parse_fragment",
    "parse_propositional",
    "prop_atoms",
    "prop_depth",
    "render_formula",
    "render_propositional",
    "subformulas",
    "variables",
]
