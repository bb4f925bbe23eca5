"""Shared serialization helpers for machine-readable command output."""

from __future__ import annotations

from dataclasses import is_dataclass
from enum import Enum
from typing import Any, Dict

from etlogic.services.manyvalued import Valuation
from etlogic.services.semantics import Assignment, ExtensionalModel, render_assignment, render_model
from etlogic.services.syntax import (
    ATOM_TYPES,
    FORMULA_TYPES,
    Constant,
    Exists,
    Forall,
    ParamExpr,
    Variable,
    children,
    render_formula,
    render_propositional,
)


def to_record(obj: Any) -> Any:
    """Convert a domain object to plain JSON-serialisable data.

    Handles, in order:
    - enums -> their value
    - valuations, models, assignments -> their text form plus a mapping
    - formulas -> rendered text
    - Pydantic v2 -> model_dump(mode="json")
    - dataclass -> its public fields, recursively
    - containers -> element-wise
    """
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Valuation):
        return {"text": str(obj), "values": {f"p{a}": v.value for a, v in obj.values}}
    if isinstance(obj, ExtensionalModel):
        return {
            "text": render_model(obj),
            "flavor": obj.flavor.value,
            "theory": to_record(obj.theory),
            "constants": {f"${name}": v.value for name, v in obj.constants},
        }
    if isinstance(obj, Assignment):
        return {"text": render_assignment(obj), "default": obj.default.value}
    if _is_formula(obj):
        return render_formula(obj)
    if hasattr(obj, "model_dump"):
        return obj.model_dump(mode="json")
    if is_dataclass(obj) and not isinstance(obj, type):
        return {name: to_record(value) for name, value in _shallow_fields(obj).items()}
    if isinstance(obj, dict):
        return {str(k): to_record(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_record(v) for v in obj]
    return obj


def _shallow_fields(obj: Any) -> Dict[str, Any]:
    names = [f for f in getattr(obj, "__dataclass_fields__", {}) if not f.startswith("_")]
    return {name: getattr(obj, name) for name in names}


def _is_formula(obj: Any) -> bool:
    return isinstance(obj, FORMULA_TYPES)


def formula_to_tree(f: Any) -> Dict[str, Any]:
    """The AST of an ∈T formula as nested dicts (``parse`` command output)."""
    node: Dict[str, Any] = {"node": type(f).__name__}
    if isinstance(f, ATOM_TYPES):
        match f:
            case Variable(index):
                node["index"] = index
            case Constant(name):
                node["name"] = name
            case ParamExpr(expr):
                node["expr"] = render_propositional(expr)
        return node
    if isinstance(f, (Exists, Forall)):
        node["var"] = str(f.var)
    node["children"] = [formula_to_tree(child) for child in children(f)]
    node["text"] = render_formula(f)
    return node
