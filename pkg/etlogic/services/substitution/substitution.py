"""
Substitution — finite-support maps from atoms to formulas and their
capture-avoiding extension to whole formulas.

An atom is a variable, a constant or an embedded parameter formula; a
substitution moves finitely many of them and fixes everything else. On a
binder ``Qx.φ`` the application picks the variable *forced by* σ: the least
``v<N>`` that is not free in the image of any free atom of the binder. The
body is then substituted under ``σ[x := y]``. Consequences:

- capture is impossible, because ``y`` is never free in an image placed under it;
- every binder in an output binds the least variable not free in that binder
  subformula, so two alpha-congruent outputs are structurally identical.

The second point is what lets proof checking compare substituted formulas with
plain ``==``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..syntax import (
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
    Reference,
    TruthOp,
    Variable,
    fcl,
    free_vars,
    parse_fragment,
    render_formula,
    render_propositional,
)

logger = logging.getLogger(__name__)

_ATOM_TYPES = (Variable, Constant, ParamExpr)


class SubstitutionError(ValueError):
    """Raised for ill-formed substitutions (non-atom keys, duplicate bindings)."""


def _atom_sort_key(atom: Atom) -> tuple[int, int, str]:
    match atom:
        case Variable(index):
            return (0, index, "")
        case Constant(name):
            return (1, 0, name)
        case ParamExpr(expr):
            return (2, 0, render_propositional(expr))
    raise SubstitutionError(f"not an atom: {atom!r}")


@dataclass(frozen=True, slots=True)
class Substitution:
    """σ with explicit finite support; ``σ(u) == u`` outside it.

    ``bindings`` is kept sorted and free of identity pairs, so two
    substitutions that act the same are equal.
    """

    bindings: tuple[tuple[Atom, Formula], ...] = ()
    _table: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        table: dict = {}
        seen: set = set()
        for atom, image in self.bindings:
            if not isinstance(atom, _ATOM_TYPES):
                raise SubstitutionError(f"substitution key must be an atom, got {atom!r}")
            if atom in seen:
                raise SubstitutionError(f"atom {render_formula(atom)} is bound twice")
            seen.add(atom)
            if image != atom:
                table[atom] = image
        object.__setattr__(self, "_table", table)
        object.__setattr__(
            self, "bindings", tuple(sorted(table.items(), key=lambda kv: _atom_sort_key(kv[0])))
        )

    @classmethod
    def of(cls, mapping: Mapping[Atom, Formula] | Iterable[tuple[Atom, Formula]]) -> Substitution:
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(tuple(items))

    def __call__(self, atom: Atom) -> Formula:
        return self._table.get(atom, atom)

    @property
    def support(self) -> frozenset[Atom]:
        return frozenset(self._table)

    @property
    def is_identity(self) -> bool:
        return not self._table

    @property
    def is_variable_only(self) -> bool:
        return all(isinstance(atom, Variable) for atom in self._table)

    def updated(self, atom: Atom, image: Formula) -> Substitution:
        """σ[atom := image]."""
        table = dict(self._table)
        table[atom] = image
        return Substitution.of(table)

    def __str__(self) -> str:
        return render_substitution(self)


EPSILON = Substitution()


def least_variable_not_in(excluded: Iterable[Variable]) -> Variable:
    taken = {v.index for v in excluded}
    index = 0
    while index in taken:
        index += 1
    return Variable(index)


def forced_variable(sigma: Substitution, binder: Formula) -> Variable:
    """The least variable not free in any ``σ(u)`` for ``u`` in ``fcl(binder)``."""
    if not isinstance(binder, (Exists, Forall)):
        raise SubstitutionError(f"forced_variable needs a quantified formula, got {render_formula(binder)}")
    excluded: set[Variable] = set()
    for atom in fcl(binder):
        excluded |= free_vars(sigma(atom))
    return least_variable_not_in(excluded)


def apply_substitution(sigma: Substitution, f: Formula) -> Formula:
    """``f[σ]``; homomorphic on connectives, forced-variable renaming on binders."""
    match f:
        case Variable() | Constant() | ParamExpr():
            return sigma(f)
        case TruthOp(body):
            return TruthOp(apply_substitution(sigma, body))
        case FalseOp(body):
            return FalseOp(apply_substitution(sigma, body))
        case Or(left, right):
            return Or(apply_substitution(sigma, left), apply_substitution(sigma, right))
        case And(left, right):
            return And(apply_substitution(sigma, left), apply_substitution(sigma, right))
        case Identity(left, right):
            return Identity(apply_substitution(sigma, left), apply_substitution(sigma, right))
        case Reference(left, right):
            return Reference(apply_substitution(sigma, left), apply_substitution(sigma, right))
        case Exists(var, body) | Forall(var, body):
            fresh = forced_variable(sigma, f)
            new_body = apply_substitution(sigma.updated(var, fresh), body)
            return type(f)(fresh, new_body)
    raise SubstitutionError(f"not an ∈T formula: {f!r}")


def substitute(f: Formula, atom: Atom, image: Formula) -> Formula:
    """``f[atom := image]``."""
    return apply_substitution(Substitution.of({atom: image}), f)


def compose(sigma: Substitution, tau: Substitution) -> Substitution:
    """σ ∘ τ, i.e. ``u ↦ σ(u)[τ]`` (first σ, then τ)."""
    atoms = sigma.support | tau.support
    return Substitution.of({atom: apply_substitution(tau, sigma(atom)) for atom in atoms})


# ---------------------------------------------------------------------------
# Text form: [v0 := <formula>; $c := <formula>; {p0} := <formula>]
# ---------------------------------------------------------------------------

def render_substitution(sigma: Substitution) -> str:
    body = "; ".join(f"{render_formula(atom)} := {render_formula(image)}" for atom, image in sigma.bindings)
    return f"[{body}]"


def parse_substitution(text: str) -> Substitution:
    pairs = parse_fragment(text, "substitution_text")
    return Substitution(tuple(pairs))
