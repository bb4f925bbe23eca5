"""Syntactical reference ``φ ≺ ψ``.

``φ ≺ ψ`` holds when φ is alpha-congruent to a proper subformula φ′ of ψ and
no variable free in φ′ is bound by a quantifier of ψ above φ′. This is
equivalent to the existence of ψ′ ≠ x with ``x ∈ fvar(ψ′)`` and
``ψ′[x := φ] =α ψ``, and unlike that form it is decidable by a finite scan.
"""

from __future__ import annotations

from typing import Iterator

from ..syntax import Exists, Forall, Formula, Variable, children, free_vars
from .alpha import alpha_congruent


def _proper_positions(g: Formula, bound: frozenset[Variable]) -> Iterator[tuple[Formula, frozenset[Variable]]]:
    """Proper subformulas of *g* paired with the variables bound above them."""
    inner = bound | {g.var} if isinstance(g, (Exists, Forall)) else bound
    for child in children(g):
        yield child, inner
        yield from _proper_positions(child, inner)


def syntactic_reference(f: Formula, g: Formula) -> bool:
    for sub, bound in _proper_positions(g, frozenset()):
        if free_vars(sub) & bound:
            continue
        if alpha_congruent(f, sub):
            return True
    return False
