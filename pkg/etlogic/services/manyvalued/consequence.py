"""Brute-force consequence over the valuations of a flavor."""

from __future__ import annotations

import logging
from typing import Iterable, NamedTuple

from ..syntax import PropFormula, prop_atoms
from .lattice import Flavor
from .valuation import Valuation, enumerate_valuations, eval_param

logger = logging.getLogger(__name__)


class EntailmentResult(NamedTuple):
    holds: bool
    countermodel: Valuation | None = None


def occurring_atoms(formulas: Iterable[PropFormula]) -> tuple[int, ...]:
    found: set[int] = set()
    for a in formulas:
        found |= prop_atoms(a)
    return tuple(sorted(found))


def entails(flavor: Flavor, premises: Iterable[PropFormula], conclusion: PropFormula) -> EntailmentResult:
    """Does every *flavor* valuation designating all *premises* designate *conclusion*?

    The countermodel, when there is one, is the first in enumeration order.
    """
    premises = tuple(premises)
    atoms = occurring_atoms((*premises, conclusion))
    logger.debug("entails[%s]: %d atoms, %d valuations", flavor.value, len(atoms), len(flavor.values) ** len(atoms))
    for v in enumerate_valuations(atoms, flavor):
        if all(eval_param(v, a).designated for a in premises) and not eval_param(v, conclusion).designated:
            return EntailmentResult(False, v)
    return EntailmentResult(True)


def is_classical_tautology(a: PropFormula) -> bool:
    return entails(Flavor.CLASSICAL, (), a).holds


def is_classically_unsatisfiable(a: PropFormula) -> bool:
    return not any(eval_param(v, a).designated for v in enumerate_valuations(prop_atoms(a), Flavor.CLASSICAL))
