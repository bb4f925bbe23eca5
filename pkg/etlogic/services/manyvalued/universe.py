"""The bounded "desk universe" of parameter formulas.

Formulas over the given atoms are generated level by level with ``~``, ``&``
and ``|``; a formula is kept only if its B4 truth function is new. Over two
atoms the functions are the elements of the free De Morgan lattice, so the
universe stays small while still containing a representative of every
behaviour reachable at that depth. New formulas are built only from kept
ones, which makes the universe closed under subformulas.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product
from typing import Iterable

from ..syntax import PropAnd, PropAtom, PropFormula, PropNot, PropOr
from .lattice import Flavor, TruthValue
from .valuation import enumerate_valuations

logger = logging.getLogger(__name__)

_Signature = tuple[TruthValue, ...]


def desk_universe(atoms: Iterable[int] = (0, 1), depth: int = 3) -> tuple[PropFormula, ...]:
    """All behaviourally distinct formulas of depth ≤ *depth* over *atoms*."""
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    return _desk_universe(tuple(sorted(set(atoms))), depth)


@lru_cache(maxsize=32)
def _desk_universe(atoms: tuple[int, ...], depth: int) -> tuple[PropFormula, ...]:
    valuations = list(enumerate_valuations(atoms, Flavor.B4))
    kept: list[tuple[PropFormula, _Signature]] = []
    seen: set[_Signature] = set()

    def offer(formula: PropFormula, signature: _Signature) -> None:
        if signature not in seen:
            seen.add(signature)
            kept.append((formula, signature))

    for atom in atoms:
        offer(PropAtom(atom), tuple(v.value(atom) for v in valuations))

    for level in range(1, depth + 1):
        current = list(kept)
        for a, sig in current:
            offer(PropNot(a), tuple(x.negation() for x in sig))
        for (a, sa), (b, sb) in product(current, current):
            offer(PropAnd(a, b), tuple(x.meet(y) for x, y in zip(sa, sb)))
            offer(PropOr(a, b), tuple(x.join(y) for x, y in zip(sa, sb)))
        logger.debug("desk universe over %s: %d formulas after level %d", atoms, len(kept), level)

    return tuple(formula for formula, _ in kept)
