"""
Theories — classification, intersections of complete theories and the
finite-scale prime check.

A complete theory is a valuation. Every other theory is an intersection of
complete ones, represented here by the nonempty set of valuations it is the
intersection of. Such theories are infinite, so comparisons are made on a
bounded universe of formulas (see ``universe.desk_universe``).

--- WHERE TO CHANGE IF THEORY REPRESENTATION CHANGES ---
``theory_of`` is the only place a theory is materialised as a formula set;
``check_prime`` and the CLI ``classify`` report depend on it.
"""

from __future__ import annotations

import logging
from itertools import combinations_with_replacement
from typing import Callable, Collection, Iterable, NamedTuple

from ..syntax import PropAnd, PropFormula, PropImplies, PropNot, PropOr
from .consequence import is_classical_tautology, is_classically_unsatisfiable
from .lattice import TheoryClass, TruthValue
from .valuation import Valuation, theory_membership

logger = logging.getLogger(__name__)


class EmptyTheoryFamilyError(ValueError):
    """An intersection over no valuations was requested."""


def classify_theory(v: Valuation) -> TheoryClass:
    """Classify by the values in use (the fill value counts)."""
    used = v.value_set()
    glut = TruthValue.BOTH in used
    gap = TruthValue.NEITHER in used
    if glut and gap:
        return TheoryClass.B4_PROPER
    if glut:
        return TheoryClass.P3_PROPER
    if gap:
        return TheoryClass.K3_PROPER
    return TheoryClass.CLASSICAL


class ClassificationCheck(NamedTuple):
    """A theory's class and whether the finite glut/gap characterisation agrees with it."""

    theory_class: TheoryClass
    gap_free_agrees: bool
    glut_free_agrees: bool

    @property
    def consistent(self) -> bool:
        return self.gap_free_agrees and self.glut_free_agrees


def classification_check(v: Valuation, universe: Iterable[PropFormula]) -> ClassificationCheck:
    """Compare the class of ``A_v`` with what its members say on *universe*.

    Glut-free (classical or K3-proper) iff ``A_v`` holds no classically
    unsatisfiable formula; gap-free (classical or P3-proper) iff it holds
    every classical tautology.
    """
    theory_class = classify_theory(v)
    universe = tuple(universe)
    members = [a for a in universe if theory_membership(v, a).in_theory]
    no_contradiction = not any(is_classically_unsatisfiable(a) for a in members)
    all_tautologies = all(theory_membership(v, a).in_theory for a in universe if is_classical_tautology(a))
    glut_free = theory_class in (TheoryClass.CLASSICAL, TheoryClass.K3_PROPER)
    gap_free = theory_class in (TheoryClass.CLASSICAL, TheoryClass.P3_PROPER)
    logger.debug(
        "classification check for %s over %d formulas: %d members", v, len(universe), len(members)
    )
    return ClassificationCheck(theory_class, gap_free == all_tautologies, glut_free == no_contradiction)


def _require_family(family: Iterable[Valuation]) -> tuple[Valuation, ...]:
    family = tuple(family)
    if not family:
        raise EmptyTheoryFamilyError("an intersection of theories needs at least one valuation")
    return family


def intersection_membership(family: Iterable[Valuation], a: PropFormula) -> bool:
    """Is *a* in every theory ``A_v`` for ``v`` in *family*?"""
    return all(theory_membership(v, a).in_theory for v in _require_family(family))


def theory_of(family: Iterable[Valuation], universe: Iterable[PropFormula]) -> frozenset[PropFormula]:
    """The intersection theory of *family*, restricted to *universe*."""
    family = _require_family(family)
    return frozenset(a for a in universe if all(theory_membership(v, a).in_theory for v in family))


def check_prime(
    family: Iterable[Valuation],
    pool: Iterable[Collection[Valuation]],
    universe: Iterable[PropFormula],
) -> bool:
    """Brute-force primality on a bounded universe.

    The theory of *family* is prime unless two theories from *pool*, both
    different from it on *universe*, intersect to it on *universe*.
    """
    universe = tuple(universe)
    cache: dict[Valuation, frozenset[PropFormula]] = {}

    def designated(v: Valuation) -> frozenset[PropFormula]:
        if v not in cache:
            cache[v] = frozenset(a for a in universe if theory_membership(v, a).in_theory)
        return cache[v]

    def restricted(members: Iterable[Valuation]) -> frozenset[PropFormula]:
        members = _require_family(members)
        result = designated(members[0])
        for v in members[1:]:
            result &= designated(v)
        return result

    target = restricted(family)
    candidates = [t for t in dict.fromkeys(restricted(members) for members in pool) if t != target]
    logger.debug("check_prime: %d distinct candidate theories", len(candidates))
    for first, second in combinations_with_replacement(candidates, 2):
        if first & second == target:
            return False
    return True


# ---------------------------------------------------------------------------
# Truth-condition checkers
# ---------------------------------------------------------------------------

def definition_violations(v: Valuation, a: PropFormula, b: PropFormula) -> list[str]:
    """Which of the eight membership biconditionals of a complete theory fail.

    Each connective gives one condition on ``A`` and one on its complement.
    An empty list means ``(A_v, Ā_v)`` behaves as a complete theory on *a*, *b*.
    """
    def m(x: PropFormula):
        return theory_membership(v, x)

    ma, mb = m(a), m(b)
    checks = {
        "or/A": m(PropOr(a, b)).in_theory == (ma.in_theory or mb.in_theory),
        "or/complement": m(PropOr(a, b)).in_complement == (ma.in_complement and mb.in_complement),
        "and/A": m(PropAnd(a, b)).in_theory == (ma.in_theory and mb.in_theory),
        "and/complement": m(PropAnd(a, b)).in_complement == (ma.in_complement or mb.in_complement),
        "not/A": m(PropNot(a)).in_theory == ma.in_complement,
        "not/complement": m(PropNot(a)).in_complement == ma.in_theory,
        "implies/A": m(PropImplies(a, b)).in_theory == (ma.in_complement or mb.in_theory),
        "implies/complement": m(PropImplies(a, b)).in_complement == (ma.in_theory and mb.in_complement),
    }
    return [name for name, ok in checks.items() if not ok]


def completeness_violations(member: Callable[[PropFormula], bool], a: PropFormula, b: PropFormula) -> list[str]:
    """Which of the five closure conditions characterising complete theories fail.

    *member* is any membership predicate, e.g. a union of ``A_v`` sets.
    """
    checks = {
        "(i) double negation": member(a) == member(PropNot(PropNot(a))),
        "(ii) disjunction": member(PropOr(a, b)) == (member(a) or member(b)),
        "(iii) negated disjunction": member(PropNot(PropOr(a, b))) == (member(PropNot(a)) and member(PropNot(b))),
        "(iv) conjunction": member(PropAnd(a, b)) == (member(a) and member(b)),
        "(v) negated conjunction": member(PropNot(PropAnd(a, b))) == (member(PropNot(a)) or member(PropNot(b))),
    }
    return [name for name, ok in checks.items() if not ok]
