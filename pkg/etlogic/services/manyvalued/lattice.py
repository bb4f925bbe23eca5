"""
Lattice — the four truth values, the logic flavors and theory classes.

A truth value is encoded by what it is *told*: ``(told_true, told_false)``.
One = (T, F), Zero = (F, T), Both = (T, T), Neither = (F, F). Join, meet and
negation fall out of that encoding:

    join  = (t1 or t2,  f1 and f2)
    meet  = (t1 and t2, f1 or f2)
    neg   = (f, t)

so ``Both | Neither == One`` and ``Both & Neither == Zero``. A value is
designated iff told true and antidesignated iff told false.

--- WHERE TO CHANGE IF ENUMERATION ORDER CHANGES ---
``ENUMERATION_ORDER`` drives every brute-force scan (valuations, models,
assignments) and therefore which countermodel is reported first. Golden
tests pin ``p=B q=0`` for disjunctive syllogism in B4.
"""

from __future__ import annotations

from enum import Enum


class TruthValue(str, Enum):
    ZERO = "0"
    NEITHER = "N"
    BOTH = "B"
    ONE = "1"

    @classmethod
    def from_told(cls, told_true: bool, told_false: bool) -> TruthValue:
        return _FROM_TOLD[(bool(told_true), bool(told_false))]

    @classmethod
    def parse(cls, token: str) -> TruthValue:
        return cls(token.strip().upper())

    @property
    def told_true(self) -> bool:
        return _TOLD[self][0]

    @property
    def told_false(self) -> bool:
        return _TOLD[self][1]

    @property
    def designated(self) -> bool:
        return self.told_true

    @property
    def antidesignated(self) -> bool:
        return self.told_false

    def join(self, other: TruthValue) -> TruthValue:
        t1, f1 = _TOLD[self]
        t2, f2 = _TOLD[other]
        return _FROM_TOLD[(t1 or t2, f1 and f2)]

    def meet(self, other: TruthValue) -> TruthValue:
        t1, f1 = _TOLD[self]
        t2, f2 = _TOLD[other]
        return _FROM_TOLD[(t1 and t2, f1 or f2)]

    def negation(self) -> TruthValue:
        t, f = _TOLD[self]
        return _FROM_TOLD[(f, t)]

    def leq(self, other: TruthValue) -> bool:
        """Truth order: Zero ≤ Both, Neither ≤ One; Both and Neither incomparable."""
        t1, f1 = _TOLD[self]
        t2, f2 = _TOLD[other]
        return (t1 <= t2) and (f1 >= f2)

    __or__ = join
    __and__ = meet
    __invert__ = negation

    def __str__(self) -> str:
        return self.value


_TOLD: dict[TruthValue, tuple[bool, bool]] = {
    TruthValue.ONE: (True, False),
    TruthValue.ZERO: (False, True),
    TruthValue.BOTH: (True, True),
    TruthValue.NEITHER: (False, False),
}
_FROM_TOLD = {told: value for value, told in _TOLD.items()}

ENUMERATION_ORDER: tuple[TruthValue, ...] = (
    TruthValue.ZERO,
    TruthValue.NEITHER,
    TruthValue.BOTH,
    TruthValue.ONE,
)


def join_all(values, *, empty: TruthValue = TruthValue.ZERO) -> TruthValue:
    """Supremum of *values*; the supremum of nothing is the bottom ``Zero``."""
    result = empty
    for value in values:
        result = result.join(value)
    return result


def meet_all(values, *, empty: TruthValue = TruthValue.ONE) -> TruthValue:
    result = empty
    for value in values:
        result = result.meet(value)
    return result


class Flavor(str, Enum):
    """Which truth values a valuation (or model) may use."""

    CLASSICAL = "classical"
    K3 = "k3"
    P3 = "p3"
    B4 = "b4"

    @classmethod
    def parse(cls, name: str) -> Flavor:
        return cls(name.strip().lower())

    @property
    def values(self) -> tuple[TruthValue, ...]:
        """Admitted values, in enumeration order."""
        return _FLAVOR_VALUES[self]

    def admits(self, value: TruthValue) -> bool:
        return value in _FLAVOR_VALUES[self]


_FLAVOR_VALUES: dict[Flavor, tuple[TruthValue, ...]] = {
    flavor: tuple(v for v in ENUMERATION_ORDER if v in allowed)
    for flavor, allowed in {
        Flavor.CLASSICAL: {TruthValue.ONE, TruthValue.ZERO},
        Flavor.K3: {TruthValue.ONE, TruthValue.ZERO, TruthValue.NEITHER},
        Flavor.P3: {TruthValue.ONE, TruthValue.ZERO, TruthValue.BOTH},
        Flavor.B4: set(ENUMERATION_ORDER),
    }.items()
}


class TheoryClass(str, Enum):
    CLASSICAL = "classical"
    K3_PROPER = "k3-proper"
    P3_PROPER = "p3-proper"
    B4_PROPER = "b4-proper"

    @property
    def least_flavor(self) -> Flavor:
        return {
            TheoryClass.CLASSICAL: Flavor.CLASSICAL,
            TheoryClass.K3_PROPER: Flavor.K3,
            TheoryClass.P3_PROPER: Flavor.P3,
            TheoryClass.B4_PROPER: Flavor.B4,
        }[self]
