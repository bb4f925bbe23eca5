"""
Valuation — a finite atom → truth-value map standing for a complete theory.

A valuation ``v`` determines the pair ``(A, Ā)``: ``a ∈ A`` iff ``v(a)`` is
designated, ``a ∈ Ā`` iff it is antidesignated. ``valuation_from_theory``
goes the other way, reading ``v(p)`` off the membership of ``p`` and ``∼p``.

Atoms outside the explicit domain take the ``fill`` value; without a fill,
evaluating such an atom raises ``UnknownAtomError``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple

from ..syntax import (
    PropAnd,
    PropAtom,
    PropFormula,
    PropImplies,
    PropNot,
    PropOr,
    parse_fragment,
)
from .lattice import Flavor, TruthValue

logger = logging.getLogger(__name__)


class ValuationError(ValueError):
    """A valuation uses a value its flavor does not admit, or is malformed."""


class UnknownAtomError(ValuationError):
    """An atom outside the valuation's domain was evaluated and no fill is set."""


@dataclass(frozen=True, slots=True)
class Valuation:
    values: tuple[tuple[int, TruthValue], ...] = ()
    flavor: Flavor = Flavor.B4
    fill: TruthValue | None = None
    _table: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        table: dict[int, TruthValue] = {}
        for atom, raw in self.values:
            value = TruthValue(raw)
            if atom < 0:
                raise ValuationError(f"atom index must be non-negative, got {atom}")
            if atom in table:
                raise ValuationError(f"atom p{atom} is assigned twice")
            if not self.flavor.admits(value):
                raise ValuationError(f"value {value} for p{atom} is not admitted by flavor {self.flavor.value}")
            table[atom] = value
        if self.fill is not None:
            fill = TruthValue(self.fill)
            if not self.flavor.admits(fill):
                raise ValuationError(f"fill value {fill} is not admitted by flavor {self.flavor.value}")
            object.__setattr__(self, "fill", fill)
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "values", tuple(sorted(table.items())))

    @classmethod
    def of(
        cls,
        mapping: Mapping[int, TruthValue] | Iterable[tuple[int, TruthValue]],
        flavor: Flavor = Flavor.B4,
        fill: TruthValue | None = None,
    ) -> Valuation:
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(tuple(items), flavor, fill)

    @classmethod
    def constant(cls, value: TruthValue, flavor: Flavor = Flavor.B4) -> Valuation:
        """Every atom gets *value*."""
        return cls((), flavor, value)

    def value(self, atom: int) -> TruthValue:
        try:
            return self._table[atom]
        except KeyError:
            if self.fill is None:
                raise UnknownAtomError(f"atom p{atom} is not assigned and the valuation has no fill") from None
            return self.fill

    @property
    def atoms(self) -> tuple[int, ...]:
        return tuple(atom for atom, _ in self.values)

    def value_set(self) -> frozenset[TruthValue]:
        """Values actually used, the fill included."""
        used = {value for _, value in self.values}
        if self.fill is not None:
            used.add(self.fill)
        return frozenset(used)

    def __str__(self) -> str:
        return render_valuation(self)


class Membership(NamedTuple):
    in_theory: bool
    in_complement: bool


def eval_param(v: Valuation, a: PropFormula) -> TruthValue:
    match a:
        case PropAtom(index):
            return v.value(index)
        case PropNot(operand):
            return eval_param(v, operand).negation()
        case PropAnd(left, right):
            return eval_param(v, left).meet(eval_param(v, right))
        case PropOr(left, right):
            return eval_param(v, left).join(eval_param(v, right))
        case PropImplies(left, right):
            return eval_param(v, left).negation().join(eval_param(v, right))
    raise TypeError(f"not a parameter formula: {a!r}")


def theory_membership(v: Valuation, a: PropFormula) -> Membership:
    value = eval_param(v, a)
    return Membership(value.designated, value.antidesignated)


def valuation_from_theory(
    atoms: Iterable[int],
    member: Callable[[PropFormula], bool],
    flavor: Flavor = Flavor.B4,
) -> Valuation:
    """Read a valuation off a complete theory given as a membership test.

    ``v(p)`` is 1 if ``p ∈ A`` and ``∼p ∉ A``, 0 if ``∼p ∈ A`` and ``p ∉ A``,
    B if both are members and N if neither is.

    Raises:
        ValuationError: the theory needs a value *flavor* does not admit.
    """
    read = {}
    for atom in sorted(set(atoms)):
        p = PropAtom(atom)
        read[atom] = TruthValue.from_told(member(p), member(PropNot(p)))
    return Valuation.of(read, flavor)


def enumerate_valuations(atoms: Iterable[int], flavor: Flavor = Flavor.B4) -> Iterator[Valuation]:
    """All *flavor* valuations over *atoms*, lexicographically.

    Atoms are sorted by index with the first one most significant; values run
    Zero < Neither < Both < One.
    """
    ordered = sorted(set(atoms))
    for combo in product(flavor.values, repeat=len(ordered)):
        yield Valuation(tuple(zip(ordered, combo)), flavor)


# ---------------------------------------------------------------------------
# Text form: p0=1 p1=B *=N
# ---------------------------------------------------------------------------

def valuation_from_entries(entries, flavor: Flavor = Flavor.B4) -> Valuation:
    """Build a valuation from parsed ``(atom, token)`` / ``("*", token)`` entries."""
    fill = None
    pairs = []
    for key, token in entries:
        if key == "*":
            if fill is not None:
                raise ValuationError("fill value given twice")
            fill = TruthValue.parse(token)
        else:
            pairs.append((key, TruthValue.parse(token)))
    return Valuation(tuple(pairs), flavor, fill)


def parse_valuation(text: str, flavor: Flavor = Flavor.B4) -> Valuation:
    return valuation_from_entries(parse_fragment(text, "valuation_text"), flavor)


def render_valuation(v: Valuation) -> str:
    parts = [f"p{atom}={value.value}" for atom, value in v.values]
    if v.fill is not None:
        parts.append(f"*={v.fill.value}")
    return " ".join(parts)
