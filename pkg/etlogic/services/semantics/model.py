"""
Extensional models — the finite ∈T models whose propositions are truth values.

The universe ``M`` is a sublattice of ``{1, 0, B, N}`` chosen by the flavor:

    classical  {0, 1}        K3  {0, N, 1}
    P3         {0, B, 1}     B4  {0, N, B, 1}

``TRUE`` is the designated part of ``M`` and ``FALSE`` the antidesignated part,
so ``|m| = m`` for every element. Constants are interpreted by a partition
into value classes and parameter formulas by the underlying theory valuation.
Reference is total (``<^M = M × M``).

The two one-element models are the degenerate flavors: ``unit-empty``
(``M = {N}``, nothing is true or false, theory ∅) and ``unit-full``
(``M = {B}``, everything is both, theory = all expressions).

--- WHERE TO CHANGE IF A FLAVOR IS ADDED ---
``ModelFlavor`` and ``_UNIVERSES`` here, the flavor laws in
``ExtensionalModel.flavor_law_violations`` and the enumeration in
``semantics.consequence``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from ..manyvalued import Flavor, TruthValue, Valuation, ValuationError, valuation_from_entries
from ..manyvalued.lattice import ENUMERATION_ORDER
from ..syntax import Variable, parse_fragment

logger = logging.getLogger(__name__)


class ModelBuildError(ValueError):
    """The requested model mixes values its flavor does not admit."""


class ModelEvaluationError(ValueError):
    """Γ was asked about a constant, atom or assignment outside the model."""


class ModelFlavor(str, Enum):
    CLASSICAL = "classical"
    K3 = "k3"
    P3 = "p3"
    B4 = "b4"
    UNIT_EMPTY = "unit-empty"
    UNIT_FULL = "unit-full"

    @classmethod
    def parse(cls, name: str | Flavor) -> ModelFlavor:
        if isinstance(name, Flavor):
            return cls(name.value)
        return cls(name.strip().lower())

    @property
    def is_degenerate(self) -> bool:
        return self in (ModelFlavor.UNIT_EMPTY, ModelFlavor.UNIT_FULL)

    @property
    def parameter_flavor(self) -> Flavor:
        """Flavor tag for the theory valuation (B4 for the one-element models)."""
        return Flavor.B4 if self.is_degenerate else Flavor(self.value)

    @property
    def universe(self) -> tuple[TruthValue, ...]:
        return _UNIVERSES[self]


_UNIVERSES: dict[ModelFlavor, tuple[TruthValue, ...]] = {
    ModelFlavor.CLASSICAL: Flavor.CLASSICAL.values,
    ModelFlavor.K3: Flavor.K3.values,
    ModelFlavor.P3: Flavor.P3.values,
    ModelFlavor.B4: Flavor.B4.values,
    ModelFlavor.UNIT_EMPTY: (TruthValue.NEITHER,),
    ModelFlavor.UNIT_FULL: (TruthValue.BOTH,),
}

NON_DEGENERATE_FLAVORS: tuple[ModelFlavor, ...] = (
    ModelFlavor.CLASSICAL,
    ModelFlavor.K3,
    ModelFlavor.P3,
    ModelFlavor.B4,
)
UNIT_FLAVORS: tuple[ModelFlavor, ...] = (ModelFlavor.UNIT_EMPTY, ModelFlavor.UNIT_FULL)


@dataclass(frozen=True, slots=True)
class ExtensionalModel:
    flavor: ModelFlavor
    theory: Valuation
    constants: tuple[tuple[str, TruthValue], ...] = ()
    _table: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_table", dict(self.constants))

    @property
    def universe(self) -> tuple[TruthValue, ...]:
        return self.flavor.universe

    @property
    def true_set(self) -> frozenset[TruthValue]:
        return frozenset(m for m in self.universe if m.designated)

    @property
    def false_set(self) -> frozenset[TruthValue]:
        return frozenset(m for m in self.universe if m.antidesignated)

    def classify(self, element: TruthValue) -> TruthValue:
        """``|m|``: the truth value an element has by its TRUE/FALSE membership."""
        return TruthValue.from_told(element in self.true_set, element in self.false_set)

    def refers(self, first: TruthValue, second: TruthValue) -> bool:
        """Semantic reference ``<^M``; total in extensional models."""
        return first in self.universe and second in self.universe

    def constant_value(self, name: str) -> TruthValue:
        try:
            return self._table[name]
        except KeyError:
            if self.flavor.is_degenerate:
                return self.universe[0]
            raise ModelEvaluationError(f"constant ${name} has no value class in this model") from None

    def flavor_law_violations(self) -> list[str]:
        true_set, false_set, universe = self.true_set, self.false_set, frozenset(self.universe)
        disjoint = not (true_set & false_set)
        exhaustive = (true_set | false_set) == universe
        expected = {
            ModelFlavor.CLASSICAL: (True, True),
            ModelFlavor.K3: (True, False),
            ModelFlavor.P3: (False, True),
            ModelFlavor.B4: (False, False),
            ModelFlavor.UNIT_EMPTY: (True, False),
            ModelFlavor.UNIT_FULL: (False, True),
        }[self.flavor]
        out = []
        if disjoint != expected[0]:
            out.append("TRUE ∩ FALSE = ∅" if expected[0] else "TRUE ∩ FALSE ≠ ∅")
        if exhaustive != expected[1]:
            out.append("M = TRUE ∪ FALSE" if expected[1] else "M ≠ TRUE ∪ FALSE")
        return out

    def __str__(self) -> str:
        return render_model(self)


def build_model(
    flavor: ModelFlavor | Flavor | str,
    theory: Valuation | None = None,
    constants: Mapping[str, TruthValue] | Iterable[tuple[str, TruthValue]] | None = None,
) -> ExtensionalModel:
    """Build an extensional model, checking every value against the flavor's universe.

    Without a theory, non-degenerate models get an empty one (parameter
    formulas then fail to evaluate) and the one-element models get the
    constant theory of their sole element.

    Raises:
        ModelBuildError: a theory value or constant class outside ``M``.
    """
    flavor = flavor if isinstance(flavor, ModelFlavor) else ModelFlavor.parse(flavor)
    universe = flavor.universe
    if theory is None:
        theory = (
            Valuation.constant(universe[0], Flavor.B4)
            if flavor.is_degenerate
            else Valuation((), flavor.parameter_flavor)
        )
    for value in sorted(theory.value_set(), key=ENUMERATION_ORDER.index):
        if value not in universe:
            raise ModelBuildError(f"theory value {value} is not admitted by flavor {flavor.value}")
    try:
        theory = Valuation(theory.values, flavor.parameter_flavor, theory.fill)
    except ValuationError as exc:
        raise ModelBuildError(str(exc)) from exc

    items = constants.items() if isinstance(constants, Mapping) else (constants or ())
    partition: dict[str, TruthValue] = {}
    for name, raw in items:
        value = TruthValue(raw)
        if value not in universe:
            raise ModelBuildError(
                f"constant ${name} has class {value}, which flavor {flavor.value} does not admit"
            )
        partition[name] = value
    model = ExtensionalModel(flavor, theory, tuple(sorted(partition.items())))
    logger.debug("built %s model: theory=%s constants=%s", flavor.value, theory, partition)
    return model


# ---------------------------------------------------------------------------
# Assignments
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Assignment:
    """γ : V → M with finitely many explicit entries and a default element."""

    values: tuple[tuple[int, TruthValue], ...] = ()
    default: TruthValue = TruthValue.ZERO
    _table: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        table = {int(index): TruthValue(value) for index, value in self.values}
        object.__setattr__(self, "default", TruthValue(self.default))
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "values", tuple(sorted(table.items())))

    @classmethod
    def of(
        cls,
        mapping: Mapping[Variable | int, TruthValue] | None = None,
        default: TruthValue = TruthValue.ZERO,
    ) -> Assignment:
        mapping = mapping or {}
        items = tuple((k.index if isinstance(k, Variable) else int(k), v) for k, v in mapping.items())
        return cls(items, default)

    def __call__(self, var: Variable) -> TruthValue:
        return self._table.get(var.index, self.default)

    def updated(self, var: Variable, element: TruthValue) -> Assignment:
        """γ_x^m."""
        table = dict(self._table)
        table[var.index] = element
        return Assignment(tuple(table.items()), self.default)

    def elements(self) -> frozenset[TruthValue]:
        return frozenset(self._table.values()) | {self.default}

    def agrees_with(self, other: Assignment, on: Iterable[Variable]) -> bool:
        return all(self(var) == other(var) for var in on)

    def __str__(self) -> str:
        return render_assignment(self)


def check_assignment(model: ExtensionalModel, gamma: Assignment) -> None:
    stray = sorted(gamma.elements() - frozenset(model.universe), key=ENUMERATION_ORDER.index)
    if stray:
        raise ModelEvaluationError(
            f"assignment uses {', '.join(map(str, stray))}, outside the {model.flavor.value} universe"
        )


# ---------------------------------------------------------------------------
# Text forms
#   model:       flavor=b4 theory{p0=B p1=N} consts{$c=B $d=1} default=N
#   assignment:  v0=1 v1=B *=N
# ---------------------------------------------------------------------------

def parse_model(text: str) -> tuple[ExtensionalModel, TruthValue | None]:
    """Parse a model description; returns the model and its declared default element."""
    flavor_name, parts = parse_fragment(text, "model_text")
    flavor = ModelFlavor.parse(flavor_name)
    theory: Valuation | None = None
    constants: dict[str, TruthValue] = {}
    default: TruthValue | None = None
    for kind, payload in parts:
        if kind == "theory":
            try:
                theory = valuation_from_entries(payload, Flavor.B4)
            except ValuationError as exc:
                raise ModelBuildError(str(exc)) from exc
        elif kind == "consts":
            for name, token in payload:
                if name in constants:
                    raise ModelBuildError(f"constant ${name} is classified twice")
                constants[name] = TruthValue.parse(token)
        else:
            default = TruthValue.parse(payload)
    model = build_model(flavor, theory, constants)
    if default is not None and default not in model.universe:
        raise ModelBuildError(f"default element {default} is not in the {flavor.value} universe")
    return model, default


def render_model(model: ExtensionalModel, default: TruthValue | None = None) -> str:
    theory_entries = [f"p{atom}={value.value}" for atom, value in model.theory.values]
    if model.theory.fill is not None:
        theory_entries.append(f"*={model.theory.fill.value}")
    consts = [f"${name}={value.value}" for name, value in model.constants]
    text = f"flavor={model.flavor.value} theory{{{' '.join(theory_entries)}}} consts{{{' '.join(consts)}}}"
    if default is not None:
        text += f" default={default.value}"
    return text


def parse_assignment(text: str, default: TruthValue = TruthValue.ZERO) -> Assignment:
    entries = parse_fragment(text, "assignment_text")
    table: dict[int, TruthValue] = {}
    for key, token in entries:
        if key == "*":
            default = TruthValue.parse(token)
        elif key in table:
            raise ModelEvaluationError(f"variable v{key} is assigned twice")
        else:
            table[key] = TruthValue.parse(token)
    return Assignment(tuple(table.items()), default)


def render_assignment(gamma: Assignment) -> str:
    parts = [f"v{index}={value.value}" for index, value in gamma.values]
    parts.append(f"*={gamma.default.value}")
    return " ".join(parts)
