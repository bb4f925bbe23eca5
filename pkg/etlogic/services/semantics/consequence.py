"""
Extensional consequence — Φ ⊩ φ decided over the enumerable model family.

A model of the family is fixed by its flavor, a theory valuation over the
occurring parameter atoms and a value class for each occurring constant; an
interpretation adds an assignment of the free variables. Everything is
scanned in a fixed order:

    flavors as given → theory valuations → constant classes → assignments

each level lexicographic in the lattice's enumeration order, so the first
counterexample found is reproducible.

--- WHERE TO CHANGE IF THE BUDGET POLICY CHANGES ---
``interpretation_count`` is the precheck; the CLI ``consequence`` command
and ``calculus.corpus.soundness_counterexample`` both go through it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, Sequence

from ..manyvalued import Valuation, enumerate_valuations
from ..syntax import Formula, Variable, constants, formula_prop_atoms, free_vars
from .gamma import satisfies
from .model import (
    NON_DEGENERATE_FLAVORS,
    UNIT_FLAVORS,
    Assignment,
    ExtensionalModel,
    ModelFlavor,
    build_model,
)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000


class ConsequenceStatus(str, Enum):
    VALID = "valid"
    COUNTEREXAMPLE = "counterexample"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True, slots=True)
class Counterexample:
    model: ExtensionalModel
    assignment: Assignment


@dataclass(frozen=True, slots=True)
class ConsequenceResult:
    status: ConsequenceStatus
    counter: Counterexample | None = None
    examined: int = 0
    required: int = 0

    @property
    def valid_over_family(self) -> bool:
        return self.status is ConsequenceStatus.VALID


@dataclass(frozen=True, slots=True)
class Signature:
    """The occurring parameter atoms, constant names and free variables."""

    atoms: tuple[int, ...]
    constants: tuple[str, ...]
    variables: tuple[Variable, ...]

    @classmethod
    def of(cls, formulas: Iterable[Formula]) -> Signature:
        atoms: set[int] = set()
        names: set[str] = set()
        free: set[Variable] = set()
        for f in formulas:
            atoms |= formula_prop_atoms(f)
            names |= {c.name for c in constants(f)}
            free |= free_vars(f)
        return cls(tuple(sorted(atoms)), tuple(sorted(names)), tuple(sorted(free, key=lambda v: v.index)))


def family_flavors(
    flavors: Sequence[ModelFlavor] | None = None,
    *,
    include_unit_models: bool = False,
) -> tuple[ModelFlavor, ...]:
    chosen = list(dict.fromkeys(flavors or NON_DEGENERATE_FLAVORS))
    if include_unit_models:
        chosen += [f for f in UNIT_FLAVORS if f not in chosen]
    return tuple(chosen)


def interpretation_count(flavors: Iterable[ModelFlavor], signature: Signature) -> int:
    width = len(signature.atoms) + len(signature.constants) + len(signature.variables)
    total = 0
    for flavor in flavors:
        if flavor.is_degenerate:
            total += 1
        else:
            total += len(flavor.universe) ** width
    return total


def iter_models(flavor: ModelFlavor, signature: Signature) -> Iterator[ExtensionalModel]:
    if flavor.is_degenerate:
        yield build_model(flavor)
        return
    theories: Iterable[Valuation] = enumerate_valuations(signature.atoms, flavor.parameter_flavor)
    for theory in theories:
        for classes in product(flavor.universe, repeat=len(signature.constants)):
            yield build_model(flavor, theory, zip(signature.constants, classes))


def iter_assignments(model: ExtensionalModel, variables: Sequence[Variable]) -> Iterator[Assignment]:
    default = model.universe[0]
    for values in product(model.universe, repeat=len(variables)):
        yield Assignment(tuple((v.index, m) for v, m in zip(variables, values)), default)


def iter_interpretations(
    flavors: Iterable[ModelFlavor],
    signature: Signature,
) -> Iterator[tuple[ExtensionalModel, Assignment]]:
    for flavor in flavors:
        for model in iter_models(flavor, signature):
            for gamma in iter_assignments(model, signature.variables):
                yield model, gamma


def extensional_consequence(
    premises: Iterable[Formula],
    conclusion: Formula,
    flavors: Sequence[ModelFlavor] | None = None,
    *,
    include_unit_models: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> ConsequenceResult:
    """Is *conclusion* satisfied by every interpretation satisfying all *premises*?

    Refuses to start (``BUDGET_EXCEEDED``) when the family has more than
    *budget* interpretations over the occurring symbols.
    """
    premises = tuple(premises)
    family = family_flavors(flavors, include_unit_models=include_unit_models)
    signature = Signature.of((*premises, conclusion))
    required = interpretation_count(family, signature)
    if required > budget:
        logger.warning("consequence refused: %d interpretations needed, budget %d", required, budget)
        return ConsequenceResult(ConsequenceStatus.BUDGET_EXCEEDED, examined=0, required=required)

    logger.debug(
        "consequence over %s: %d atoms, %d constants, %d variables, %d interpretations",
        [f.value for f in family],
        len(signature.atoms),
        len(signature.constants),
        len(signature.variables),
        required,
    )
    examined = 0
    for model, gamma in iter_interpretations(family, signature):
        examined += 1
        if all(satisfies(model, gamma, p) for p in premises) and not satisfies(model, gamma, conclusion):
            return ConsequenceResult(ConsequenceStatus.COUNTEREXAMPLE, Counterexample(model, gamma), examined, required)
    return ConsequenceResult(ConsequenceStatus.VALID, examined=examined, required=required)


def is_satisfiable(
    formulas: Iterable[Formula],
    flavors: Sequence[ModelFlavor] | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
) -> Counterexample | None:
    """First interpretation satisfying all *formulas*, or None."""
    formulas = tuple(formulas)
    family = family_flavors(flavors)
    signature = Signature.of(formulas)
    required = interpretation_count(family, signature)
    if required > budget:
        raise ValueError(f"satisfiability search needs {required} interpretations, budget {budget}")
    for model, gamma in iter_interpretations(family, signature):
        if all(satisfies(model, gamma, f) for f in formulas):
            return Counterexample(model, gamma)
    return None
