"""Tests for extensional models, Γ and extensional consequence.

Pins the universes per flavor, the denotation clauses (identity is
extensional, reference is total), the liar and truth-teller results, the
truth and structure conditions on random instances, and the reproducible
order in which consequence reports its first counterexample.
"""

from __future__ import annotations

import pytest

from etlogic.services.manyvalued import Flavor, TruthValue, Valuation
from etlogic.services.semantics import (
    NON_DEGENERATE_FLAVORS,
    UNIT_FLAVORS,
    Assignment,
    ConsequenceStatus,
    ModelBuildError,
    ModelEvaluationError,
    ModelFlavor,
    Signature,
    SubstitutionDomainError,
    build_model,
    eval_gamma,
    extensional_consequence,
    family_flavors,
    interpretation_count,
    is_satisfiable,
    iter_interpretations,
    parse_assignment,
    parse_model,
    render_assignment,
    render_model,
    satisfies,
    structure_condition_violations,
    substituted_assignment,
    truth_condition_violations,
    verify_substitution_property,
)
from etlogic.services.substitution import Substitution
from etlogic.services.syntax import Constant, Variable, parse_formula
from tests.strategies import FormulaGenerator

ZERO, NEITHER, BOTH, ONE = TruthValue.ZERO, TruthValue.NEITHER, TruthValue.BOTH, TruthValue.ONE
ALL_FLAVORS = (*NON_DEGENERATE_FLAVORS, *UNIT_FLAVORS)
v0, v1 = Variable(0), Variable(1)
F = parse_formula
LIAR = "$c == ($c :false)"


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------

class TestModels:
    @pytest.mark.parametrize(
        "flavor, universe",
        [
            (ModelFlavor.CLASSICAL, (ZERO, ONE)),
            (ModelFlavor.K3, (ZERO, NEITHER, ONE)),
            (ModelFlavor.P3, (ZERO, BOTH, ONE)),
            (ModelFlavor.B4, (ZERO, NEITHER, BOTH, ONE)),
            (ModelFlavor.UNIT_EMPTY, (NEITHER,)),
            (ModelFlavor.UNIT_FULL, (BOTH,)),
        ],
    )
    def test_universe(self, flavor, universe):
        assert build_model(flavor).universe == universe

    @pytest.mark.parametrize("flavor", ALL_FLAVORS)
    def test_flavor_laws(self, flavor):
        assert build_model(flavor).flavor_law_violations() == []

    def test_true_and_false_sets(self):
        model = build_model(ModelFlavor.B4)
        assert model.true_set == {ONE, BOTH}
        assert model.false_set == {ZERO, BOTH}
        assert all(model.classify(m) is m for m in model.universe)

    def test_unit_models_are_empty_and_full(self):
        empty, full = build_model(ModelFlavor.UNIT_EMPTY), build_model(ModelFlavor.UNIT_FULL)
        assert empty.true_set == frozenset() and empty.false_set == frozenset()
        assert full.true_set == {BOTH} and full.false_set == {BOTH}

    def test_flavor_parse(self):
        assert ModelFlavor.parse(" Unit-Full ") is ModelFlavor.UNIT_FULL
        assert ModelFlavor.parse(Flavor.K3) is ModelFlavor.K3
        assert ModelFlavor.UNIT_EMPTY.parameter_flavor is Flavor.B4

    def test_constant_outside_universe(self):
        with pytest.raises(ModelBuildError):
            build_model(ModelFlavor.K3, constants={"c": BOTH})

    def test_theory_outside_universe(self):
        with pytest.raises(ModelBuildError):
            build_model(ModelFlavor.P3, Valuation.of({0: NEITHER}))

    def test_unit_model_classifies_every_constant(self):
        assert build_model(ModelFlavor.UNIT_EMPTY).constant_value("anything") is NEITHER

    def test_unknown_constant(self):
        with pytest.raises(ModelEvaluationError):
            eval_gamma(build_model(ModelFlavor.B4), Constant("c"), Assignment.of())

    def test_reference_is_total(self, standard_model):
        assert all(standard_model.refers(a, b) for a in standard_model.universe for b in standard_model.universe)


class TestTextForms:
    def test_model_round_trip(self):
        text = "flavor=b4 theory{p0=B p1=N} consts{$c=B $d=1} default=N"
        model, default = parse_model(text)
        assert default is NEITHER
        assert model.constant_value("c") is BOTH
        assert render_model(model, default) == text

    def test_model_without_default(self):
        model, default = parse_model("flavor=k3 theory{*=N} consts{}")
        assert default is None
        assert model.theory.value(9) is NEITHER

    def test_default_outside_universe(self):
        with pytest.raises(ModelBuildError):
            parse_model("flavor=classical theory{} consts{} default=B")

    def test_constant_classified_twice(self):
        with pytest.raises(ModelBuildError):
            parse_model("flavor=b4 theory{} consts{$c=B $c=1}")

    def test_assignment_round_trip(self):
        gamma = parse_assignment("v1=B v0=1 *=N")
        assert gamma(v0) is ONE and gamma(Variable(5)) is NEITHER
        assert render_assignment(gamma) == "v0=1 v1=B *=N"

    def test_assignment_repeats_a_variable(self):
        with pytest.raises(ModelEvaluationError):
            parse_assignment("v0=1 v0=0")


# ---------------------------------------------------------------------------
# Γ
# ---------------------------------------------------------------------------

class TestGamma:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("ex v0 . v0", ONE),
            ("all v0 . v0", ZERO),
            ("{p2 | p3}", ONE),
            ("{p0 & ~p1}", ONE),
            ("$c /\\ $n", ZERO),
            ("$c :false", BOTH),
            ("$c == $d", ZERO),
            ("$e < $n", ONE),
            ("ex v0 . v0 == $c", ONE),
            ("all v0 . v0 == $c", ZERO),
        ],
    )
    def test_examples(self, standard_model, text, expected):
        assert eval_gamma(standard_model, F(text), Assignment.of()) is expected

    def test_variable_reads_the_assignment(self, standard_model):
        gamma = Assignment.of({v1: BOTH})
        assert eval_gamma(standard_model, v1, gamma) is BOTH
        assert eval_gamma(standard_model, v0, gamma) is ZERO

    def test_assignment_outside_universe(self):
        with pytest.raises(ModelEvaluationError):
            eval_gamma(build_model(ModelFlavor.K3), v0, Assignment.of({v0: BOTH}))

    def test_parameter_atom_outside_theory(self):
        with pytest.raises(ModelEvaluationError):
            eval_gamma(build_model(ModelFlavor.B4), F("{p0}"), Assignment.of())

    def test_unit_models_denote_their_element(self):
        for flavor in UNIT_FLAVORS:
            model = build_model(flavor)
            gamma = Assignment.of(default=model.universe[0])
            for text in ("v0 == v0", "$c < $d", "{p0 | ~p0}", "ex v0 . v0 :false"):
                assert eval_gamma(model, F(text), gamma) is model.universe[0]

    def test_unit_empty_satisfies_nothing(self):
        model = build_model(ModelFlavor.UNIT_EMPTY)
        assert not satisfies(model, Assignment.of(default=NEITHER), F("v0 == v0"))

    def test_unit_full_satisfies_everything(self):
        model = build_model(ModelFlavor.UNIT_FULL)
        gamma = Assignment.of(default=BOTH)
        assert satisfies(model, gamma, F("$c :false"))
        assert satisfies(model, gamma, F("all v0 . v0"))


class TestLiar:
    def test_glut_satisfies_it(self):
        model, default = parse_model("flavor=b4 theory{} consts{$c=B} default=N")
        gamma = Assignment.of(default=default)
        assert eval_gamma(model, F(LIAR), gamma) is ONE
        assert satisfies(model, gamma, F(LIAR))

    @pytest.mark.parametrize(
        "flavor, witness",
        [
            (ModelFlavor.B4, NEITHER),
            (ModelFlavor.P3, BOTH),
            (ModelFlavor.K3, NEITHER),
            (ModelFlavor.CLASSICAL, None),
        ],
    )
    def test_first_satisfying_class(self, flavor, witness):
        found = is_satisfiable([F(LIAR)], [flavor])
        if witness is None:
            assert found is None
        else:
            assert found.model.constant_value("c") is witness

    def test_classical_models_make_it_explosive(self):
        result = extensional_consequence([F(LIAR)], F("$d"), [ModelFlavor.CLASSICAL])
        assert result.status is ConsequenceStatus.VALID

    def test_truth_teller_is_valid(self):
        assert extensional_consequence([], F("$c == ($c :true)")).status is ConsequenceStatus.VALID

    def test_truth_of_an_existential_claim(self):
        assert extensional_consequence([], F("(ex v0 . v0 :false) :true == (ex v0 . v0 :false)")).valid_over_family

    def test_tarski_scheme(self):
        scheme = F("all v0 . (v0 :true) == v0")
        assert extensional_consequence([], scheme).valid_over_family
        signature = Signature.of([scheme, F("$c \\/ {p0}")])
        seen = set()
        for model, gamma in iter_interpretations(NON_DEGENERATE_FLAVORS, signature):
            assert eval_gamma(model, scheme, gamma) is ONE, render_model(model)
            seen.add(model.flavor)
        assert seen == set(NON_DEGENERATE_FLAVORS)

    def test_self_reference_is_admitted(self):
        assert extensional_consequence([], F("$c < ($c :true)")).valid_over_family


# ---------------------------------------------------------------------------
# Consequence
# ---------------------------------------------------------------------------

class TestConsequence:
    def test_signature(self):
        sig = Signature.of([F("$c \\/ {p0 | p2} \\/ v1"), F("ex v0 . v0 == $a")])
        assert sig.atoms == (0, 2)
        assert sig.constants == ("a", "c")
        assert sig.variables == (v1,)

    def test_interpretation_count(self):
        sig = Signature.of([F("$c \\/ {p0} \\/ v1")])
        assert interpretation_count(NON_DEGENERATE_FLAVORS, sig) == 8 + 27 + 27 + 64
        assert interpretation_count(family_flavors(include_unit_models=True), sig) == 128

    def test_family_flavors(self):
        assert family_flavors() == NON_DEGENERATE_FLAVORS
        assert family_flavors([ModelFlavor.B4, ModelFlavor.B4]) == (ModelFlavor.B4,)
        assert family_flavors([ModelFlavor.K3], include_unit_models=True) == (ModelFlavor.K3, *UNIT_FLAVORS)

    def test_enumeration_visits_every_interpretation(self):
        sig = Signature.of([F("$c == v0")])
        assert len(list(iter_interpretations(NON_DEGENERATE_FLAVORS, sig))) == interpretation_count(
            NON_DEGENERATE_FLAVORS, sig
        )

    def test_identity_of_a_variable(self):
        result = extensional_consequence([], F("v0 == v0"))
        assert result.status is ConsequenceStatus.VALID
        assert result.examined == result.required == 2 + 3 + 3 + 4

    def test_first_counterexample(self):
        result = extensional_consequence([F("$c \\/ $d"), F("$c :false")], F("$d"))
        assert result.status is ConsequenceStatus.COUNTEREXAMPLE
        model = result.counter.model
        assert model.flavor is ModelFlavor.P3
        assert (model.constant_value("c"), model.constant_value("d")) == (BOTH, ZERO)
        assert result.examined == 4 + 9 + 4
        assert result.required == 4 + 9 + 9 + 16

    def test_unit_empty_refutes_identity(self):
        result = extensional_consequence([], F("v0 == v0"), include_unit_models=True)
        assert result.status is ConsequenceStatus.COUNTEREXAMPLE
        assert result.counter.model.flavor is ModelFlavor.UNIT_EMPTY

    def test_budget_is_checked_first(self):
        result = extensional_consequence([], F("v0 == v1"), budget=1)
        assert result.status is ConsequenceStatus.BUDGET_EXCEEDED
        assert result.examined == 0
        assert result.required == 4 + 9 + 9 + 16

    def test_satisfiability_budget(self):
        with pytest.raises(ValueError):
            is_satisfiable([F("v0 == v1")], budget=1)


# ---------------------------------------------------------------------------
# Substitution in models
# ---------------------------------------------------------------------------

class TestSubstitutionProperty:
    def test_substituted_assignment(self, standard_model):
        sigma = Substitution.of({v0: F("$c :false"), v1: F("$d :false")})
        gamma = substituted_assignment(standard_model, sigma, Assignment.of({Variable(2): NEITHER}))
        assert gamma(v0) is BOTH
        assert gamma(v1) is ZERO
        assert gamma(Variable(2)) is NEITHER

    def test_example(self, standard_model):
        sigma = Substitution.of({v0: v1})
        gamma = Assignment.of({v1: BOTH})
        assert verify_substitution_property(standard_model, F("ex v1 . v0 == v1 /\\ v1"), sigma, gamma)

    def test_only_variables_may_move(self, standard_model):
        with pytest.raises(SubstitutionDomainError):
            verify_substitution_property(standard_model, F("$c"), Substitution.of({Constant("c"): v0}), Assignment.of())


# ---------------------------------------------------------------------------
# Conditions on random instances
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("flavor", ALL_FLAVORS, ids=lambda f: f.value)
def test_truth_conditions_hold(flavor):
    gen = FormulaGenerator(seed=ALL_FLAVORS.index(flavor))
    for _ in range(1000):
        model = gen.model(flavor)
        phi, psi = gen.formula(3), gen.formula(3)
        gamma = gen.assignment(model)
        param = gen.prop(1)
        assert truth_condition_violations(model, phi, psi, gamma, param) == [], (str(model), phi, psi)


@pytest.mark.parametrize("flavor", ALL_FLAVORS, ids=lambda f: f.value)
def test_structure_conditions_hold(flavor):
    gen = FormulaGenerator(seed=100 + ALL_FLAVORS.index(flavor))
    for _ in range(1000):
        model = gen.model(flavor)
        phi = gen.formula(3)
        psi = gen.formula(3)
        sigma = gen.substitution(variables_only=True)
        gamma, other = gen.assignment(model), gen.assignment(model)
        assert structure_condition_violations(model, phi, psi, sigma, gamma, other) == [], (str(model), phi, sigma)


def test_truth_conditions_report_names(standard_model):
    assert truth_condition_violations(standard_model, F("$c"), F("$n"), Assignment.of(), F("{p2}").expr) == []
