"""Tests for the ∈T formula language: parser, renderer and structural queries.

Pins the concrete syntax (precedence, ``->`` sugar, braces for parameter
formulas), the parse/render round trip, and the error report a user sees
for bad input (byte span, expected tokens, reason).
"""

from __future__ import annotations

import pytest
from hypothesis import given

from etlogic.services.syntax import (
    And,
    Constant,
    Exists,
    FalseOp,
    Forall,
    FormulaSyntaxError,
    Identity,
    Or,
    ParamExpr,
    PropAnd,
    PropAtom,
    PropImplies,
    PropNot,
    Reference,
    SourceSpan,
    SyntaxErrorKind,
    TruthOp,
    Variable,
    constants,
    fcl,
    formula_depth,
    free_vars,
    is_closed,
    is_intended,
    param_exprs,
    parse_formula,
    parse_propositional,
    render_formula,
    render_propositional,
    subformulas,
    variables,
)
from tests.strategies import FormulaGenerator, formulas, prop_formulas

v0, v1, v2 = Variable(0), Variable(1), Variable(2)
c = Constant("c")


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

class TestParse:
    def test_postfix_truth(self):
        assert parse_formula("v0 :true") == TruthOp(v0)

    def test_liar_equation(self):
        assert parse_formula("$c == ($c :false)") == Identity(c, FalseOp(c))

    def test_quantifier_scope_is_maximal(self):
        assert parse_formula("ex v0 . v0 == v0") == Exists(v0, Identity(v0, v0))

    def test_forall_body_takes_the_disjunction(self):
        assert parse_formula("all v1 . v1 \\/ v0") == Forall(v1, Or(v1, v0))

    def test_conjunction_binds_tighter_than_disjunction(self):
        assert parse_formula("v0 /\\ v1 \\/ v2") == Or(And(v0, v1), v2)

    def test_disjunction_is_left_associative(self):
        assert parse_formula("v0 \\/ v1 \\/ v2") == Or(Or(v0, v1), v2)

    def test_stacked_postfix(self):
        assert parse_formula("v0 :true :false") == FalseOp(TruthOp(v0))

    def test_arrow_expands_to_false_or(self):
        assert parse_formula("v0 -> v1") == Or(FalseOp(v0), v1)

    def test_arrow_is_right_associative(self):
        assert parse_formula("v0 -> v1 -> v2") == Or(FalseOp(v0), Or(FalseOp(v1), v2))

    def test_relation_is_loosest(self):
        assert parse_formula("v0 \\/ v1 < v2") == Reference(Or(v0, v1), v2)

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("v0 \\/ ex v1 . v1", Or(v0, Exists(v1, v1))),
            ("$c == ex v0 . v0", Identity(c, Exists(v0, v0))),
            ("$c < all v0 . v0 :true", Reference(c, Forall(v0, TruthOp(v0)))),
            ("v0 /\\ ex v1 . v1 \\/ v2", And(v0, Exists(v1, Or(v1, v2)))),
            ("v0 \\/ v1 /\\ all v2 . v2", Or(v0, And(v1, Forall(v2, v2)))),
            ("v0 -> ex v1 . v1", Or(FalseOp(v0), Exists(v1, v1))),
            ("v0 == v1 -> all v2 . v2 == v2", Identity(v0, Or(FalseOp(v1), Forall(v2, Identity(v2, v2))))),
        ],
    )
    def test_quantifier_as_last_operand(self, text, expected):
        assert parse_formula(text) == expected

    def test_parameter_formula_leaf(self):
        assert parse_formula("{p0 & ~p1}") == ParamExpr(PropAnd(PropAtom(0), PropNot(PropAtom(1))))

    def test_whitespace_is_insignificant(self):
        assert parse_formula("  $c==($c:false) ") == parse_formula("$c == ($c :false)")

    def test_bytes_input_is_utf8(self):
        assert parse_formula(b"v0 :true") == TruthOp(v0)

    def test_parse_is_deterministic(self):
        text = "all v0 . ex v1 . (v0 < v1) /\\ {p0 => p1} == $c :false"
        assert parse_formula(text) == parse_formula(text)


class TestParsePropositional:
    def test_braces_are_optional(self):
        assert parse_propositional("{p0 & ~p1}") == parse_propositional("p0 & ~p1")

    def test_implication_is_right_associative(self):
        a = parse_propositional("p0 => p1 => p2")
        assert a == PropImplies(PropAtom(0), PropImplies(PropAtom(1), PropAtom(2)))

    def test_rejects_a_non_parameter_formula_in_braces(self):
        with pytest.raises(FormulaSyntaxError):
            parse_propositional("{p0} \\/ v0")


class TestSyntaxErrors:
    def test_relations_do_not_chain(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("v0 == v1 == v2")
        assert info.value.kind is SyntaxErrorKind.SYNTAX
        assert info.value.span.start == 9

    def test_missing_close_paren_is_unbalanced(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("(v0 \\/ v1")
        assert info.value.kind is SyntaxErrorKind.UNBALANCED
        assert ")" in info.value.expected

    def test_stray_close_paren_is_unbalanced(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("v0 )")
        assert info.value.kind is SyntaxErrorKind.UNBALANCED

    def test_unknown_character(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("v0 @ v1")
        assert info.value.kind is SyntaxErrorKind.UNKNOWN_TOKEN
        assert info.value.span == SourceSpan(3, 4)

    def test_span_counts_bytes(self):
        # "∨" is three bytes in UTF-8
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("v0 ∨ v1")
        assert info.value.span == SourceSpan(3, 6)

    def test_expected_set_is_reported(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("v0 ==")
        assert info.value.expected
        assert "end of input" in str(info.value)

    def test_diagnostic_has_a_caret(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("v0 @ v1")
        assert info.value.diagnostic().splitlines()[-1].strip() == "^"

    def test_span_must_be_ordered(self):
        with pytest.raises(ValueError):
            SourceSpan(4, 2)

    def test_invalid_utf8(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula(b"v0 \\/ \xff")
        assert info.value.kind is SyntaxErrorKind.ENCODING
        assert info.value.span == SourceSpan(6, 7)
        assert info.value.diagnostic().splitlines()[-1].strip() == "^"

    def test_invalid_utf8_in_a_parameter_formula(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_propositional(b"p0 & \xc3")
        assert info.value.kind is SyntaxErrorKind.ENCODING
        assert info.value.span.start == 5


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

class TestRender:
    def test_postfix(self):
        assert render_formula(TruthOp(v0)) == "v0 :true"

    def test_liar(self):
        assert render_formula(Identity(c, FalseOp(c))) == "$c == ($c :false)"

    def test_precedence_needs_no_parentheses(self):
        assert render_formula(Or(And(v0, v1), v2)) == "v0 /\\ v1 \\/ v2"

    def test_right_nested_disjunction_is_wrapped(self):
        assert render_formula(Or(v0, Or(v1, v2))) == "v0 \\/ (v1 \\/ v2)"

    def test_quantifier_operand_is_wrapped(self):
        assert render_formula(And(Exists(v0, v0), v1)) == "(ex v0 . v0) /\\ v1"

    @pytest.mark.parametrize("text", ["v0 \\/ ex v1 . v1", "$c == ex v0 . v0", "v0 /\\ all v1 . v1 < v0"])
    def test_trailing_quantifier_round_trip(self, text):
        f = parse_formula(text)
        rendered = render_formula(f)
        assert "(" in rendered
        assert parse_formula(rendered) == f

    def test_nested_relation_is_wrapped(self):
        assert render_formula(Identity(Identity(v0, v1), v2)) == "(v0 == v1) == v2"

    def test_implication_renders_expanded(self):
        assert render_formula(parse_formula("v0 -> v1")) == "(v0 :false) \\/ v1"

    def test_propositional(self):
        assert render_propositional(parse_propositional("~(p0 & p1) | p2 => p0")) == "~(p0 & p1) | p2 => p0"
        assert render_propositional(parse_propositional("(p0 => p1) => p2")) == "(p0 => p1) => p2"

    @given(formulas)
    def test_round_trip(self, f):
        assert parse_formula(render_formula(f)) == f

    @given(prop_formulas)
    def test_propositional_round_trip(self, a):
        assert parse_propositional(render_propositional(a)) == a


@pytest.mark.slow
def test_round_trip_bulk_depth_eight():
    gen = FormulaGenerator(seed=8)
    for _ in range(10_000):
        f = gen.formula(depth=8)
        assert parse_formula(render_formula(f)) == f


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------

class TestFreeVars:
    def test_bound_variable_drops_out(self):
        assert free_vars(parse_formula("all v0 . v0 < v1")) == {v1}

    def test_repeated_variable(self):
        assert free_vars(parse_formula("v0 \\/ v0")) == {v0}

    def test_closed(self):
        f = parse_formula("ex v0 . v0 == v0")
        assert free_vars(f) == frozenset()
        assert is_closed(f)

    def test_parameter_atoms_are_not_variables(self):
        assert free_vars(parse_formula("{p0 | p1}")) == frozenset()

    @given(formulas)
    def test_free_vars_are_variables(self, f):
        assert free_vars(f) <= variables(f)


class TestIntended:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("ex v0 . $c", False),
            ("all v0 . ex v0 . v0", False),
            ("ex v0 . v0 :true", True),
            ("$c == ($c :false)", True),
        ],
    )
    def test_examples(self, text, expected):
        assert is_intended(parse_formula(text)) is expected

    @given(formulas)
    def test_hereditary(self, f):
        if is_intended(f):
            assert all(is_intended(g) for g in subformulas(f))


class TestSubformulas:
    def test_atom(self):
        assert subformulas(v0) == [v0]

    def test_binary_preorder(self):
        assert subformulas(Or(v0, v1)) == [Or(v0, v1), v0, v1]

    def test_binder_preorder(self):
        f = Exists(v0, TruthOp(v0))
        assert subformulas(f) == [f, TruthOp(v0), v0]


def test_atom_collections():
    f = parse_formula("ex v0 . v0 == $c \\/ {p0} /\\ v3")
    assert constants(f) == {c}
    assert param_exprs(f) == {ParamExpr(PropAtom(0))}
    assert fcl(f) == {c, ParamExpr(PropAtom(0)), Variable(3)}
    assert variables(f) == {v0, Variable(3)}


def test_formula_depth():
    assert formula_depth(v0) == 0
    assert formula_depth(parse_formula("{p0 & p1}")) == 0
    assert formula_depth(parse_formula("ex v0 . v0 :true")) == 2
