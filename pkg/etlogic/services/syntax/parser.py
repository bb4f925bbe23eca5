"""
Parser — one LALR grammar for every text form the toolkit reads.

Start symbols:

- ``formula_text``      ∈T formulas (``$c == ($c :false)``)
- ``prop_text``         bare parameter formulas (``p0 & ~p1``)
- ``substitution_text`` ``[v0 := $c; {p0} := v1]``
- ``valuation_text``    ``p0=1 p1=B *=N``
- ``assignment_text``   ``v0=1 *=N``
- ``model_text``        ``flavor=b4 theory{p0=B} consts{$c=B} default=N``
- ``step_line`` / ``final_line``  one line of a proof file

Precedence, tightest first: postfix ``:true``/``:false``; ``/\\`` (left);
``\\/`` (left); ``->`` (right, expanded to ``(lhs :false) \\/ rhs``);
``==`` and ``<`` (non-associative). Quantifiers ``ex v<N> .`` / ``all v<N> .``
take everything to their right: a quantifier may start a formula, sit inside
parentheses, or be the last operand of an operator chain (``v0 \\/ ex v1 . v1``).

The transformer runs inline with the LALR parser, so no parse tree is built.
Text forms other than formulas come back as plain tuples and value tokens;
the owning service packages turn them into domain objects.

--- WHERE TO CHANGE IF THE CONCRETE SYNTAX CHANGES ---
Edit ``GRAMMAR`` and the matching ``_Builder`` callback, then ``render.py`` so
the round trip ``parse_formula(render_formula(f)) == f`` keeps holding.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken
from lark.lexer import PatternStr

from .terms import (
    And,
    Constant,
    Exists,
    FalseOp,
    Forall,
    Formula,
    Identity,
    Or,
    ParamExpr,
    PropAnd,
    PropAtom,
    PropFormula,
    PropImplies,
    PropNot,
    PropOr,
    Reference,
    TruthOp,
    Variable,
    implies,
)

logger = logging.getLogger(__name__)


GRAMMAR = r"""
    // ---- ∈T formulas -------------------------------------------------------
    formula_text: formula

    // A quantifier may close any operator chain: its body runs to the end of
    // the enclosing formula, so the *_tail rules only ever sit rightmost.
    ?formula: relation
            | rel_tail

    ?quant: "ex" VAR "." formula                -> exists
          | "all" VAR "." formula               -> forall

    ?relation: implication
             | implication "==" implication     -> identity
             | implication "<" implication      -> reference

    ?rel_tail: imp_tail
             | implication "==" imp_tail        -> identity
             | implication "<" imp_tail         -> reference

    ?implication: disjunction
                | disjunction "->" implication  -> implies

    ?imp_tail: disj_tail
             | disjunction "->" imp_tail        -> implies

    ?disjunction: conjunction
                | disjunction "\\/" conjunction -> or_

    ?disj_tail: conj_tail
              | disjunction "\\/" conj_tail     -> or_

    ?conjunction: postfix
                | conjunction "/\\" postfix     -> and_

    ?conj_tail: quant
              | conjunction "/\\" quant         -> and_

    ?postfix: primary
            | postfix ":" "true"                -> truth
            | postfix ":" "false"               -> falsity

    ?primary: leaf
            | "(" formula ")"

    ?leaf: VAR                                  -> variable
         | CONST                                -> constant
         | "{" prop "}"                         -> param_leaf

    // ---- parameter formulas ---------------------------------------------
    prop_text: prop

    ?prop: prop_or
         | prop_or "=>" prop                    -> p_implies

    ?prop_or: prop_and
            | prop_or "|" prop_and              -> p_or

    ?prop_and: prop_not
             | prop_and "&" prop_not            -> p_and

    ?prop_not: PATOM                            -> p_atom
             | "~" prop_not                     -> p_not
             | "(" prop ")"

    // ---- substitutions --------------------------------------------------
    substitution_text: "[" _bindings? "]"
    _bindings: binding (";" binding)*
    binding: leaf ":=" formula

    // ---- valuations, assignments, models --------------------------------
    valuation_text: val_entry*
    ?val_entry: PATOM "=" TVALUE                -> val_atom
              | "*" "=" TVALUE                  -> fill

    assignment_text: asg_entry*
    ?asg_entry: VAR "=" TVALUE                  -> asg_var
              | "*" "=" TVALUE                  -> fill

    model_text: "flavor" "=" FLAVOR_NAME model_part*
    ?model_part: "theory" "{" val_entry* "}"    -> model_theory
               | "consts" "{" const_entry* "}"  -> model_consts
               | "default" "=" TVALUE           -> model_default
    const_entry: CONST "=" TVALUE

    // ---- proof files ----------------------------------------------------
    step_line: "step" INT "rule=" RULE_NAME premises context "concl=" formula step_param*
    premises: "premises=" "[" _ids? "]"
    _ids: INT ("," INT)*
    context: "ctx=" "{" _formulas? "}"
    _formulas: formula (";" formula)*
    step_param: "param." PARAM_KEY "=" formula
    final_line: "final" INT

    // ---- terminals ------------------------------------------------------
    VAR: /v[0-9]+/
    CONST: /\$[A-Za-z_][A-Za-z0-9_]*/
    PATOM: /p[0-9]+/
    TVALUE: /[01BNbn]/
    FLAVOR_NAME: /(classical|k3|p3|b4|unit-empty|unit-full)/i
    RULE_NAME: /[A-Za-z][A-Za-z0-9_]*/
    PARAM_KEY: "x" | "y" | "z" | "template" | "witness"
    INT: /[0-9]+/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

START_SYMBOLS = (
    "formula_text",
    "prop_text",
    "substitution_text",
    "valuation_text",
    "assignment_text",
    "model_text",
    "step_line",
    "final_line",
)

_CLOSERS = {")", "}", "]"}


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class SourceSpan:
    """Byte offsets ``[start, end)`` into the UTF-8 encoded input."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 0 <= self.start <= self.end:
            raise ValueError(f"invalid span {self.start}..{self.end}")

    @classmethod
    def from_char_offsets(cls, text: str, start: int, end: int) -> SourceSpan:
        start = max(0, min(start, len(text)))
        end = max(start, min(end, len(text)))
        return cls(len(text[:start].encode("utf-8")), len(text[:end].encode("utf-8")))


class SyntaxErrorKind(str, Enum):
    SYNTAX = "syntax"
    UNBALANCED = "unbalanced"
    UNKNOWN_TOKEN = "unknown_token"
    ENCODING = "encoding"


class FormulaSyntaxError(ValueError):
    """Raised when text does not conform to the grammar."""

    def __init__(
        self,
        message: str,
        *,
        text: str,
        span: SourceSpan,
        expected: frozenset[str] = frozenset(),
        kind: SyntaxErrorKind = SyntaxErrorKind.SYNTAX,
    ) -> None:
        super().__init__(message)
        self.text = text
        self.span = span
        self.expected = expected
        self.kind = kind

    def diagnostic(self) -> str:
        """Message plus the offending input with a caret under the span."""
        raw = self.text.encode("utf-8")
        prefix = raw[: self.span.start].decode("utf-8", errors="replace")
        marked = raw[self.span.start : max(self.span.end, self.span.start + 1)]
        width = max(1, len(marked.decode("utf-8", errors="replace")))
        line_start = prefix.rfind("\n") + 1
        line_end = self.text.find("\n", len(prefix))
        line = self.text[line_start : line_end if line_end != -1 else None]
        caret = " " * (len(prefix) - line_start) + "^" * width
        return f"{self}\n  {line}\n  {caret}"


# ---------------------------------------------------------------------------
# Tree builder
# ---------------------------------------------------------------------------

@v_args(inline=True)
class _Builder(Transformer):
    # formulas
    def formula_text(self, f):
        return f

    def exists(self, var: Token, body):
        return Exists(Variable(int(var[1:])), body)

    def forall(self, var: Token, body):
        return Forall(Variable(int(var[1:])), body)

    def identity(self, left, right):
        return Identity(left, right)

    def reference(self, left, right):
        return Reference(left, right)

    def implies(self, left, right):
        return implies(left, right)

    def or_(self, left, right):
        return Or(left, right)

    def and_(self, left, right):
        return And(left, right)

    def truth(self, body):
        return TruthOp(body)

    def falsity(self, body):
        return FalseOp(body)

    def variable(self, token: Token):
        return Variable(int(token[1:]))

    def constant(self, token: Token):
        return Constant(str(token[1:]))

    def param_leaf(self, expr):
        return ParamExpr(expr)

    # parameter formulas
    def prop_text(self, a):
        return a

    def p_implies(self, left, right):
        return PropImplies(left, right)

    def p_or(self, left, right):
        return PropOr(left, right)

    def p_and(self, left, right):
        return PropAnd(left, right)

    def p_not(self, operand):
        return PropNot(operand)

    def p_atom(self, token: Token):
        return PropAtom(int(token[1:]))

    # substitutions
    def substitution_text(self, *bindings):
        return tuple(bindings)

    def binding(self, atom, image):
        return (atom, image)

    # valuations / assignments / models: raw entries, values as upper-case tokens
    def valuation_text(self, *entries):
        return tuple(entries)

    def assignment_text(self, *entries):
        return tuple(entries)

    def val_atom(self, atom: Token, value: Token):
        return (int(atom[1:]), str(value).upper())

    def asg_var(self, var: Token, value: Token):
        return (int(var[1:]), str(value).upper())

    def fill(self, value: Token):
        return ("*", str(value).upper())

    def model_text(self, flavor: Token, *parts):
        return (str(flavor).lower(), tuple(parts))

    def model_theory(self, *entries):
        return ("theory", tuple(entries))

    def model_consts(self, *entries):
        return ("consts", tuple(entries))

    def const_entry(self, name: Token, value: Token):
        return (str(name[1:]), str(value).upper())

    def model_default(self, value: Token):
        return ("default", str(value).upper())

    # proof files
    def step_line(self, step_id: Token, rule: Token, premises, context, conclusion, *params):
        return (int(step_id), str(rule), premises, context, conclusion, tuple(params))

    def premises(self, *ids):
        return tuple(int(i) for i in ids)

    def context(self, *formulas):
        return tuple(formulas)

    def step_param(self, key: Token, value):
        return (str(key), value)

    def final_line(self, step_id: Token):
        return int(step_id)


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

_PARSER = Lark(
    GRAMMAR,
    parser="lalr",
    start=list(START_SYMBOLS),
    transformer=_Builder(),
    maybe_placeholders=False,
)


def _describe_terminal(name: str) -> str:
    if name == "$END":
        return "end of input"
    try:
        pattern = _PARSER.get_terminal(name).pattern
    except KeyError:
        return name
    if isinstance(pattern, PatternStr):
        return pattern.value
    return name


def _to_syntax_error(text: str, exc: UnexpectedInput) -> FormulaSyntaxError:
    if isinstance(exc, UnexpectedCharacters):
        pos = exc.pos_in_stream
        expected = frozenset(_describe_terminal(n) for n in (exc.allowed or ()))
        span = SourceSpan.from_char_offsets(text, pos, pos + 1)
        return FormulaSyntaxError(
            f"unknown token {text[pos:pos + 1]!r} at byte {span.start}",
            text=text, span=span, expected=expected, kind=SyntaxErrorKind.UNKNOWN_TOKEN,
        )

    if isinstance(exc, UnexpectedToken):
        names = exc.expected or set()
        token = exc.token
        at_end = token.type == "$END"
        start = len(text) if at_end or token.start_pos is None else token.start_pos
        end = len(text) if at_end or token.end_pos is None else token.end_pos
        got = "end of input" if at_end else repr(str(token))
    else:  # UnexpectedEOF
        names = getattr(exc, "expected", None) or set()
        at_end = True
        start = end = len(text)
        got = "end of input"

    expected = frozenset(_describe_terminal(n) for n in names)
    if (at_end and expected & _CLOSERS) or (not at_end and got.strip("'\"") in _CLOSERS):
        kind = SyntaxErrorKind.UNBALANCED
    else:
        kind = SyntaxErrorKind.SYNTAX
    span = SourceSpan.from_char_offsets(text, start, end)
    shown = ", ".join(sorted(expected)) or "nothing"
    return FormulaSyntaxError(
        f"unexpected {got} at byte {span.start} (expected one of: {shown})",
        text=text, span=span, expected=expected, kind=kind,
    )


def _decode(text: str | bytes) -> str:
    if isinstance(text, str):
        return text
    try:
        return text.decode("utf-8")
    except UnicodeDecodeError as exc:
        shown = text.decode("utf-8", errors="replace")
        raise FormulaSyntaxError(
            f"invalid UTF-8 at byte {exc.start}",
            text=shown, span=SourceSpan(exc.start, exc.end), kind=SyntaxErrorKind.ENCODING,
        ) from None


def parse_fragment(text: str | bytes, start: str) -> Any:
    """Parse *text* from one of :data:`START_SYMBOLS`.

    Raises:
        FormulaSyntaxError: with a byte span and the expected-token set.
    """
    if start not in START_SYMBOLS:
        raise ValueError(f"unknown start symbol {start!r}")
    text = _decode(text)
    try:
        return _PARSER.parse(text, start=start)
    except (UnexpectedCharacters, UnexpectedToken, UnexpectedEOF) as exc:
        error = _to_syntax_error(text, exc)
        logger.debug("parse failed (%s): %s", start, error)
        raise error from None


def parse_formula(text: str | bytes) -> Formula:
    """Parse an ∈T formula; ``a -> b`` comes back as ``Or(FalseOp(a), b)``."""
    return parse_fragment(text, "formula_text")


def parse_propositional(text: str | bytes) -> PropFormula:
    """Parse a parameter formula, with or without its enclosing braces."""
    text = _decode(text)
    if text.lstrip().startswith("{"):
        formula = parse_formula(text)
        if not isinstance(formula, ParamExpr):
            raise FormulaSyntaxError(
                "expected a single parameter formula in braces",
                text=text, span=SourceSpan.from_char_offsets(text, 0, len(text)),
            )
        return formula.expr
    return parse_fragment(text, "prop_text")
