"""Tests for the ``etl`` command line.

``run`` is exercised directly (it returns a ``CommandResult`` and never
exits); ``main`` is run once per output mode to pin what reaches stdout.
Exit codes: 0 for ok/holds/accepted, 1 for refuted/rejected, 2 for usage
errors, bad input and exceeded budgets.
"""

from __future__ import annotations

import json

import pytest
from pydantic import ValidationError

from etlogic.cli.app import global_options, run
from etlogic.main import main
from etlogic.models.reports import CommandResult, ReportVerdict
from etlogic.services.manyvalued import parse_valuation
from etlogic.services.syntax import parse_formula
from etlogic.utils.serialization import formula_to_tree, to_record

LIAR = "$c == ($c :false)"
LIAR_MODEL = "flavor=b4 theory{} consts{$c=B} default=N"


# ---------------------------------------------------------------------------
# Dispatch and usage errors
# ---------------------------------------------------------------------------

class TestDispatch:
    def test_help(self):
        result = run(["--help"])
        assert result.verdict is ReportVerdict.OK
        assert any("usage" in line for line in result.lines)

    def test_no_command(self):
        result = run([])
        assert result.exit_code == 2
        assert result.summary == "no command given"

    def test_unknown_command(self):
        result = run(["frobnicate"])
        assert result.verdict is ReportVerdict.ERROR
        assert result.exit_code == 2

    def test_missing_required_flag(self):
        assert run(["parse"]).exit_code == 2

    def test_global_options_anywhere(self):
        options = global_options(["parse", "--formula", "v0", "--json", "-vv"])
        assert options.json is True
        assert options.verbose == 2


# ---------------------------------------------------------------------------
# Formula and parameter-logic commands
# ---------------------------------------------------------------------------

class TestParseCommand:
    def test_structure(self):
        result = run(["parse", "--formula", "all v0 . v0 < v1"])
        assert result.exit_code == 0
        assert result.details["formula"] == "all v0 . v0 < v1"
        assert result.details["free_vars"] == ["v1"]
        assert result.details["closed"] is False
        assert result.details["tree"]["node"] == "Forall"

    def test_unintended_formula_warns(self):
        result = run(["parse", "--formula", "ex v0 . $c"])
        assert result.details["intended"] is False
        assert result.warnings

    def test_syntax_error(self):
        result = run(["parse", "--formula", "v0 @ v1"])
        assert result.exit_code == 2
        assert "byte 3" in result.summary
        assert result.lines[-1].strip() == "^"


class TestPropositionalCommands:
    def test_entail_countermodel(self):
        result = run(["entail", "--premise", "{p0 | p1}", "--premise", "{~p0}", "--concl", "p1"])
        assert result.verdict is ReportVerdict.REFUTED
        assert result.exit_code == 1
        assert result.details["countermodel"] == "p0=B p1=0"

    def test_entail_classical(self):
        result = run(["entail", "--flavor", "classical", "--premise", "p0 | p1", "--premise", "~p0", "--concl", "p1"])
        assert result.verdict is ReportVerdict.HOLDS

    def test_entail_rejects_an_unknown_flavor(self):
        assert run(["entail", "--flavor", "lp", "--concl", "p0"]).exit_code == 2

    def test_classify(self):
        result = run(["classify", "--valuation", "p0=B p1=N"])
        assert result.exit_code == 0
        assert result.details["class"] == "b4-proper"
        assert result.details["least_flavor"] == "b4"
        assert result.details["gap_free_agrees"] and result.details["glut_free_agrees"]

    def test_classify_depth_out_of_range(self):
        result = run(["classify", "--valuation", "p0=1", "--universe-depth", "9"])
        assert result.exit_code == 2
        assert result.summary == "invalid settings"

    def test_closure_member(self):
        family = ["--valuation", "p0=1", "--valuation", "p0=0"]
        assert run(["closure-member", *family, "--formula", "{p0 | ~p0}"]).verdict is ReportVerdict.HOLDS
        assert run(["closure-member", *family, "--formula", "p0"]).verdict is ReportVerdict.REFUTED

    def test_bad_valuation(self):
        assert run(["classify", "--valuation", "p0=1 p0=0"]).exit_code == 2


# ---------------------------------------------------------------------------
# Extensional commands
# ---------------------------------------------------------------------------

class TestExtensionalCommands:
    def test_eval_liar(self):
        result = run(["eval", "--model", LIAR_MODEL, "--formula", LIAR])
        assert result.details["value"] == "1"
        assert result.details["satisfied"] is True
        assert result.details["assignment"] == "*=N"

    def test_satisfies(self):
        result = run(["satisfies", "--model", LIAR_MODEL, "--formula", "v0 :false", "--assign", "v0=1"])
        assert result.verdict is ReportVerdict.REFUTED
        assert result.details["value"] == "0"

    def test_model_error(self):
        result = run(["eval", "--model", "flavor=k3 theory{} consts{$c=B}", "--formula", "$c"])
        assert result.exit_code == 2

    def test_consequence_valid(self):
        result = run(["consequence", "--concl", "v0 == v0"])
        assert result.verdict is ReportVerdict.HOLDS
        assert result.details["examined"] == 12

    def test_consequence_with_unit_models(self):
        result = run(["consequence", "--concl", "v0 == v0", "--include-unit-models"])
        assert result.verdict is ReportVerdict.REFUTED
        assert result.details["counterexample"]["model"]["flavor"] == "unit-empty"

    def test_liar_in_classical_models(self):
        result = run(["consequence", "--flavor", "classical", "--premise", LIAR, "--concl", "$d"])
        assert result.verdict is ReportVerdict.HOLDS
        assert result.details["flavors"] == ["classical"]

    def test_budget_exceeded(self):
        result = run(["consequence", "--concl", "v0 == v1", "--budget", "1"])
        assert result.verdict is ReportVerdict.BUDGET_EXCEEDED
        assert result.exit_code == 2
        assert result.details["required"] == 38

    def test_budget_must_be_positive(self):
        result = run(["consequence", "--concl", "v0", "--budget", "0"])
        assert result.exit_code == 2
        assert result.summary == "invalid settings"

    def test_eval_warns_on_an_unintended_formula(self):
        result = run(["eval", "--model", LIAR_MODEL, "--formula", "ex v0 . $c"])
        assert result.exit_code == 0
        assert result.warnings == ["ex v0 . $c has a quantifier binding no free occurrence"]

    def test_satisfies_warns_on_an_unintended_formula(self):
        result = run(["satisfies", "--model", LIAR_MODEL, "--formula", "all v1 . v0 :false", "--assign", "v0=1"])
        assert result.verdict is ReportVerdict.REFUTED
        assert len(result.warnings) == 1

    def test_consequence_warns_once_per_unintended_formula(self):
        result = run(["consequence", "--premise", "ex v1 . $c", "--premise", "$c", "--concl", "all v2 . v0 == v0"])
        assert result.verdict is ReportVerdict.HOLDS
        assert result.warnings == [
            "ex v1 . $c has a quantifier binding no free occurrence",
            "all v2 . v0 == v0 has a quantifier binding no free occurrence",
        ]

    def test_intended_formulas_do_not_warn(self):
        assert run(["eval", "--model", LIAR_MODEL, "--formula", LIAR]).warnings == []
        assert run(["consequence", "--concl", "v0 == v0"]).warnings == []


# ---------------------------------------------------------------------------
# Proof commands
# ---------------------------------------------------------------------------

class TestProofCommands:
    def test_check_accepts(self, corpus_dir):
        result = run(["check", str(corpus_dir / "exists_identity.proof")])
        assert result.verdict is ReportVerdict.ACCEPTED
        assert result.details["steps"] == 2

    def test_check_rejects(self, tmp_path, proof_text):
        path = tmp_path / "broken.proof"
        path.write_text(proof_text("exists_identity").replace("param.witness=$c", "param.witness=$d"), encoding="utf-8")
        result = run(["check", str(path)])
        assert result.exit_code == 1
        assert result.details["verdict"]["reason"] == "SIDE_CONDITION"
        assert result.details["verdict"]["step"] == 2

    def test_check_missing_file(self, tmp_path):
        result = run(["check", str(tmp_path / "nope.proof")])
        assert result.exit_code == 2
        assert result.summary.startswith("cannot read input")

    def test_check_malformed_file(self, tmp_path):
        path = tmp_path / "bad.proof"
        path.write_text("step 1 rule=R1 premises=[ ctx={} concl=$c\n", encoding="utf-8")
        result = run(["check", str(path)])
        assert result.exit_code == 2
        assert result.summary.startswith("line 1")

    def test_rename(self, corpus_dir):
        result = run(["rename", str(corpus_dir / "exists_identity.proof"), "--constant", "c", "--variable", "v5"])
        assert result.verdict is ReportVerdict.ACCEPTED
        assert "v5" in result.details["proof"]
        assert "$c" not in result.details["proof"]

    def test_rename_to_an_occurring_variable(self, corpus_dir):
        result = run(["rename", str(corpus_dir / "exists_identity.proof"), "--constant", "c", "--variable", "v0"])
        assert result.exit_code == 2

    def test_rename_needs_a_variable(self, corpus_dir):
        result = run(["rename", str(corpus_dir / "exists_identity.proof"), "--constant", "c", "--variable", "$d"])
        assert result.exit_code == 2

    def test_corpus(self):
        result = run(["corpus"])
        assert result.verdict is ReportVerdict.ACCEPTED
        assert len(result.proofs) == 18
        assert result.summary == "18/18 proofs pass"

    def test_corpus_with_a_broken_proof(self, tmp_path, proof_text):
        (tmp_path / "good.proof").write_text(proof_text("weakening"), encoding="utf-8")
        (tmp_path / "bad.proof").write_text(proof_text("explosion").replace("[1,2]", "[2,1]"), encoding="utf-8")
        result = run(["corpus", str(tmp_path)])
        assert result.exit_code == 1
        assert result.details["failed"] == ["bad"]
        bad = next(r for r in result.proofs if r.name == "bad")
        assert (bad.accepted, bad.reason, bad.step) == (False, "SIDE_CONDITION", 3)

    def test_corpus_empty_directory(self, tmp_path):
        assert run(["corpus", str(tmp_path)]).exit_code == 2


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

class TestMain:
    def test_json_output(self, capsys):
        code = main(["--json", "entail", "--premise", "{p0 | p1}", "--premise", "{~p0}", "--concl", "p1"])
        out = capsys.readouterr().out
        assert code == 1
        result = CommandResult.model_validate_json(out)
        assert result.details["countermodel"] == "p0=B p1=0"
        assert json.loads(out)["verdict"] == "refuted"

    def test_json_flag_after_the_command(self, capsys):
        code = main(["parse", "--formula", "v0", "--json"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["command"] == "parse"

    def test_human_output(self, capsys):
        code = main(["eval", "--model", LIAR_MODEL, "--formula", LIAR])
        out = capsys.readouterr().out
        assert code == 0
        assert "ok" in out
        assert "value: 1" in out


class TestReports:
    def test_exit_code_follows_verdict(self):
        assert CommandResult(command="x", verdict="rejected").exit_code == 1

    def test_inconsistent_exit_code(self):
        with pytest.raises(ValidationError):
            CommandResult(command="x", verdict="ok", exit_code=1)

    def test_extra_fields_are_forbidden(self):
        with pytest.raises(ValidationError):
            CommandResult(command="x", verdict="ok", colour="red")

    def test_round_trip(self):
        result = run(["classify", "--valuation", "p0=1"])
        assert CommandResult.model_validate_json(result.model_dump_json()) == result


def test_to_record():
    assert to_record(parse_valuation("p0=B")) == {"text": "p0=B", "values": {"p0": "B"}}
    assert to_record([parse_formula("v0 :true")]) == ["v0 :true"]
    assert to_record(ReportVerdict.OK) == "ok"


def test_formula_to_tree():
    tree = formula_to_tree(parse_formula("ex v0 . v0 :true"))
    assert tree["node"] == "Exists"
    assert tree["var"] == "v0"
    assert tree["children"][0]["node"] == "TruthOp"
    assert tree["children"][0]["children"] == [{"node": "Variable", "index": 0}]
