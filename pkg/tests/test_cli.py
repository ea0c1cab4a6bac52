import json

import pytest
from jsonschema import validate

from heckekit.cli import main
from heckekit.reports import Report

SCHEMA_PATH = "src/heckekit/report.schema.json"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_generic_g2_mirrors_bracket_output(capsys):
    code, out = run(capsys, "verify", "--type", "C2", "--instance", "generic")
    assert code == 0
    assert "[True, True, True]" in out


def test_verify_whittaker_with_bernstein(capsys):
    code, out = run(capsys, "verify", "--type", "A2", "--instance", "whittaker", "--bernstein", "(1,0,0)")
    assert code == 0
    assert "bernstein" in out


def test_verify_metaplectic(capsys):
    code, out = run(capsys, "verify", "--type", "A1", "--instance", "metaplectic", "--n", "2", "--B", "dot")
    assert code == 0


def test_cs_equality(capsys):
    code, out = run(capsys, "cs", "--type", "A1", "--weight", "(1,0)")
    assert code == 0
    assert "PASS" in out


def test_cs_rejects_non_dominant(capsys):
    with pytest.raises(SystemExit):
        main(["cs", "--type", "A1", "--weight", "(0,1)"])


def test_demazure_suite(capsys):
    code, _ = run(capsys, "demazure", "--type", "A2", "--kind", "whittaker")
    assert code == 0
    code, _ = run(capsys, "demazure", "--type", "A2", "--kind", "lusztig")
    assert code == 0


def test_rmatrix_commands(capsys):
    for argv in (
        ["rmatrix", "ybe", "--n", "2"],
        ["rmatrix", "pybe", "--n", "2"],
        ["rmatrix", "triangularity", "--n", "2", "--gauss"],
        ["rmatrix", "hecke", "--n", "2"],
    ):
        code, out = run(capsys, *argv)
        assert code == 0, out


def test_metaplectic_table(capsys):
    code, out = run(capsys, "metaplectic", "--r", "2", "--n", "2", "--weight", "(0,0)")
    assert code == 0
    assert out.count("(") >= 4  # one row per coset representative
    assert "aggregate" in out


def test_metaplectic_mismatch_injection(capsys):
    code, out = run(capsys, "metaplectic", "--r", "2", "--n", "1", "--weight", "(1,0)", "--inject-mismatch")
    assert code == 1
    assert "FAIL" in out


def test_wreath_command(capsys):
    code, out = run(capsys, "wreath", "--n", "2", "--r", "2")
    assert code == 0


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit):
        main(["verify", "--nonsense"])


def test_json_report_round_trip_and_schema(capsys):
    code, out = run(capsys, "--json", "rmatrix", "ybe", "--n", "2")
    assert code == 0
    payload = json.loads(out[out.index("{"):])
    validate(payload, json.load(open(SCHEMA_PATH)))
    report = Report.from_json(json.dumps(payload))
    assert report.passed
    assert json.loads(report.to_json()) == payload


def test_json_failure_contains_localized_entry(capsys):
    code, out = run(capsys, "--json", "metaplectic", "--r", "2", "--n", "1", "--inject-mismatch")
    assert code == 1
    payload = json.loads(out[out.index("{"):])
    validate(payload, json.load(open(SCHEMA_PATH)))
    failing = [c for c in payload["checks"] if not c["passed"]]
    assert failing and failing[0]["lhs"] and failing[0]["rhs"]
