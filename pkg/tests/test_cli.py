import json
import os

import pytest

from poisson_forge.cli import main, run_command
from poisson_forge.reports import SCHEMA, ReportDocument, emit_report


def test_nf_command(capsys):
    code = main(["nf", "--poly", "x1*x4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "x2*x3" in out


def test_hilbert_command(capsys):
    code = main(["hilbert", "--group", "H0", "--max-weight", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[1, 4, 6, 8, 11]" in out
    assert "match" in out


def test_json_schema_tag(capsys):
    code = main(["nf", "--poly", "x1", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "poisson-forge/1"
    assert doc["passed"] is True


def test_deterministic_output(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["hilbert", "--group", "H2", "--max-weight", "4",
                 "--format", "json", "--output", str(p1)]) == 0
    assert main(["hilbert", "--group", "H2", "--max-weight", "4",
                 "--format", "json", "--output", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_csv_table(capsys):
    code = main(["hilbert", "--group", "H1", "--max-weight", "3",
                 "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("schema,%s" % SCHEMA)
    assert "group,weight,dim" in out
    assert "H1,1,4" in out


def test_usage_errors(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["nf"]) == 2                       # missing --poly
    assert main(["hilbert", "--group", "H7"]) == 2
    capsys.readouterr()


def test_parse_error_exit(capsys):
    assert main(["nf", "--poly", "x1^-1"]) == 2
    err = capsys.readouterr().err
    assert "parse error" in err


def test_weight_cap(capsys):
    assert main(["hilbert", "--group", "H0", "--max-weight", "99"]) == 2
    capsys.readouterr()


def test_env_weight(capsys, monkeypatch):
    monkeypatch.setenv("POISSON_FORGE_MAX_WEIGHT", "3")
    code = main(["hilbert", "--group", "H0"])
    out = capsys.readouterr().out
    assert code == 0
    assert "max weight: 3" in out
    # the flag wins over the environment
    code = main(["hilbert", "--group", "H0", "--max-weight", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "max weight: 2" in out


def test_verify_module_structure(capsys):
    code = main(["verify", "--suite", "module-structure", "--max-weight", "6"])
    out = capsys.readouterr().out
    assert code == 0
    assert "module structure relations" in out


def test_verify_derham(capsys):
    code = main(["verify", "--suite", "derham", "--max-weight", "4"])
    out = capsys.readouterr().out
    assert code == 0


def test_verify_identities_reports_the_known_failure(capsys):
    # the -8 proportionality of the source text cannot hold; exit code 1
    # and the computed constant are the honest outcome
    code = main(["verify", "--suite", "identities", "--max-weight", "4"])
    out = capsys.readouterr().out
    assert code == 1
    assert "pi = -8 T1^T2" in out
    assert "-16" in out


def test_normalize_command(capsys):
    code = main(["normalize", "--g", "1+x1*x3", "--max-weight", "6"])
    out = capsys.readouterr().out
    assert code == 0
    assert "q(0) = g(0)" in out


def test_division_command(capsys):
    code = main(["division", "--p", "2", "--max-degree", "4",
                 "--max-weight", "6"])
    out = capsys.readouterr().out
    assert code == 0
    assert "D^2" in out


def test_kernels_flag_note(capsys):
    code = main(["kernels", "--max-weight", "6"])
    out = capsys.readouterr().out
    assert code == 0
    assert "consistency flag" in out


def test_run_command_returns_document():
    doc, code = run_command(["hilbert", "--group", "H4", "--max-weight", "5"])
    assert code == 0
    assert isinstance(doc, ReportDocument)
    assert doc.passed


def test_emit_report_bad_format():
    doc = ReportDocument("cmd", 4)
    with pytest.raises(ValueError):
        emit_report(doc, "yaml")
