"""Report assembly, reconciliation findings, CLI surface and exit codes."""

import json

import pytest

from superjordan.cli import ERROR, FINDINGS, OK, main

from util import data_path, n13, n31


def finding_subjects(result):
    return {f.subject for f in result.findings}


def run_cli(*argv):
    return main(list(argv))


ARGS13 = [data_path("catalog13.jsv"), data_path("witnesses13.jsw"), data_path("certs13.jsc")]
ARGS31 = [data_path("catalog31.jsv"), data_path("witnesses31.jsw"), data_path("certs31.jsc")]


def test_report13_totals_are_consistent(report13):
    doc = report13.document
    assert doc["ok"] is True
    assert doc["catalog"] == {
        "type": "(1,3)",
        "entries": 20,
        "reconciled-against-claims": True,
    }
    assert doc["identity-checks"]["failed"] == 0
    assert doc["identity-checks"]["checked"] == len(doc["identity-checks"]["entries"]) == 20
    assert doc["invariants"]["mismatches"] == 0
    assert doc["witnesses"]["checked"] == len(doc["witnesses"]["entries"]) == 18
    assert doc["witnesses"]["invalid"] == 0
    assert doc["witnesses"]["trivial-target"] == {"checked": 19, "invalid": 0}
    certs = doc["certificates"]
    assert certs["checked"] == len(certs["transcribed"]) + len(certs["machine-sweep"])
    assert certs["failed"] == 0
    assert sum(certs["counts"].values()) == certs["checked"]
    rel = doc["relation"]
    assert rel["yes"] + rel["no"] + rel["unknown"] == 20 * 19
    assert rel["unknown"] == 0
    assert rel["determination-rate"]["fraction"] == "1/1"
    assert rel["determination-rate"]["percent"] == "100.00"


def test_report13_proof_hygiene(report13):
    certs = report13.document["certificates"]
    for row in certs["transcribed"] + certs["machine-sweep"]:
        assert row["status"] in ("proven", "assumed-external")
        if row["status"] == "proven":
            assert row["evidence"], row
        else:
            assert row["citation"], row


def test_report13_expected_findings(report13):
    assert report13.ok
    assert len(report13.findings) == 1
    finding = report13.findings[0]
    assert finding.section == "subvarieties"
    assert finding.subject == "associative component roots"
    assert n13(4) in finding.expected
    assert n13(1) in finding.computed
    assert "membership predicate" in finding.note


def test_report31_expected_findings(report31):
    assert report31.ok
    subjects = finding_subjects(report31)
    assert subjects == {
        "determination rate",
        f"closure of {n31(54)}",
        f"associative component of {n31(19)}",
    }
    by_subject = {f.subject: f for f in report31.findings}
    rate = by_subject["determination rate"]
    assert rate.expected == "99.05%"
    assert "1753/1770" in rate.computed
    closure54 = by_subject[f"closure of {n31(54)}"]
    assert n31(7) in closure54.note and "is no" in closure54.note
    assert n31(8) in closure54.note
    asc19 = by_subject[f"associative component of {n31(19)}"]
    assert n31(42) in asc19.note
    assert "power-dim r=2 parity=odd" in asc19.note


def test_report31_sections(report31):
    doc = report31.document
    rel = doc["relation"]
    assert (rel["yes"], rel["no"], rel["unknown"]) == (316, 3190, 34)
    assert rel["determination-rate"]["fraction"] == "1753/1770"
    assert rel["determination-rate"]["percent"] == "99.04"
    assert rel["determination-rate"]["claimed-percent"] == "99.05"
    comp = doc["components"]
    assert comp["count"] == 21
    assert comp["covered"] is True
    assert comp["solvable-rigid"] == []
    rob = doc["robustness"]
    assert rob["stable"] is True
    assert rob["component-count-all-yes"] == 21
    assert rob["component-count-all-no"] == 21
    assert rob["closure-deltas"]  # some closures can only grow
    assert doc["subvarieties"]["nilpotent"]["component-roots"] == [n31(40)]


def test_report_document_is_json_serializable(report13, report31):
    for result in (report13, report31):
        text = json.dumps(result.document)
        assert json.loads(text) == result.document


def test_findings_as_dict(report31):
    payload = report31.findings[0].as_dict()
    assert set(payload) == {"section", "subject", "expected", "computed", "note"}


def test_cli_validate_ok(capsys):
    assert run_cli("validate", data_path("catalog13.jsv")) == OK
    out = capsys.readouterr().out
    assert "identities: 20 checked, 0 failed" in out


def test_cli_validate_missing_file(capsys):
    assert run_cli("validate", "/nonexistent/nowhere.jsv") == ERROR
    assert "error:" in capsys.readouterr().err


def test_cli_validate_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.jsv"
    bad.write_text('[algebra "(1,1)_x"]\ntype = (1, 1)\nproduct e9 e1 = e1\n')
    assert run_cli("validate", str(bad)) == ERROR
    assert "line 3" in capsys.readouterr().err


def test_cli_invariants(capsys):
    assert run_cli("invariants", data_path("catalog13.jsv")) == OK
    out = capsys.readouterr().out
    assert "(1,3)_20" in out


def test_cli_witnesses(capsys):
    code = run_cli("witnesses", data_path("catalog13.jsv"), data_path("witnesses13.jsw"))
    assert code == OK
    assert "18 checked, 0 invalid" in capsys.readouterr().out


def test_cli_certs(capsys):
    code = run_cli("certs", data_path("catalog13.jsv"), data_path("certs13.jsc"))
    assert code == OK
    assert "0 failed" in capsys.readouterr().out


def test_cli_relation_json(tmp_path, capsys):
    out_path = tmp_path / "relation.json"
    code = run_cli("relation", *ARGS13, "--json", str(out_path))
    assert code == OK
    payload = json.loads(out_path.read_text())
    assert payload["yes"] == 47
    assert payload["unknown"] == 0


def test_cli_components_subvariety_finding(capsys):
    code = run_cli("components", *ARGS13, "--subvariety", "associative")
    assert code == FINDINGS
    out = capsys.readouterr().out
    assert "associative component roots" in out


def test_cli_components_nilpotent_clean(capsys):
    code = run_cli("components", *ARGS31, "--subvariety", "nilpotent")
    assert code == OK
    assert n31(40) in capsys.readouterr().out


def test_cli_dot_deterministic(tmp_path):
    first = tmp_path / "a.dot"
    second = tmp_path / "b.dot"
    assert run_cli("dot", *ARGS13, "-o", str(first)) == OK
    assert run_cli("dot", *ARGS13, "-o", str(second)) == OK
    assert first.read_bytes() == second.read_bytes()
    text = first.read_text()
    assert text.startswith("digraph deformations {")
    assert f'"{n13(4)}" -> "{n13(3)}"' in text
    assert f'"{n13(4)}" -> "{n13(15)}"' in text
    assert f'"{n13(2)}" -> "{n13(20)}"' not in text


def test_cli_report_exit_codes(tmp_path, capsys):
    out_path = tmp_path / "report31.json"
    code = run_cli("report", *ARGS31, "--json", str(out_path))
    assert code == FINDINGS
    doc = json.loads(out_path.read_text())
    assert doc["ok"] is True
    assert len(doc["reconciliation-findings"]) == 3
    out = capsys.readouterr().out
    assert out.count("finding [") == 3


def test_cli_report_mismatched_files(capsys):
    # (3,1) witnesses against the (1,3) catalog must fail loudly, not pass.
    code = run_cli(
        "report",
        data_path("catalog13.jsv"),
        data_path("witnesses31.jsw"),
        data_path("certs13.jsc"),
    )
    assert code == ERROR
