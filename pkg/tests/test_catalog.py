import json

import pytest

from fanocert.catalog import (CaseTableError, anticanonical_cube, load_cases,
                              run_all, trisecant_count, verify_case)
from fanocert.cli import main
from fanocert.lattice import FAMILIES
from fanocert.report import report_to_json

EXPECTED_VERDICTS = {
    "quadric": {
        "Realizable": {44, 45, 46, 48, 70, 71, 86, 88, 97, 105},
        "Open": {47, 72, 102},
        "NotRealizable": set(),
    },
    "v4": {
        "Realizable": {30, 34, 37, 41, 64, 84},
        "Open": {39, 67},
        "NotRealizable": set(),
    },
    "v5": {
        "Realizable": {31, 35, 38, 40, 42, 65, 68, 69, 81, 83, 94, 96, 101},
        "Open": set(),
        "NotRealizable": {43},
    },
    "x14": {
        "Realizable": {5, 12, 55},
        "Open": set(),
        "NotRealizable": {17},
    },
    "sporadic": {
        "Realizable": {3, 94, 100},
        "Open": set(),
        "NotRealizable": set(),
    },
}


def test_embedded_table_matches_verdict_sets():
    cases = load_cases()
    for family, verdicts in EXPECTED_VERDICTS.items():
        for verdict, ids in verdicts.items():
            actual = {c.case_id for c in cases
                      if c.family == family and c.expected == verdict}
            assert actual == ids, (family, verdict)
    assert len(cases) == 42


def test_case_94_runs_both_pipelines():
    report = run_all(case_id=94)
    families = sorted(c.case.family for c in report.certificates)
    assert families == ["sporadic", "v5"]
    assert all(c.computed == "Realizable" for c in report.certificates)


def test_run_all_matches_everywhere():
    report = run_all()
    assert report.summary == {"cases": 42, "pass": 42, "mismatch": 0,
                              "open": 5, "flagged": 3}
    assert report.all_match
    ordering = [(c.case.case_id, c.case.family) for c in report.certificates]
    assert ordering == sorted(ordering)


def test_family_filter():
    report = run_all(family="x14")
    verdicts = {c.case.case_id: c.computed for c in report.certificates}
    assert verdicts == {5: "Realizable", 12: "Realizable",
                        17: "NotRealizable", 55: "Realizable"}


def test_unknown_case_is_empty():
    report = run_all(case_id=999)
    assert report.certificates == ()


def test_trisecant_count():
    assert trisecant_count(13, 14) == 39
    assert trisecant_count(9, 2) == 25
    assert trisecant_count(4, 0) == 0
    with pytest.raises(ValueError):
        trisecant_count(2, 0)


def test_trisecants_positive_on_quadric_catalog():
    for case in load_cases():
        if case.family == "quadric":
            assert trisecant_count(case.d, case.g) > 0


def test_anticanonical_cube():
    assert anticanonical_cube(FAMILIES["quadric"], 9, 2) == 2
    assert anticanonical_cube(FAMILIES["quadric"], 8, 0) == 4
    assert anticanonical_cube(FAMILIES["v4"], 11, 8) == 2
    for case in load_cases():
        if case.family == "sporadic":
            continue
        assert anticanonical_cube(FAMILIES[case.family], case.d, case.g) > 0


def test_case43_certificate_contents():
    report = run_all(case_id=43)
    cert = report.certificates[0]
    assert cert.computed == "NotRealizable"
    by_name = {c.name: c for c in cert.checks}
    residual = by_name["residual-member-invariants"]
    assert residual.result["degree"] == 6 and residual.result["genus"] == 2
    assert by_name["residual-span-dimension"].result["span_dimension"] == 4
    final = by_name["degree-exceeds-linear-section"]
    assert final.result == {"residual_degree": 6, "section_curve_degree": 5}


def test_case17_certificate_contents():
    report = run_all(case_id=17)
    cert = report.certificates[0]
    assert cert.computed == "NotRealizable"
    by_name = {c.name: c for c in cert.checks}
    assert by_name["curve-section-count"].result["h0"] == 3
    assert by_name["curve-cuts-plane-series-on-section"].result["series"] == "g^2_7"


def test_case72_carries_table_note():
    report = run_all(case_id=72)
    cert = report.certificates[0]
    assert cert.case.family == "quadric"
    assert any("secant table note" in note for note in cert.discrepancies)


def test_residual_construction_cases():
    for case_id, seed in ((69, (8, 3)), (42, (7, 2))):
        cert = run_all(case_id=case_id).certificates[0]
        assert cert.case.family == "v5"
        by_name = {c.name: c for c in cert.checks}
        residual = by_name["residual-member-invariants"]
        assert residual.kind == "derived-extension"
        assert residual.inputs["seed_d"] == seed[0]
        assert residual.inputs["seed_g"] == seed[1]
        assert residual.result["degree"] == cert.case.d


def test_sporadic_pipelines_split_on_genus():
    by_ambient = {c.case.ambient: c for c in run_all(family="sporadic").certificates}
    x10 = {c.name for c in by_ambient["X10"].checks}
    assert "hirzebruch-sweep-empty" in x10
    assert "plane-has-no-class-of-square" in x10
    assert "canonical-square-exceeds-noether-bound" in x10
    for ambient in ("X16", "X18"):
        names = {c.name for c in by_ambient[ambient].checks}
        assert "bisecant-exclusion-genus-gate" in names
        assert "hirzebruch-sweep-empty" not in names


def test_report_is_bit_reproducible():
    first = report_to_json(run_all())
    second = report_to_json(run_all())
    assert first == second


def test_report_schema_and_field_order():
    payload = report_to_json(run_all(case_id=48))
    data = json.loads(payload)
    assert list(data) == ["version", "summary", "certificates"]
    assert data["version"] == 1
    cert = data["certificates"][0]
    assert list(cert) == ["case_id", "family", "d", "g", "expected",
                          "computed", "checks", "discrepancies"]
    for check in cert["checks"]:
        assert list(check) == ["name", "paper_ref", "inputs", "result",
                               "witnesses", "kind"]
        assert check["kind"] in ("verified", "cited-rule", "derived-extension")
        assert check["result"]["status"] in ("pass", "fail")


def test_report_has_no_floats():
    def walk(node):
        assert not isinstance(node, float) or isinstance(node, bool)
        if isinstance(node, dict):
            for value in node.values():
                walk(value)
        elif isinstance(node, list):
            for item in node:
                walk(item)

    walk(json.loads(report_to_json(run_all())))


def test_table_override(tmp_path):
    table = {
        "version": 1,
        "cases": [
            {"id": 48, "family": "quadric", "d": 13, "g": 14, "expected": "Realizable"},
            {"id": 48, "family": "quadric", "d": 13, "g": 14, "expected": "Open"},
        ],
    }
    path = tmp_path / "override.json"
    path.write_text(json.dumps(table))
    report = run_all(table=str(path))
    assert report.summary["cases"] == 2
    # the flipped expectation is detected as a mismatch, not silently accepted
    assert report.summary["mismatch"] == 1


def test_malformed_table_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{\"cases\": [{\"id\": 1}]}")
    with pytest.raises(CaseTableError):
        load_cases(str(path))
    path.write_text("not json")
    with pytest.raises(CaseTableError):
        load_cases(str(path))


def test_verify_case_detects_regressions():
    case = load_cases()[0]
    cert = verify_case(case)
    assert cert.matches


def test_certificate_witnesses_reverify_through_pairing():
    from fanocert.lattice import DivisorClass, make_family_lattice, pair

    for cert in run_all().certificates:
        if cert.case.family == "sporadic":
            continue
        lattice = make_family_lattice(FAMILIES[cert.case.family],
                                      cert.case.d, cert.case.g)
        for check in cert.checks:
            if check.name != "adjoint-class-nef":
                continue
            for witness in check.witnesses:
                cls = DivisorClass(*witness["class"])
                assert lattice.degree(cls) == witness["degree"]
                assert pair(lattice, cls, cls) == 2 * witness["arithmetic_genus"] - 2
                assert pair(lattice, cls, DivisorClass(0, 1)) == witness["meets_curve"]


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["verify", "--all", "--strict"]) == 0
    capsys.readouterr()

    # bare "verify" defaults to all cases
    assert main(["verify"]) == 0
    assert "cases=42" in capsys.readouterr().out

    assert main(["verify", "--case", "999"]) == 0
    captured = capsys.readouterr()
    assert "warning" in captured.err

    bad = tmp_path / "bad.json"
    bad.write_text("nonsense")
    assert main(["verify", "--table", str(bad)]) == 2
    capsys.readouterr()

    flipped = {
        "version": 1,
        "cases": [{"id": 48, "family": "quadric", "d": 13, "g": 14,
                   "expected": "Open"}],
    }
    table = tmp_path / "flip.json"
    table.write_text(json.dumps(flipped))
    assert main(["verify", "--table", str(table)]) == 0
    capsys.readouterr()
    assert main(["verify", "--table", str(table), "--strict"]) == 1
    capsys.readouterr()

    with pytest.raises(SystemExit) as err:
        main(["verify", "--family", "nonexistent"])
    assert err.value.code == 2
    capsys.readouterr()


def test_cli_json_output_is_stable(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert main(["verify", "--all", "--json", str(first)]) == 0
    assert main(["verify", "--all", "--json", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()


def test_cli_explain_lists_checks(capsys):
    assert main(["verify", "--case", "43", "--explain"]) == 0
    captured = capsys.readouterr()
    assert "degree-exceeds-linear-section" in captured.out
    assert "NotRealizable" in captured.out
