import json

import pytest

from corruption import corrupt, differing_witnesses, scalar_slots
from ydforge.cli import COMMANDS, Options, UsageError, emit_report, exit_code, main, run_command
from ydforge.documents import load, parse_document
from ydforge.report import Report


@pytest.fixture(scope="module")
def kc2(fixtures_dir):
    return load(fixtures_dir / "classical_kc2.json")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_yd_on_classical_fixture(capsys, fixtures_dir):
    code, out, _ = run(capsys, "check-yd", fixtures_dir / "classical_kc2.json")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "pass" and rep["report_version"] == 1
    assert rep["findings"] and all(f["anchor"] for f in rep["findings"])


def test_braid_emits_matrix_and_coherence(capsys, fixtures_dir):
    code, out, _ = run(capsys, "braid", fixtures_dir / "classical_kc2.json", "--module", "kC2_conjugation", "--with", "regular")
    assert code == 0
    rep = json.loads(out)
    (hdr,) = rep["header"].values()
    assert len(hdr["braid_matrix"]) == 4
    checks = " ".join(f["check_name"] for f in rep["findings"])
    assert "beta vs psi" in checks and "beta is A-linear" in checks and "right mult by e1" in checks


def test_galois_on_regular_prints_certificate(capsys, fixtures_dir):
    code, out, _ = run(capsys, "check-galois", fixtures_dir / "classical_kc2.json")
    assert code == 0
    rep = json.loads(out)
    cert = rep["header"]["regular(kC2) / galois co-object"]["certificate"]
    assert cert["dim"] == 2 and cert["u"] == ["1", "0"]


def test_text_format_lists_anchors(capsys, fixtures_dir):
    code, out, _ = run(capsys, "check-hopf", fixtures_dir / "classical_kc2.json", "--format", "text")
    assert code == 0
    assert out.startswith("check-hopf: PASS")
    assert "<" in out and "[ok  ]" in out


@pytest.mark.parametrize("command", [c for c in COMMANDS if c != "all"])
def test_every_command_passes_on_sweedler(command, fixtures_dir):
    r = run_command(load(fixtures_dir / "sweedler.json"), command, Options(matrices=False))
    assert r.verdict == "pass", [f.check for f in r.failures][:5]


def test_not_applicable_exits_one(kc2):
    raw = {k: v for k, v in kc2.raw.items() if k not in ("yd_data", "yd_modules")}
    r = run_command(parse_document(raw), "check-yd")
    assert r.verdict == "not_applicable"
    assert exit_code(r) == 1


def test_failing_report_has_witness(kc2):
    raw = corrupt(kc2.raw, ["yd_modules", "kC2_k", "coaction", 1, 0])
    r = run_command(parse_document(raw), "check-yd", Options(name="kC2_k"))
    assert r.verdict == "fail" and exit_code(r) == 1
    (w, *_) = differing_witnesses(r)
    assert w.witness["basis_tuple"] is not None
    text = emit_report(r, "text")
    assert "FAIL" in text and "witness:" in text


def test_verdict_survives_both_formats(kc2):
    for r in (run_command(kc2, "check-yd"), run_command(parse_document(corrupt(kc2.raw, ["hopf_algebras", "kC2", "counit", 0])), "check-hopf")):
        assert json.loads(emit_report(r, "json"))["verdict"] == r.verdict
        assert emit_report(r, "text").splitlines()[0] == f"{r.command}: {r.verdict.upper()}"
        assert emit_report(r) == emit_report(r)


def test_empty_report_verdicts():
    r = Report("x")
    assert r.verdict == "pass"
    r.not_applicable = True
    assert r.verdict == "not_applicable"


def test_usage_errors(capsys, fixtures_dir, kc2):
    f = fixtures_dir / "classical_kc2.json"
    assert run(capsys, "check-yd", f, "--name", "nope")[0] == 2
    assert run(capsys, "braid", f, "--with", "nope")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", str(f)])
    assert info.value.code == 2
    with pytest.raises(UsageError):
        run_command(kc2, "frobnicate")
    with pytest.raises(UsageError):
        emit_report(Report("x"), "xml")


def test_input_errors_exit_two(capsys, tmp_path, kc2):
    missing = tmp_path / "missing.json"
    code, _, err = run(capsys, "all", missing)
    assert code == 2 and "no such file" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "all", bad)[0] == 2
    raw = json.loads(json.dumps(kc2.raw))
    raw["field"] = {"prime_field": 4}
    p = tmp_path / "p4.json"
    p.write_text(json.dumps(raw))
    code, _, err = run(capsys, "check-hopf", p)
    assert code == 2 and "/field/prime_field" in err
    empty = tmp_path / "empty"
    empty.mkdir()
    assert run(capsys, "all", empty)[0] == 2


def test_directory_input_prefixes_sources(capsys, tmp_path, kc2):
    for name in ("a", "b"):
        (tmp_path / f"{name}.json").write_text(json.dumps(kc2.raw))
    code, out, _ = run(capsys, "check-yd", tmp_path)
    assert code == 0
    names = [f["check_name"] for f in json.loads(out)["findings"]]
    assert any(n.startswith("a: ") for n in names) and any(n.startswith("b: ") for n in names)


def test_findings_are_sorted_and_jobs_do_not_change_output(fixtures_dir):
    doc = load(fixtures_dir / "ks3.json")
    one = run_command(doc, "all", Options(jobs=1))
    many = run_command(doc, "all", Options(jobs=3))
    assert emit_report(one) == emit_report(many)
    tags = [f.check.split(" / ")[0] for f in one.findings]
    assert tags == sorted(tags)


def test_scalar_slots_cover_matrices(kc2):
    slots = scalar_slots(kc2.raw)
    assert ["hopf_algebras", "kC2", "mult", 1, 3] in slots
    assert ["hopf_algebras", "kC2", "unit", 0] in slots
    assert all(p[0] != "description" for p in slots)
