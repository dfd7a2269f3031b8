import json
import pathlib

import pytest

import lfac.verify
from lfac.cli import main
from lfac.verify import CheckReport

GOLDEN = pathlib.Path(__file__).parent / "golden"

CASES = [
    ("01_eval_iva_l.txt", ["eval", "L(gsp4.IVa(unr(a)))"]),
    ("02_eval_iva_l_json.txt",
     ["eval", "L(gsp4.IVa(unr(a)))", "--format", "json"]),
    ("03_eval_scalar.txt", ["eval", "(a + b)^2/(a*b)"]),
    ("04_eval_rep.txt", ["eval", "unr(a) x sp(1) + ram(eta, b) x sp(0)"]),
    ("05_eval_shift.txt", ["eval", "shift(L(gsp4.VIa(unr(a))), 1/2)"]),
    ("06_eval_x_json.txt",
     ["eval", "gsp4.X(l, unr(b), unr(a))", "--format", "json"]),
    ("07_eval_theta_json.txt",
     ["eval", "theta(gl2.st(unr(a)), gl2.st(unr(-a)))", "--format", "json"]),
    ("08_eval_va_unicode.txt", ["eval", "L(gsp4.Va(unr(a)))", "--unicode"]),
    ("09_lfactor_iia.txt", ["lfactor", "gsp4.IIa(unr(a), unr(b))"]),
    ("10_lfactor_via_st.txt", ["lfactor", "gsp4.VIa(unr(a))", "gl2.st()"]),
    ("11_lfactor_via_st_json.txt",
     ["lfactor", "gsp4.VIa(unr(a))", "gl2.st()", "--format", "json"]),
    ("12_lfactor_gl2_pair.txt",
     ["lfactor", "gl2.st(unr(a))", "gl2.ps(unr(b), unr(a*b))"]),
    ("13_poles_exc_via.txt",
     ["poles", "--exceptional", "gsp4.VIa(unr(a))", "gl2.st()"]),
    ("14_poles_exc_via_json.txt",
     ["poles", "--exceptional", "gsp4.VIa(unr(a))", "gl2.st()",
      "--format", "json"]),
    ("15_poles_sub_i.txt",
     ["poles", "--subregular", "gsp4.I(unr(a), unr(b), unr(c))"]),
    ("16_poles_sub_iiia_json.txt",
     ["poles", "--subregular", "gsp4.IIIa(unr(a), unr(b))",
      "--format", "json"]),
    ("17_split_nov_via.txt", ["split", "--nov", "gsp4.VIa(unr(a))", "gl2.st()"]),
    ("18_split_ps_via_json.txt",
     ["split", "--ps", "gsp4.VIa(unr(a))", "--format", "json"]),
    ("19_ideals_via.txt", ["ideals", "gsp4.VIa(unr(a))"]),
    ("20_verify_lemma71.txt",
     ["verify", "--suite", "lemma71", "--trials", "5", "--seed", "2"]),
]


@pytest.mark.parametrize("golden, argv", CASES, ids=[c[0][:-4] for c in CASES])
def test_golden_output(capsys, golden, argv):
    assert main(argv) == 0
    out, err = capsys.readouterr()
    assert err == ""
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_syntax_error_exit_2(capsys):
    assert main(["eval", "unr(a"]) == 2
    out, err = capsys.readouterr()
    assert out == ""
    assert err.startswith("error: ")
    assert "line 1" in err


def test_json_error_envelope(capsys):
    assert main(["eval", "unr(a", "--format", "json"]) == 2
    out, err = capsys.readouterr()
    assert err == ""
    doc = json.loads(out)
    assert doc["schema"] == "lfac-1"
    assert doc["error"]["type"] == "syntax"
    assert "')'" in doc["error"]["message"]


def test_domain_error_exit_2(capsys):
    assert main(["eval", "gsp4.IIIa(unr(a), unr(a))"]) == 2
    _, err = capsys.readouterr()
    assert "distinct" in err


def test_pairing_needs_gl2_on_the_right(capsys):
    assert main(["lfactor", "gsp4.VIa(unr(a))", "unr(b)"]) == 2
    _, err = capsys.readouterr()
    assert "GL(2)" in err


def test_missing_catalog_file_exit_2(capsys):
    assert main(["eval", "a", "--catalog", "/no/such/file"]) == 2
    _, err = capsys.readouterr()
    assert err.startswith("error: ")


def test_catalog_override(tmp_path, capsys):
    f = tmp_path / "cat.txt"
    f.write_text("catalog-format 1\n"
                 "type VIa\n"
                 "params sigma:char\n"
                 "block sigma sp 3\n"
                 "similitude sigma^2\n")
    assert main(["eval", "L(gsp4.VIa(unr(a)))", "--catalog", str(f)]) == 0
    out, _ = capsys.readouterr()
    assert out == "1/(1 - a*v^-3*X)\n"


def test_verify_json_reports(capsys):
    assert main(["verify", "--suite", "soudry", "--trials", "3",
                 "--seed", "4", "--format", "json"]) == 0
    out, _ = capsys.readouterr()
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["reports"][0]["suite"] == "soudry"
    assert doc["reports"][0]["trials"] >= 3


def test_verify_failure_exit_1(capsys, monkeypatch):
    def losing_suite(trials, seed, profile):
        report = CheckReport("lemma71", trials)
        report.record(0, seed, "forced failure for the exit-code contract")
        return report
    monkeypatch.setitem(lfac.verify.SUITES, "lemma71", losing_suite)
    assert main(["verify", "--suite", "lemma71", "--trials", "2"]) == 1
    out, _ = capsys.readouterr()
    assert "FAIL" in out
