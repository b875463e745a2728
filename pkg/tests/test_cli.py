import json
import subprocess
import sys

import pytest

from endogate import cli


def run(*argv):
    code, text, body, _ = cli.run(list(argv))
    return code, json.loads(text) if text.lstrip().startswith("{") else text, body


def test_certify_json_shape():
    code, doc, _ = run("certify", "--poly", "x^5 - x - 1")
    assert code == 0
    assert doc["schema"] == 1 and doc["command"] == "certify"
    assert doc["body"]["conclusion"] == "TrivialEndomorphisms"
    assert doc["body"]["certificate"]["group_name"] == "S5"
    assert set(doc["meta"]) >= {"elapsed_s", "backend"}


def test_certify_out_of_hypothesis():
    code, doc, _ = run("certify", "--poly", "x^4 + 1")
    assert code == 2
    assert doc["body"]["conclusion"] == "OutOfHypothesis"


def test_certify_coeffs():
    code, doc, _ = run("certify", "--coeffs", "120,120,60,20,5,1")
    assert code == 0 and doc["body"]["certificate"]["group"] in ("S_n", "A_n")


def test_certify_file(tmp_path):
    p = tmp_path / "polys.txt"
    p.write_text("# header\nx^5 - x - 1\n\nx^7 - x - 1  # trinomial\n")
    code, doc, _ = run("certify", "--file", str(p))
    assert code == 0
    assert [r["input"] for r in doc["body"]["results"]] == ["x^5 - x - 1", "x^7 - x - 1"]


def test_parse_error_names_token(capsys):
    assert cli.main(["certify", "--poly", "x^5 + y"]) == 1
    assert "'y'" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["dichotomy", "--n", "4"], ["lemmas", "--n", "6"], ["two-torsion", "--n", "35"]])
def test_bad_n(argv, capsys):
    assert cli.main(argv) == 1
    assert "n must be odd" in capsys.readouterr().err


def test_reduce_even_odd_degree(capsys):
    assert cli.main(["reduce-even", "--poly", "x^5 - x - 1"]) == 1
    assert "odd" in capsys.readouterr().err


def test_reduce_even():
    code, doc, _ = run("reduce-even", "--poly", "x^6 - x - 1")
    assert code == 0 and doc["body"]["deg_h1"] == 5 and doc["body"]["master_identity"]


def test_lemmas_n5():
    code, doc, _ = run("lemmas", "--n", "5")
    assert code == 0 and doc["body"]["passed"]
    dims = doc["body"]["checks"]["commutant_dims"]
    assert (dims["A_n_on_QB"], dims["A_n_on_full"]) == (1, 2)


def test_two_torsion_n5():
    code, doc, _ = run("two-torsion", "--n", "5")
    assert code == 0 and doc["body"]["classes"] == 16 and doc["body"]["passed"]


def test_dichotomy_report():
    code, doc, _ = run("dichotomy", "--n", "5", "--trials", "100", "--seed", "7")
    assert code == 0
    h = doc["body"]["histogram"]
    assert h["Violation"] == 0 and h["Full"] + h["Scalar"] == 100 and h["Full"] >= 95


def test_determinism():
    a = run("dichotomy", "--n", "7", "--trials", "10", "--seed", "1")[2]
    b = run("dichotomy", "--n", "7", "--trials", "10", "--seed", "1")[2]
    assert cli.body_bytes(a) == cli.body_bytes(b)


def test_prime_budget_env_and_flag(monkeypatch):
    monkeypatch.setenv("ENDOGATE_PRIME_BUDGET", "50")
    _, doc, _ = run("certify", "--poly", "x^5 - x - 1")
    assert doc["body"]["certificate"]["prime_budget"] == 50
    _, doc, _ = run("certify", "--poly", "x^5 - x - 1", "--prime-budget", "70")
    assert doc["body"]["certificate"]["prime_budget"] == 70


def test_nonpositive_budget(capsys):
    assert cli.main(["certify", "--poly", "x^5-x-1", "--prime-budget", "0"]) == 1


def test_output_file_and_text(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert cli.main(["lemmas", "--n", "7", "--output", str(out)]) == 0
    assert json.loads(out.read_text())["body"]["passed"]
    assert cli.main(["certify", "--poly", "x^5 - x - 1", "--format", "text"]) == 0
    assert "TrivialEndomorphisms" in capsys.readouterr().out


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "endogate", "certify", "--poly", "x^4 + 1"], capture_output=True, text=True
    )
    assert out.returncode == 2
    assert json.loads(out.stdout)["body"]["conclusion"] == "OutOfHypothesis"
