"""Command-line behavior: verdicts, exit codes, formats, coherence."""

import json

import pytest

from caselogic import cli

CB_DOC = {
    "signature": {
        "plaintiff": ["pi1", "pi2", "pi3"],
        "defendant": ["delta1", "delta2", "delta3"],
    },
    "cases": [
        {
            "id": "c1",
            "facts": ["pi1", "pi3", "delta1", "delta3"],
            "reason": ["pi1"],
            "outcome": "plaintiff",
        },
        {
            "id": "c2",
            "facts": ["pi2", "delta1", "delta3"],
            "reason": ["delta3"],
            "outcome": "defendant",
        },
    ],
}

TINY_DOC = {
    "signature": {"plaintiff": ["p1"], "defendant": ["d1"]},
    "cases": [
        {"id": "a", "facts": ["p1", "d1"], "reason": ["p1"], "outcome": "plaintiff"}
    ],
}


@pytest.fixture
def cb_file(tmp_path):
    path = tmp_path / "cb.json"
    path.write_text(json.dumps(CB_DOC), encoding="utf-8")
    return str(path)


@pytest.fixture
def tiny_file(tmp_path):
    path = tmp_path / "tiny.json"
    path.write_text(json.dumps(TINY_DOC), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_consistent(capsys, cb_file):
    code, out, _ = run(capsys, "check", cb_file)
    assert code == 0
    assert out.strip() == "consistent"


def test_check_inconsistent_with_witness(capsys, tmp_path):
    doc = json.loads(json.dumps(CB_DOC))
    doc["cases"].append(
        {
            "id": "c3",
            "facts": ["pi1", "pi2", "delta1"],
            "reason": ["delta1"],
            "outcome": "defendant",
        }
    )
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(capsys, "--format", "json", "check", str(path))
    assert code == 1
    report = json.loads(out)
    assert report["consistent"] is False
    assert report["witness"]["case_for_0"] == "c3"
    assert report["witness"]["case_for_1"] == "c1"
    assert report["conflict_state"] == ["pi1", "pi2", "delta1"]


def test_check_rejects_malformed_file(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "error:" in err
    doc = json.loads(json.dumps(CB_DOC))
    doc["cases"][0]["reason"] = ["delta1"]
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "polarity" in err


def test_decide(capsys, cb_file):
    code, out, _ = run(capsys, "decide", cb_file, "--facts", "pi1,pi2")
    assert code == 0
    assert out.splitlines() == ["1", "forced by: c1"]
    code, out, _ = run(capsys, "decide", cb_file, "--facts", "pi2,delta2")
    assert code == 0
    assert out.strip() == "?"
    code, _, err = run(capsys, "decide", cb_file, "--facts", "nope")
    assert code == 2


def test_update(capsys, cb_file):
    new = json.dumps(
        {"id": "c3", "facts": ["pi2", "delta2"], "reason": ["pi2"], "outcome": "plaintiff"}
    )
    code, out, _ = run(capsys, "update", cb_file, "--case", new)
    assert code == 0
    assert out.strip() == "accept"
    clash = json.dumps(
        {
            "id": "c3",
            "facts": ["pi1", "pi2", "delta1"],
            "reason": ["delta1"],
            "outcome": "defendant",
        }
    )
    code, out, _ = run(capsys, "update", cb_file, "--case", clash)
    assert code == 1
    assert "conflict state: {pi1, pi2, delta1}" in out
    code, _, err = run(capsys, "update", cb_file, "--case", "{oops")
    assert code == 2


def test_translate_and_eval(capsys, cb_file, tmp_path):
    code, out, _ = run(capsys, "translate", cb_file)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert all(line.startswith("~[]~(") for line in lines)
    model_path = str(tmp_path / "model.json")
    code, _, _ = run(capsys, "translate", cb_file, "--emit-model", model_path)
    assert code == 0
    code, out, _ = run(
        capsys, "eval", model_path, "--state", "pi1,pi3,delta1,delta3",
        "--formula", "t(1)",
    )
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(
        capsys, "eval", model_path, "--state", "pi2,delta2", "--formula", "t(1)"
    )
    assert code == 1 and out.strip() == "false"
    code, _, err = run(
        capsys, "eval", model_path, "--state", "pi1", "--formula", "t(1"
    )
    assert code == 2 and "position" in err


def test_translate_result_mode_requires_result_cases(capsys, cb_file):
    code, _, err = run(capsys, "translate", cb_file, "--model", "result")
    assert code == 2
    assert "result" in err


def test_empty_translation_prints_true(capsys, tmp_path):
    doc = {"signature": CB_DOC["signature"], "cases": []}
    path = tmp_path / "empty.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(capsys, "translate", str(path))
    assert code == 0
    assert out.strip() == "true"


def test_explain(capsys, cb_file):
    code, out, _ = run(
        capsys, "explain", cb_file, "--kind", "axp",
        "--facts", "pi1,pi3,delta1,delta3",
    )
    assert code == 0
    assert "pi1 & ~delta2" in out
    code, out, _ = run(
        capsys, "--format", "json", "explain", cb_file, "--kind", "pimp",
        "--outcome", "0",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["terms"] == [
        {"positive": ["delta3"], "negative": ["pi1", "pi3"]}
    ]
    code, _, err = run(capsys, "explain", cb_file, "--kind", "pimp")
    assert code == 2
    code, _, err = run(capsys, "explain", cb_file, "--kind", "axp")
    assert code == 2


def test_explain_all_models(capsys, tiny_file):
    code, out, _ = run(
        capsys, "explain", tiny_file, "--kind", "waxp", "--facts", "p1,d1",
        "--all-models",
    )
    assert code == 0
    assert "p1" in out


def test_sat(capsys):
    sig = json.dumps({"plaintiff": ["p1"], "defendant": ["d1"]})
    code, out, _ = run(
        capsys, "sat", "--signature", sig, "--formula", "t(1) & t(0)"
    )
    assert code == 1 and out.strip() == "unsatisfiable"
    code, out, _ = run(
        capsys, "--format", "json", "sat", "--signature", sig,
        "--formula", "p1 & t(0)",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["satisfiable"] is True
    assert "witness_model" in doc
    code, _, err = run(capsys, "sat", "--signature", "{oops", "--formula", "t(1)")
    assert code == 2


def test_check_sat_coherence(capsys, tiny_file):
    # the check verdict equals satisfiability of the printed translation
    code, out, _ = run(capsys, "translate", tiny_file)
    assert code == 0
    conjuncts = out.splitlines()
    formula = " & ".join(f"({c})" for c in conjuncts)
    sig = json.dumps(TINY_DOC["signature"])
    sat_code, _, _ = run(
        capsys, "sat", "--prec", "--signature", sig, "--formula", formula
    )
    check_code, _, _ = run(capsys, "check", tiny_file)
    assert sat_code == check_code == 0


def test_determinism(capsys, cb_file):
    first = run(capsys, "--format", "json", "explain", cb_file, "--kind",
                "cxp", "--facts", "pi1,pi3,delta1,delta3")
    second = run(capsys, "--format", "json", "explain", cb_file, "--kind",
                 "cxp", "--facts", "pi1,pi3,delta1,delta3")
    assert first == second
