import json

import pytest

from skeincalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mul(capsys):
    code, out, _ = run(capsys, "mul", "(1,0)", "(0,1)")
    assert code == 0
    assert out.strip() == "(A^-1)*(1,-1) + (A)*(1,1)"


def test_mul_json_matches_text(capsys):
    code, out, _ = run(capsys, "mul", "--json", "(1,0)*(0,1)")
    assert code == 0
    doc = json.loads(out)
    assert doc["terms"] == [
        {"label": [1, -1], "coef": "A^-1"},
        {"label": [1, 1], "coef": "A"},
    ]


def test_reduce_t2_normalizes(capsys):
    code, out, _ = run(capsys, "reduce-t2", "(1,0)*(1,0)")
    assert code == 0
    assert out.strip() == "(2)*empty + (1)*(2,0)"


def test_abelianize(capsys):
    code, out, _ = run(capsys, "abelianize", "A*(3,4) + (1,0)")
    assert code == 0
    assert out.strip() == "(A + 1)*(1,0)"


def test_certify_ab_json_schema(capsys):
    code, out, _ = run(capsys, "certify-ab", "--json", "3", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["input"] == [3, 1]
    assert doc["canonical"] == [1, 1]
    assert doc["steps"][0]["conjugator"] == [1, 0]
    assert doc["steps"][0]["scale"] == "(A)/(A^2 - 1)"


def test_reduce_t3_json(capsys):
    code, out, _ = run(capsys, "reduce-t3", "--json", "2", "3", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["input"] == [2, 3, 5]
    assert doc["canonical"] == [0, 1, 1]
    for step in doc["steps"]:
        assert len(step["matrix"]) == 3
        assert sorted(step["permutation"]) == [0, 1, 2]


def test_reduce_t3_rejects_non_coprime(capsys):
    code, _, err = run(capsys, "reduce-t3", "2", "4", "6")
    assert code == 2
    assert "coprime" in err


def test_generators(capsys):
    code, out, _ = run(capsys, "generators", "--json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc) == 9
    assert doc[0] == {"kind": "empty"}
    assert {"kind": "curve", "curve": [1, 1, 1]} in doc
    assert doc[-1] == {"kind": "alpha"}


def test_grade(capsys):
    code, out, _ = run(capsys, "grade", "--json", "2,3,5", "1,0,1")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["buckets"]) == 8
    by_class = {tuple(b["class"]): b["curves"] for b in doc["buckets"]}
    assert by_class[(0, 1, 1)] == [[2, 3, 5]]
    assert by_class[(1, 0, 1)] == [[1, 0, 1]]


def test_common_curve(capsys):
    code, out, _ = run(
        capsys,
        "common-curve",
        "--",
        "1,0,0;0,1,0;0,0,1",
        "1,2",
        "-2,-3,1;1,0,0;0,1,0",
        "1,2",
    )
    assert code == 0
    assert out.strip() == "[2,-1,0]"


def test_common_curve_same_plane(capsys):
    code, _, err = run(
        capsys, "common-curve", "1,0,0;0,1,0;0,0,1", "1,2", "1,0,0;0,1,0;0,0,1", "2,1"
    )
    assert code == 2
    assert "coincide" in err


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "--box", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"box": 2, "comparisons": 625, "mismatches": 0, "pass": True}


def test_closure_check(capsys):
    code, out, _ = run(capsys, "closure-check", "--box", "3")
    assert code == 0
    assert "pass" in out


def test_box_env_var(capsys, monkeypatch):
    monkeypatch.setenv("SKEINCALC_BOX", "2")
    code, out, _ = run(capsys, "oracle-check", "--json")
    assert code == 0
    assert json.loads(out)["box"] == 2


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--box", "2")
    assert code == 0
    assert "FAIL" not in out


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "reduce-t2", "(1,0) +")
    assert code == 2
    assert "line 1" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_roundtrip_render_parse_via_cli(capsys):
    code, out, _ = run(capsys, "reduce-t2", "(A^2+1)*(2,3) + (1,0)*(0,1)")
    assert code == 0
    code2, out2, _ = run(capsys, "reduce-t2", out.strip())
    assert code2 == 0
    assert out2 == out
