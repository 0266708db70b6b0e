import json

import pytest

from necklaces.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_dims_text_and_exit(capsys):
    code, out = run(capsys, "dims", "1", "6")
    assert code == 0
    assert "k=6: formula=14 enumerated=14 ok" in out


def test_dims_csv(capsys):
    code, out = run(capsys, "dims", "2", "2", "--format", "csv")
    assert code == 0
    assert "2,10,10,ok" in out.splitlines()


def test_bracket_canonical_with_oracle(capsys):
    code, out = run(capsys, "bracket", "x", "x*")
    assert code == 0
    assert "bracket: 1" in out and "agree" in out
    code, out = run(capsys, "bracket", "xx*", "x", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["agree"] is True
    assert data["bracket"]["terms"] == [["-1", "x1"]]


def test_bracket_elements_and_d2(capsys):
    code, out = run(capsys, "bracket", "2*x1 + x2", "x1*", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["bracket"]["terms"] == [["2", "1"]]


def test_bracket_ngl_rule(capsys):
    code, out = run(capsys, "bracket", "e12", "e21", "--rule", "ngl:2")
    assert code == 0
    assert "e11 - e22" in out


def test_bracket_rule_from_json_file(tmp_path, capsys):
    table = {"dim": 1, "a": [[1, 1, 1, "1"]]}
    path = tmp_path / "sc.json"
    path.write_text(json.dumps(table))
    code, out = run(capsys, "bracket", "x1", "x1", "--rule", str(path))
    assert code == 0
    assert "bracket: 0" in out


def test_table1_csv_layout(capsys):
    code, out = run(capsys, "table1", "8", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",8,7,6,5,4,3,2,1,0"
    assert lines[1] == "1,0,0,0,0,0,0,0,1,0"
    assert lines[6] == "6,0,0,1,0,0,0,2,0,1"
    assert lines[8] == "8,1,0,0,0,3,0,3,0,3"


def test_table1_json_oracle_flags(capsys):
    code, out = run(capsys, "table1", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert all(row["oracle_agrees"] for row in data["rows"])


def test_table2_json(capsys):
    code, out = run(capsys, "table2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["antisymmetric"] is True
    assert data["entries"][0][1] == "2"
    assert data["entries"][3][0] == "-2*tr(x*)"
    assert data["audited_cell"]["value"] == "-2*tr(x*)"


def test_center_command(capsys):
    code, out = run(capsys, "center", "1", "2", "6")
    assert code == 0
    assert "violations: 0" in out
    assert "witness value at lambda=1: 6" in out
    code, out = run(capsys, "center", "1", "1", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["is_zero"] is True and data["ok"] is True


def test_verify_suites_exit_zero(capsys):
    for suite in ("jacobi", "loday", "grading", "casimir", "cayley-hamilton", "decoupling"):
        code, out = run(capsys, "verify", suite)
        assert code == 0, suite
        assert "pass" in out


def test_classify_command(capsys):
    code, out = run(capsys, "classify", "0", "0", "1", "1", "0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["leaf"] == "S_lambda" and data["casimir"] == "4"
    code, out = run(capsys, "classify", "0", "0", "0", "0", "0")
    assert code == 0
    assert "S_0''" in out


def test_ngl_command(capsys):
    code, out = run(capsys, "ngl", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["matches_commutators"] is True
    assert len(data["pairs"]) == 16


def test_decompose_command(capsys):
    code, out = run(capsys, "decompose", "8", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["multiplicities"] == {"8": 1, "4": 3, "2": 3, "0": 3}
    assert data["oracle_agrees"] is True


def test_json_output_is_byte_stable(capsys):
    _, out1 = run(capsys, "verify", "jacobi", "--format", "json", "--seed", "7")
    _, out2 = run(capsys, "verify", "jacobi", "--format", "json", "--seed", "7")
    assert out1 == out2


def test_output_to_file(tmp_path, capsys):
    path = tmp_path / "dims.csv"
    code, _ = run(capsys, "dims", "1", "3", "--format", "csv", "--output", str(path))
    assert code == 0
    assert path.read_text().startswith("k,formula,enumerated,ok")


def test_csv_not_defined_everywhere(capsys):
    with pytest.raises(SystemExit):
        run(capsys, "classify", "0", "0", "0", "0", "0", "--format", "csv")
