import json

import pytest

from gortrim import cli
from gortrim import trimclass
from gortrim.docio import (
    DocumentError,
    matrix_document,
    parse_matrix_document,
    report_from_dict,
    report_to_dict,
)
from gortrim.example import PFAFFIANS, example_matrix
from gortrim.polyring import format_poly
from gortrim.trimclass import classify

import random
from instances import random_skew, ring


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps(matrix_document(example_matrix())))
    return path


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# -- documents ---------------------------------------------------------------


def test_document_round_trip():
    T = example_matrix()
    assert parse_matrix_document(matrix_document(T)) == T
    Tq = random_skew(ring("Q"), 5, random.Random(0))
    assert parse_matrix_document(json.dumps(matrix_document(Tq))) == Tq


@pytest.mark.parametrize(
    "mutate,fragment",
    [
        (lambda d: d.pop("field"), "missing key 'field'"),
        (lambda d: d.update(field="F4"), "field"),
        (lambda d: d.update(variables=["x", "y"]), "variables"),
        (lambda d: d["matrix"][1].__setitem__(2, "x +* y"), "matrix[2][3]"),
        (lambda d: d["matrix"][0].__setitem__(1, "y+z+1"), "matrix[1][2]"),
        (lambda d: d["matrix"][3].__setitem__(3, "x"), "matrix[4][4]"),
        (lambda d: d["matrix"][4].__setitem__(0, "x"), "matrix[5][1]"),
        (lambda d: d["matrix"].pop(), "matrix row 1"),
    ],
)
def test_document_errors_name_the_cell(mutate, fragment):
    doc = matrix_document(example_matrix())
    mutate(doc)
    with pytest.raises(DocumentError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        parse_matrix_document(doc)


def test_report_round_trip():
    for S in [(1, 2, 3), (3, 5), (5,), (1, 2, 3, 4)]:
        rep = classify(example_matrix(), S)
        again = report_from_dict(json.loads(json.dumps(report_to_dict(rep))))
        assert again == rep


# -- commands ----------------------------------------------------------------


def test_pfaffians_command(capsys, example_file):
    code, out, _ = run(capsys, "pfaffians", "--input", example_file)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    assert lines[4] == "y5 = x*y^2"
    code, out, _ = run(capsys, "pfaffians", "--input", example_file, "--json")
    gens = json.loads(out)["generators"]
    R = example_matrix().ring
    assert [R.parse(g) for g in gens] == [R.parse(p) for p in PFAFFIANS]


def test_pfaffians_three_by_three(capsys, tmp_path):
    path = tmp_path / "three.json"
    path.write_text(json.dumps({"field": "Q", "variables": ["a", "b", "c"],
                                "matrix": [["0", "a", "b"], ["-a", "0", "c"], ["-b", "-c", "0"]]}))
    code, out, _ = run(capsys, "pfaffians", "--input", path)
    assert code == 0
    assert out.splitlines() == ["y1 = c", "y2 = -b", "y3 = a"]


def test_malformed_document_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"field": "F2", "variables": ["x","y","z"], "matrix": [["0","x^","y"],["x","0","z"],["y","z","0"]]}')
    code, _, err = run(capsys, "pfaffians", "--input", path)
    assert code == 1
    assert "matrix[1][2]" in err and "position 2" in err
    code, _, err = run(capsys, "pfaffians", "--input", tmp_path / "missing.json")
    assert code == 1


def test_classify_command(capsys, example_file):
    code, out, _ = run(capsys, "classify", "--input", example_file, "--trim", "1,2,3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "H(1,1), format (1,7,10,4), mu=7"
    code, out, _ = run(capsys, "classify", "--input", example_file, "--trim", "3,5")
    assert out.strip().splitlines()[-1] == "T, format (1,4,6,3), mu=4"
    assert "permutation: (3,4,1,5,2)" in out


def test_classify_json_round_trip(capsys, example_file):
    code, out, _ = run(capsys, "classify", "--input", example_file, "--trim", "3,4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert list(doc)[:3] == ["trim", "permutation", "t"]
    assert report_from_dict(doc) == classify(example_matrix(), (3, 4))


def test_classify_rejects_size_seven(capsys, tmp_path):
    T = random_skew(ring("F2"), 7, random.Random(7))
    path = tmp_path / "seven.json"
    path.write_text(json.dumps(matrix_document(T)))
    code, _, err = run(capsys, "classify", "--input", path, "--trim", "1,2")
    assert code == 1
    assert "classification requires m=5" in err
    code, out, _ = run(capsys, "pfaffians", "--input", path)
    assert code == 0 and len(out.splitlines()) == 7


def test_classify_bad_trim(capsys, example_file):
    code, _, err = run(capsys, "classify", "--input", example_file, "--trim", "1,x")
    assert code == 1
    code, _, err = run(capsys, "classify", "--input", example_file, "--trim", "6")
    assert code == 1


def test_table_miss_exit_2(capsys, example_file, monkeypatch):
    table = dict(trimclass.CLASS_TABLE)
    del table[(2, 3)]
    monkeypatch.setattr(trimclass, "CLASS_TABLE", table)
    code, _, err = run(capsys, "classify", "--input", example_file, "--trim", "3,5")
    assert code == 2
    assert "no class" in err


def test_report_command(capsys, example_file):
    code, out, _ = run(capsys, "report", "--input", example_file)
    assert code == 0
    assert len(out.strip().splitlines()) == 31
    code, out, _ = run(capsys, "report", "--input", example_file, "--json")
    docs = json.loads(out)
    assert len(docs) == 31
    assert docs[0]["trim"] == [1]


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify-example")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify-lemmas", "--json")
    assert code == 0
    reports = json.loads(out)
    assert all(r["passed"] for r in reports)
    assert sum(len(r["identities"]) for r in reports[:2]) == 20


def test_search_command(capsys, tmp_path):
    argv = ["search", "--field", "F2", "--degree", "2", "--trials", "30", "--seed", "4"]
    code, out1, _ = run(capsys, *argv, "--emit-witnesses", tmp_path / "w")
    assert code == 0
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    census = json.loads(out1)["census"]
    files = sorted((tmp_path / "w").glob("*.json"))
    assert len(files) == len(census)
    doc = json.loads(files[0].read_text())
    T = parse_matrix_document(doc)
    assert str(classify(T, doc["trim"]).tor_class) == doc["class"]


def test_search_bad_config(capsys):
    code, _, err = run(capsys, "search", "--degree", "0")
    assert code == 1
    code, _, err = run(capsys, "search", "--field", "F6")
    assert code == 1


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "gortrim", "verify-example"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.count("[PASS]") >= 10
