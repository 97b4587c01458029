import json
import subprocess
import sys

import pytest

from bktableaux.cli import main
from bktableaux.combinatorics import SIGNED
from bktableaux.formats import dumps, pattern_to_json, tableau_to_json
from goldens import BKA_IN, BKA_OUT, BKC_IN, BKC_OUT, BKC_TAB_IN, BKC_TAB_OUT, BKC_TRACE, pat, tab


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(dumps(obj))
    return str(path)


@pytest.mark.parametrize("argv,expected", [
    (["--type", "king", "--n", "2", "--shape", "1,1"], "5"),
    (["--type", "ssyt", "--n", "1", "--shape", "3"], "1"),
    (["--type", "orthogonal", "--n", "1", "--shape", "1"], "3"),
    (["--type", "ssyt", "--n", "2", "--shape", ""], "1"),
])
def test_enumerate_count(capsys, argv, expected):
    code, out, _ = run(capsys, "enumerate", *argv, "--format", "count")
    assert code == 0 and out.strip() == expected


def test_enumerate_json_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "king", "--n", "1", "--shape", "1",
                       "--format", "json", "--objects", "tableau")
    items = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [it["rows"] for it in items] == [[["1b"]], [["1"]]]


def test_poly_text(capsys):
    assert run(capsys, "poly", "--family", "symplectic", "--n", "1", "--shape", "1")[1] == "x1 + x1^-1\n"
    assert run(capsys, "poly", "--family", "orthogonal", "--n", "1", "--shape", "1")[1] == "x1 + 1 + x1^-1\n"


def test_poly_json(capsys):
    code, out, _ = run(capsys, "poly", "--family", "schur", "--n", "3", "--shape", "2,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and sum(t["coef"] for t in data["terms"]) == 8
    assert dumps(data) == out


def test_bk_c_golden_and_involution(tmp_path, capsys):
    src = write(tmp_path, "in.json", pattern_to_json(pat(*BKC_IN), "king"))
    code, out, _ = run(capsys, "bk", "--kind", "c", "--j", "2", src)
    assert code == 0 and out == dumps(pattern_to_json(pat(*BKC_OUT), "king"))
    again = tmp_path / "out.json"
    again.write_text(out)
    assert run(capsys, "bk", "--kind", "c", "--j", "2", str(again))[1] == (tmp_path / "in.json").read_text()


def test_bk_trace(tmp_path, capsys):
    src = write(tmp_path, "in.json", pattern_to_json(pat(*BKC_IN), "king"))
    code, out, _ = run(capsys, "bk", "--kind", "c", "--j", "2", "--trace", src)
    steps = json.loads(out)
    assert code == 0 and len(steps) == 5
    assert [s["rows"] for s in steps[:4]] == [[list(r) for r in pat(*rows).rows] for rows in BKC_TRACE]
    assert steps[4] == pattern_to_json(pat(*BKC_OUT), "king")


def test_bk_a_golden(tmp_path, capsys):
    src = write(tmp_path, "in.json", pattern_to_json(pat(*BKA_IN)))
    code, out, _ = run(capsys, "bk", "--kind", "a", "--j", "3", src)
    assert code == 0 and json.loads(out)["rows"][1] == [12, 6, 0]
    assert out == dumps(pattern_to_json(pat(*BKA_OUT)))


def test_bk_tableau(tmp_path, capsys):
    src = write(tmp_path, "t.json", tableau_to_json(tab(SIGNED, 3, BKC_TAB_IN)))
    code, out, _ = run(capsys, "bk", "--kind", "c", "--j", "2", src)
    assert code == 0 and out == dumps(tableau_to_json(tab(SIGNED, 3, BKC_TAB_OUT)))


def test_bk_invalid_input_exit_1(tmp_path, capsys):
    src = write(tmp_path, "bad.json", {"kind": "king", "rows": [[1, 1], [1, 1], [1, 1], [1]], "circled": []})
    code, _, err = run(capsys, "bk", "--kind", "c", "--j", "1", src)
    assert code == 1 and "error" in err


def test_bk_bad_j_exit_2(tmp_path, capsys):
    src = write(tmp_path, "in.json", pattern_to_json(pat(*BKC_IN), "king"))
    with pytest.raises(SystemExit) as info:
        main(["bk", "--kind", "c", "--j", "5", src])
    assert info.value.code == 2


def test_bad_shape_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--type", "ssyt", "--n", "2", "--shape", "1,2"])
    assert info.value.code == 2


def test_convert_roundtrip(tmp_path, capsys):
    tableau = tableau_to_json(tab(SIGNED, 3, BKC_TAB_IN))
    src = write(tmp_path, "t.json", tableau)
    code, out, _ = run(capsys, "convert", src)
    assert code == 0 and json.loads(out)["kind"] == "king"
    back = write(tmp_path, "p.json", json.loads(out))
    assert run(capsys, "convert", back)[1] == dumps(tableau)


def test_convert_orthogonal(tmp_path, capsys):
    src = write(tmp_path, "o.json", {"kind": "signed_inf", "n": 2, "shape": [3, 2],
                                     "rows": [["1", "1b", "inf"], ["2", "2b"]]})
    code, out, _ = run(capsys, "convert", src)
    assert json.loads(out) == {"kind": "orthogonal", "rows": [[2, 2, 0, 0], [2, 1, 0], [2, 0], [1]],
                               "circled": [1]}


def test_text_formats(tmp_path, capsys):
    src = write(tmp_path, "in.json", pattern_to_json(pat(*BKC_IN), "king"))
    code, out, _ = run(capsys, "convert", "--format", "text", src)
    assert code == 0 and out.splitlines()[0].split() == ["1", "2", "2b"]


def test_canonical_json_idempotent(capsys):
    _, out, _ = run(capsys, "enumerate", "--type", "orthogonal", "--n", "2", "--shape", "1,1",
                    "--format", "json")
    for line in out.splitlines():
        assert dumps(json.loads(line)) == line + "\n"


@pytest.mark.parametrize("check,n,size", [("involution", 2, 3), ("sum-identity", 2, 4),
                                          ("character", 2, 4), ("lemma44", 3, 3),
                                          ("locality", 3, 3), ("symmetry", 2, 3),
                                          ("weight-action", 2, 3)])
def test_verify(capsys, check, n, size):
    code, out, _ = run(capsys, "verify", "--check", check, "--n", str(n), "--max-size", str(size))
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["corpus_size"] > 0


def test_verify_detrop(capsys):
    code, out, _ = run(capsys, "verify", "--check", "detrop", "--n", "3", "--samples", "10", "--seed", "5")
    report = json.loads(out)
    assert code == 0 and report["seed"] == 5 and report["details"]["samples"] == 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bktableaux", "poly", "--family", "symplectic",
                           "--n", "1", "--shape", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "x1 + x1^-1\n"
