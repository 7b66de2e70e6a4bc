import io
import json
import subprocess
import sys

import pytest

from qhecke.cli import run


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, stdin=io.StringIO(stdin), err=err)
    return code, out.getvalue(), err.getvalue()


TABLEAU = json.dumps({"rows": [[1, 4], [2, 2, 3], [5]]})


def test_insert_trace():
    code, out, _ = call("insert", "--tableau", "-", "--letter", "2", "--trace", stdin=TABLEAU)
    assert code == 0
    assert "insertion sequence: (2,3) (1,2) (3,1)" in out
    assert "new cell: (3,1)" in out


def test_insert_into_empty_tableau():
    code, out, _ = call("insert", "--tableau", "-", "--letter", "7", "--json")
    assert code == 0
    assert json.loads(out)["result"]["rows"] == [[7]]


def test_insert_json_feeds_back(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(TABLEAU)
    code, out, _ = call("insert", "--tableau", str(path), "--letter", "2", "--json")
    assert code == 0
    # an insertion report is accepted as the next tableau
    code, out, _ = call("insert", "--tableau", "-", "--letter", "6", "--json", stdin=out)
    assert code == 0
    assert json.loads(out)["result"]["rows"] == [[1, 3], [2, 2, 2, 6], [4], [5]]


def test_rsk_hat():
    code, out, _ = call("rsk-hat", "--word", "52783146")
    assert code == 0
    assert "P-hat  shape (1,4,3)" in out
    code, out, _ = call("rsk-hat", "--word", "52783146", "--json")
    data = json.loads(out)
    assert data["P"]["rows"] == [[1], [2, 3, 4, 6], [5, 7, 8]]


def test_shape_with_oracle():
    code, out, _ = call("shape", "--word", "52783146", "--oracle")
    assert code == 0
    lines = out.splitlines()
    assert lines[:4] == ["lambda\t(4,3,1)", "mIES_1\t{2}", "mIES_2\t{2,5}", "mIES_3\t{1,2,5}"]
    assert "predicted\t(1,4,3)" in lines and "insertion\t(1,4,3)" in lines
    code, out, _ = call("shape", "--word", "637")
    assert code == 0
    # lambda(637) = (2,1) has two rows, so the chain stops at k = 2
    assert "mIES_1\t{6}\nmIES_2\t{3,6}\npredicted\t(1,2)" in out


def test_expand():
    code, out, _ = call("expand", "--elem", "dualimm:2,2,2")
    assert code == 0
    assert out.splitlines()[0].startswith("1\tYQS(")
    code, out, _ = call("expand", "--elem", "yqs:2,1", "--basis", "yqs")
    assert out == "1\tYQS(2,1)\n"


def test_expand_json_round_trip(tmp_path):
    path = tmp_path / "e.json"
    assert call("expand", "--elem", "ext:3,1,2", "--basis", "f", "--json", str(path))[0] == 0
    direct = call("expand", "--elem", "ext:3,1,2")[1]
    code, via_file, _ = call("expand", "--elem", f"json:{path}")
    assert code == 0 and via_file == direct


def test_module_table_and_json_round_trip(tmp_path):
    code, table, _ = call("module", "--kind", "interval", "--lo", "321465", "--hi", "641253")
    assert code == 0
    assert "dim\t9" in table
    path = tmp_path / "m.json"
    assert call("module", "--kind", "interval", "--lo", "321465", "--hi", "641253",
                "--json", str(path))[0] == 0
    code, again, _ = call("module", "--from-json", str(path))
    assert code == 0
    assert again == table


@pytest.mark.parametrize("kind", ["V", "X", "Y", "quotient"])
def test_module_kinds(kind):
    code, out, _ = call("module", "--kind", kind, "--alpha", "3,1,2")
    assert code == 0
    assert out.startswith("element\tpi1")


def test_module_exports(tmp_path):
    dot, png = tmp_path / "y.dot", tmp_path / "y.png"
    code, _, _ = call("module", "--kind", "Y", "--alpha", "2,3,1", "--dot", str(dot), "--png", str(png))
    assert code == 0
    assert dot.read_text().startswith("digraph")
    assert png.read_bytes().startswith(b"\x89PNG")


def test_filtrate(tmp_path):
    code, out, _ = call("filtrate", "--alpha", "2,2,2", "--tiebreak", "revlex")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "interval\t[214365, 615243]"
    strata = [l for l in lines if l[:1].isdigit()]
    assert len(strata) == 6
    assert strata[0].endswith("615243")
    assert all(l.endswith("PASS") for l in lines if l.startswith("check"))
    path = tmp_path / "r.json"
    png = tmp_path / "r.png"
    code, _, _ = call("filtrate", "--alpha", "2,2,2", "--tiebreak", "revlex",
                      "--json", str(path), "--png", str(png))
    assert code == 0 and png.stat().st_size > 0
    assert call("filtrate", "--from-json", str(path))[1] == out


def test_filtrate_X_and_stdin_json():
    code, out, _ = call("filtrate", "--module", "X", "--alpha", "3,1,2", "--json")
    assert code == 0
    code, again, _ = call("filtrate", "--from-json", "-", stdin=out)
    assert code == 0
    assert "interval\t[321465, 641253]" in again


def test_kalpha():
    code, out, _ = call("kalpha", "--alpha", "2,3,1")
    assert code == 0
    assert out.splitlines()[0] == "K(2,3,1)\t5 elements"
    code, out, _ = call("kalpha", "--alpha", "3,1,2", "--json")
    data = json.loads(out)
    assert data["characterizations"] is True
    assert data["members"] == ["321465", "421365", "521364"]


def test_verify_appendix():
    code, out, _ = call("verify-appendix")
    assert code == 0
    assert [l.split("\t")[0] for l in out.splitlines()] == ["PASS"] * 6


def test_sweep_is_deterministic():
    a = call("sweep", "--n", "4")
    b = call("sweep", "--n", "4", "--jobs", "2")
    assert a[0] == 0 and a == b
    assert "seconds" not in a[1]
    code, out, _ = call("sweep", "--n", "3", "--suite", "bijection", "--timing")
    assert code == 0 and out.splitlines()[0].endswith("seconds")


def test_mismatch_exits_one(monkeypatch):
    import qhecke.cli as cli

    monkeypatch.setattr(cli, "predict_shape", lambda w: (9,))
    code, out, _ = call("shape", "--word", "213", "--oracle")
    assert code == 1 and "MISMATCH" in out


@pytest.mark.parametrize(
    "argv, token",
    [
        (["rsk-hat", "--word", "1134"], "1134"),
        (["shape", "--word", "6x7"], "6x7"),
        (["expand", "--elem", "bogus:2,1"], "bogus:2,1"),
        (["expand", "--elem", "f:2,0"], ""),
        (["module", "--kind", "V", "--alpha", "2,a"], "2,a"),
        (["module", "--kind", "interval", "--lo", "21", "--hi", "123"], ""),
        (["sweep", "--suite", "nope"], "nope"),
        (["filtrate"], "--alpha"),
        (["frobnicate"], "frobnicate"),
        (["kalpha", "--alpha", "3,1", "--nonsense"], "--nonsense"),
    ],
)
def test_usage_errors_exit_two(argv, token):
    code, out, err = call(*argv)
    assert code == 2
    assert err.startswith("qhecke:")
    assert token in err


def test_bad_json_and_missing_file(tmp_path):
    code, _, err = call("insert", "--tableau", "-", "--letter", "1", stdin="{oops")
    assert code == 2 and "malformed JSON" in err
    code, _, err = call("module", "--from-json", str(tmp_path / "missing.json"))
    assert code == 2


def test_size_guard_respects_env(monkeypatch):
    monkeypatch.setenv("QHECKE_MAX_N", "3")
    code, out, _ = call("sweep", "--n", "4", "--suite", "filtration_V")
    assert code == 1 and "QHECKE_MAX_N" in out
    code, _, err = call("filtrate", "--alpha", "2,2")
    assert code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhecke", "rsk-hat", "--word", "21"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "shape (1,1)" in proc.stdout
