import io
import json
import subprocess
import sys

import pytest

from hemispaces.cli import run
from hemispaces.hemispace import Hemispace

QUAD = '{"n":2,"I":[1,2],"J":[],"L":[],"alpha":true}'
DIAG = '{"n":2,"I":[1],"J":[2],"L":[],"alpha":false}'


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classify():
    assert call("classify", "--hyperplane", QUAD, "--point", "1,0") == (0, '{"k":[1]}\n', "")
    assert call("classify", "--hyperplane", QUAD, "--point", "0,0")[1] == '{"k":[1,2,"free"]}\n'
    assert call("classify", "--hyperplane", DIAG, "--point", "-inf,-inf")[1] == '"typeI"\n'


def test_usage_errors():
    assert call("classify", "--hyperplane", "{oops", "--point", "1,0")[0] == 2
    assert call("classify", "--hyperplane", QUAD, "--point", "1,,0")[0] == 2
    assert call("classify", "--hyperplane", QUAD, "--point", "1")[0] == 2
    assert call("classify", "--hyperplane", QUAD, "--point", "1,0", "--bogus")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("enumerate", "--n", "2", "--hyperplane", DIAG)[0] == 2
    assert call("count", "--n", "0")[0] == 2


def test_decompose():
    code, out, _ = call("decompose", "--hyperplane", QUAD)
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 7
    assert rows[0] == {"face": {"k": [1]}, "conditions": ["x1 > -inf", "x2 < x1", "0 < x1"], "codim": 0, "pure": False}
    assert rows[-1]["face"] == {"k": [1, 2, "free"]} and rows[-1]["pure"]


def test_decompose_reads_file(tmp_path):
    f = tmp_path / "h.json"
    f.write_text(DIAG, encoding="utf-8")
    code, out, _ = call("decompose", "--hyperplane", str(f))
    assert code == 0 and out.splitlines()[-1] == '{"face":"typeI","conditions":["x1 = -inf","x2 = -inf"]}'


def test_count_and_bell():
    code, out, _ = call("count", "--n", "2")
    assert code == 0
    assert [json.loads(l) for l in out.splitlines()] == [
        {"n": 1, "enumerated": 6, "formula": 6, "match": True},
        {"n": 2, "enumerated": 26, "formula": 26, "match": True},
    ]
    assert call("bell", "--n", "4")[1] == "1 3 13 75 541\n"
    assert call("bell", "--n", "5")[1] == "1 3 13 75 541 4683\n"


def test_enumerate_round_trip(tmp_path):
    code, out, _ = call("enumerate", "--n", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 26
    for line in lines:
        assert Hemispace.from_json(line).dumps() == line
    target = tmp_path / "out.jsonl"
    assert call("enumerate", "--n", "2", "--out", str(target))[0] == 0
    assert target.read_text(encoding="utf-8") == out
    assert len(call("enumerate", "--n", "2", "--hyperplane", QUAD)[1].splitlines()) == 10


def test_splittings():
    code, out, _ = call("splittings", "--m", "2", "--list")
    rows = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and rows[0] == {"m": 2, "splittings": 3}
    assert {json.dumps(r["weak_order"]) for r in rows[1:]} == {"[[1, 2]]", "[[1], [2]]", "[[2], [1]]"}


def test_verify_reports_and_is_deterministic():
    code, out, _ = call("verify", "--n", "2", "--trials", "30", "--seed", "3")
    assert code == 0
    assert "PASS overall" in out and "\033[" not in out
    assert "4683" in out and "4283" in out
    assert call("verify", "--n", "2", "--trials", "30", "--seed", "3")[1] == out


def test_render(tmp_path):
    svg = tmp_path / "quad.svg"
    assert call("render", "--hyperplane", QUAD, "--svg", str(svg))[0] == 0
    text = svg.read_text(encoding="utf-8")
    assert text.startswith("<svg") and text.count("<title>") >= 7
    hm = call("enumerate", "--n", "2", "--hyperplane", QUAD)[1].splitlines()[0]
    assert call("render", "--hyperplane", QUAD, "--hemispace", hm, "--svg", str(svg))[0] == 0
    assert "#e15759" in svg.read_text(encoding="utf-8")
    assert call("render", "--hyperplane", '{"n":1,"I":[1],"J":[],"L":[],"alpha":true}', "--svg", str(svg))[0] == 2
    assert call("render", "--hyperplane", DIAG, "--hemispace", hm, "--svg", str(svg))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hemispaces", "bell", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 3 13 75\n"
