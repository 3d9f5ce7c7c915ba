import json
import subprocess
import sys

import pytest

from zxcf.canonical import from_json, validate_zxcf
from zxcf.cli import run
from zxcf.codes import SHOR, STEANE


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "shor.tab": SHOR,
        "steane.tab": STEANE,
        "bell.tab": "XX\nZZ\n",
        "bell2.tab": "ZZ\n-YY\n",
        "zz.tab": "ZZ\n",
        "mzz.tab": "-ZZ\n",
        "bad.tab": "XZ\nZZ\n",
        "junk.tab": "XQ\n",
        "bell.circ": "wires=2\ninputs=\nH 0\nCX 0 1\n",
        "rep.circ": "wires=2\ninputs=0\nCX 0 1\n",
    }.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def test_compile_shor(files, capsys):
    out = files["dir"] / "shor.json"
    dot = files["dir"] / "shor.dot"
    assert run(["compile", files["shor.tab"], "-o", str(out), "--dot", str(dot)]) == 0
    d = from_json(out.read_text())
    assert validate_zxcf(d) == []
    assert dot.read_text().startswith("graph zxcf {")
    assert run(["validate", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "valid"


def test_compile_is_byte_stable(files):
    a = files["dir"] / "a.json"
    b = files["dir"] / "b.json"
    run(["compile", files["steane.tab"], "-o", str(a)])
    run(["compile", files["steane.tab"], "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_compile_circuit(files, capsys):
    assert run(["compile", files["bell.circ"]]) == 0
    bell_circ = capsys.readouterr().out
    assert run(["compile", files["bell.tab"]]) == 0
    assert capsys.readouterr().out == bell_circ


def test_count(capsys):
    assert run(["count", "2", "1"]) == 0
    assert capsys.readouterr().out.strip() == "30 30 30"
    assert run(["count", "1", "2"]) == 2


@pytest.mark.parametrize(
    "a, b, oracle, answer, code",
    [
        ("shor.tab", "shor.tab", False, "equal", 0),
        ("bell.tab", "bell2.tab", True, "equal", 0),
        ("zz.tab", "mzz.tab", True, "unequal", 1),
        ("bell.tab", "zz.tab", True, "unequal", 1),
        ("rep.circ", "zz.tab", True, "equal", 0),
        ("bell.circ", "bell.tab", False, "equal", 0),
    ],
)
def test_eq(files, capsys, a, b, oracle, answer, code):
    argv = ["eq", files[a], files[b]] + (["--oracle"] if oracle else [])
    assert run(argv) == code
    assert capsys.readouterr().out.strip() == answer


def test_eq_oracle_size_cap(files, capsys):
    assert run(["eq", files["shor.tab"], files["shor.tab"], "--oracle"]) == 0
    big = files["dir"] / "big.tab"
    big.write_text("n=11 k=0\n")
    assert run(["eq", str(big), str(big), "--oracle"]) == 2
    assert run(["eq", str(big), str(big)]) == 0


def test_decompile_and_synth(files, capsys):
    run(["compile", files["bell.tab"], "-o", str(files["dir"] / "bell.json")])
    assert run(["decompile", str(files["dir"] / "bell.json")]) == 0
    rows = capsys.readouterr().out.split()
    assert sorted(rows) == ["XX", "ZZ"]
    assert run(["synth", files["zz.tab"]]) == 0
    assert capsys.readouterr().out.startswith("wires=2\ninputs=")
    assert run(["synth", files["bell.circ"]]) == 2


def test_validate_reports_violations(files, capsys):
    p = files["dir"] / "v.json"
    p.write_text(json.dumps({"n": 2, "k": 1, "m": [[1, 0]], "a": [], "phase": [1, 0], "had": [False, False]}))
    assert run(["validate", str(p)]) == 1
    assert capsys.readouterr().out.startswith("clifford:")
    assert run(["decompile", str(p)]) == 1
    p.write_text("{not json")
    assert run(["validate", str(p)]) == 2


def test_enumerate(capsys):
    assert run(["enumerate", "2", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 30 and len(set(lines)) == 30
    assert run(["enumerate", "3", "2", "--limit", "5"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 5


def test_render(files, capsys):
    run(["compile", files["bell.tab"], "-o", str(files["dir"] / "bell.json")])
    assert run(["render", str(files["dir"] / "bell.json")]) == 0
    assert 'color="blue"' in capsys.readouterr().out


def test_format_and_usage_errors(files):
    assert run(["compile", files["bad.tab"]]) == 2
    assert run(["compile", files["junk.tab"]]) == 2
    assert run(["compile", str(files["dir"] / "missing.tab")]) == 2
    assert run([]) == 2
    assert run(["frobnicate"]) == 2


def test_selftest(capsys):
    assert run(["selftest", "--max-n", "2", "--trials", "10", "--seed", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 6 and all(line.startswith("PASS") for line in out)


def test_module_entry_point(files):
    res = subprocess.run(
        [sys.executable, "-m", "zxcf", "count", "3", "2"], capture_output=True, text=True, check=False
    )
    assert res.returncode == 0 and res.stdout.strip() == "1260 1260 1260"
