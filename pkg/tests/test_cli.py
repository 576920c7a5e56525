import math

import numpy as np
import pytest

from dyngraph.cli import main, parse_targets
from dyngraph.demo import LAYERED_CIRCUIT_TEXT


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    return _write


def read_csv(path):
    with open(path, encoding="utf-8") as f:
        header = f.readline().strip().split(",")
        rows = np.array([[float(x) for x in ln.split(",")] for ln in f if ln.strip()])
    return header, rows


def test_compile_layered(write, tmp_path, capsys):
    src = write("layers.circ", LAYERED_CIRCUIT_TEXT)
    out = tmp_path / "layers.sched"
    assert main(["compile", src, "--out", str(out)]) == 0
    assert "67pi/4" in capsys.readouterr().out
    text = out.read_text()
    assert text.count("segment ") == 16
    assert "checkpoint layer3 59pi/4" in text


def test_compile_empty_circuit(write, tmp_path, capsys):
    out = tmp_path / "e.sched"
    assert main(["compile", write("e.circ", "qubits 1\n"), "--out", str(out)]) == 0
    assert "total duration 0" in capsys.readouterr().out
    assert out.read_text() == "vertices 2\n"


def test_compile_legacy_t_fails(write, capsys):
    assert main(["compile", write("t.circ", "qubits 1\nt 1\n"), "--legacy"]) != 0
    assert "legacy form not prose-specified" in capsys.readouterr().err


def test_compile_parse_error(write, capsys):
    assert main(["compile", write("bad.circ", "qubits 2\ncnot 1 3\n")]) == 2
    assert "line 2" in capsys.readouterr().err


def test_simulate_layered(write, tmp_path, capsys):
    sched = tmp_path / "layers.sched"
    main(["compile", write("layers.circ", LAYERED_CIRCUIT_TEXT), "--out", str(sched)])
    capsys.readouterr()
    trace = tmp_path / "trace.csv"
    assert main(["simulate", str(sched), "--init", "basis:000", "--out", str(trace)]) == 0
    header, rows = read_csv(trace)
    assert header == ["t"] + [f"p{i}" for i in range(8)]
    row = rows[np.flatnonzero(np.isclose(rows[:, 0], 21 * math.pi / 2, atol=1e-12))[0], 1:]
    np.testing.assert_allclose(row, [0, 0, 0.25, 0.25, 0.25, 0.25, 0, 0], atol=1e-9)
    final = capsys.readouterr().out.strip().splitlines()
    assert len(final) == 8


def test_simulate_zero_duration(write, tmp_path):
    trace = tmp_path / "z.csv"
    assert main(["simulate", write("z.sched", "vertices 2\n"), "--init", "basis:0", "--out", str(trace)]) == 0
    _, rows = read_csv(trace)
    assert rows.tolist() == [[0.0, 1.0, 0.0]]


def test_simulate_x(write, capsys):
    sched = write("x.sched", "vertices 2\nsegment pi/2\nedge 0 1\nend\nsegment 3pi/2\nloop 0\nloop 1\nend\n")
    assert main(["simulate", sched, "--init", "basis:0"]) == 0
    amps = [complex(*map(float, ln.split(","))) for ln in capsys.readouterr().out.split()]
    np.testing.assert_allclose(amps, [0, 1], atol=1e-15)


def test_simulate_dimension_mismatch(write):
    assert main(["simulate", write("x.sched", "vertices 2\n"), "--init", "basis:000"]) != 0


def test_simulate_bad_dt(write):
    assert main(["simulate", write("x.sched", "vertices 2\n"), "--dt", "0"]) == 2


@pytest.mark.parametrize(
    "args",
    [["h", "1", "1"], ["toffoli", "(1,2)->3", "3"], ["cnot", "3->1", "3"], ["halt", "2", "2"], ["phase", "1", "1", "--theta", "pi/8"]],
)
def test_verify_pass(args, capsys):
    assert main(["verify", *args]) == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS")
    dev = float(out.split("max deviation ")[1].split(",")[0])
    assert dev < 1e-9


def test_verify_errors():
    assert main(["verify", "x", "2", "1"]) != 0
    assert main(["verify", "swap", "1", "2"]) != 0
    assert main(["verify", "x", "?", "1"]) != 0
    assert main(["verify"]) == 2


def test_verify_tolerance_fail(capsys):
    # no compiled gate is this exact; a zero-ish tolerance forces the failure path
    assert main(["verify", "h", "1", "1", "--tol", "1e-300"]) == 1
    assert capsys.readouterr().out.startswith("FAIL")


def test_parse_targets():
    assert parse_targets("2") == (2,)
    assert parse_targets("1->2") == (1, 2)
    assert parse_targets("(1,2)->3") == (1, 2, 3)
    assert parse_targets("(1, 2) -> 3") == (1, 2, 3)


def test_demo_layers(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["demo-layers", "--out", str(a)]) == 0
    report = capsys.readouterr().out.splitlines()
    assert len(report) == 4 and all(" match " in ln for ln in report)
    assert main(["demo-layers", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    _, rows = read_csv(a)
    i = np.flatnonzero(np.isclose(rows[:, 0], 17 * math.pi / 2, atol=1e-12))[0]
    np.testing.assert_allclose(rows[i, 1:], [0, 0, 0.25, 0.25, 0, 0, 0.25, 0.25], atol=1e-9)
