import io
import json
import subprocess
import sys

import pytest

from copkit.cli import run
from copkit.graph import complete, cycle, parse_graph, serialize, star
from copkit.transforms import parse_map


def call(argv):
    out, err = io.BytesIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in (("c4", cycle(4)), ("k5", complete(5)), ("s5", star(5))):
        p = tmp_path / f"{name}.txt"
        p.write_bytes(serialize(g))
        paths[name] = p
    return paths


def test_gadget_out(tmp_path):
    a = tmp_path / "a.txt"
    code, out, _ = call(["gadget", "--d", 10, "--m", 4, "--out", a])
    assert code == 0 and json.loads(out)["outputs"]["n"] == 16
    assert parse_graph(a.read_bytes()).n == 16


def test_gadget_report_default_m(tmp_path):
    r = tmp_path / "r.json"
    code, out, _ = call(["gadget", "--d", 5, "--report", r])
    rep = json.loads(r.read_text())
    assert code == 0 and parse_graph(out).n == 11
    assert rep["command"] == "gadget" and rep["outputs"]["m"] == 4
    assert set(rep) == {"command", "inputs", "outputs", "checks"}
    assert all(set(c) == {"name", "measured", "bound", "ok"} for c in rep["checks"])


def test_copnum_c4(files):
    code, out, _ = call(["copnum", "--input", files["c4"], "--max-cops", 3])
    assert code == 0 and json.loads(out)["outputs"]["cop_number"] == 2


def test_copnum_exceeded(files):
    code, out, _ = call(["copnum", "--input", files["c4"], "--max-cops", 1])
    assert code == 3 and json.loads(out)["outputs"]["cop_number"] is None


def test_verify_monotone_k5(files):
    code, out, _ = call(["verify-monotone", "--input", files["k5"], "--max-cops", 2])
    rep = json.loads(out)
    assert code == 0
    assert rep["outputs"]["cop_number"] == 1 and rep["outputs"]["t"] == 0


def test_verify_monotone_c4(files):
    code, out, _ = call(["verify-monotone", "--input", files["c4"], "--max-cops", 3])
    rep = json.loads(out)
    assert code == 0 and {"name": "cops_win_hat_1", "measured": False, "bound": False, "ok": True} in rep["checks"]


def test_transform_with_map(files, tmp_path):
    out_p, map_p = tmp_path / "h.txt", tmp_path / "h.map"
    code, out, _ = call(["transform", "--input", files["k5"], "--out", out_p, "--map", map_p])
    assert code == 0
    assert parse_graph(out_p.read_bytes()).n == 35
    assert len(parse_map(map_p.read_bytes())) == 35
    rep = json.loads(out)
    assert rep["outputs"]["n_hat"] == 35


def test_reduce(files, tmp_path):
    r = tmp_path / "r.json"
    code, out, _ = call(["reduce", "--input", files["s5"], "--report", r])
    assert code == 0 and parse_graph(out).max_degree <= 3
    assert json.loads(r.read_text())["outputs"]["k_used"] == 2


def test_ditransform_undirected_input(files):
    code, out, _ = call(["ditransform", "--input", files["c4"]])
    assert code == 0 and out.startswith(b"digraph 20 24\n")


def test_digadget():
    code, out, _ = call(["digadget", "--in-deg", 6, "--out-deg", 5])
    assert code == 0 and out.startswith(b"digraph ")


def test_lift_sim(files, tmp_path):
    t = tmp_path / "t.txt"
    code, out, _ = call(["lift-sim", "--input", files["c4"], "--cops", 1, "--rounds", 50,
                         "--cop-policy", "optimal", "--seed", 3, "--out", t])
    rep = json.loads(out)
    assert code == 0 and rep["outputs"]["captured"] is False
    assert t.read_text().endswith("escaped 50\n")


def test_lift_sim_no_escape(files):
    code, out, _ = call(["lift-sim", "--input", files["k5"], "--cops", 1, "--rounds", 5,
                         "--cop-policy", "random", "--seed", 0])
    assert code == 3


def test_meyniel(tmp_path):
    p = tmp_path / "g.txt"
    code, _, _ = call(["gnp", "--n", 80, "--p", 0.15, "--seed", 5, "--out", p])
    assert code == 0
    code, out, _ = call(["meyniel", "--input", p, "--epsilon", "1/4"])
    rep = json.loads(out)
    assert code == 0 and rep["inputs"]["epsilon"] == "1/4"


def test_named_and_render(tmp_path):
    p, d = tmp_path / "p.txt", tmp_path / "p.dot"
    assert call(["named", "--family", "petersen", "--out", p])[0] == 0
    assert parse_graph(p.read_bytes()).m == 15
    assert call(["named", "--family", "grid", "--size", "3,4"])[1].startswith(b"graph 12 17")
    assert call(["render", "--input", p, "--out", d])[0] == 0
    assert d.read_text().startswith("graph {")


def test_exit_codes(files, tmp_path):
    assert call(["bogus"])[0] == 1
    assert call(["gadget"])[0] == 1
    assert call(["gadget", "--d", 1])[0] == 1
    assert call(["named", "--family", "nope"])[0] == 1
    assert call(["copnum", "--input", tmp_path / "missing.txt", "--max-cops", 2])[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("graph 3 1\n0 7\n")
    code, _, err = call(["copnum", "--input", bad, "--max-cops", 2])
    assert code == 2 and "line 2" in err
    assert call(["copnum", "--input", files["c4"], "--max-cops", 3, "--budget", 10])[0] == 4
    assert call(["meyniel", "--input", files["c4"], "--epsilon", "2"])[0] == 1


def test_threads_flag_is_inert(files):
    a = call(["copnum", "--input", files["c4"], "--max-cops", 3])
    b = call(["--threads", 4, "copnum", "--input", files["c4"], "--max-cops", 3])
    assert a == b


def test_reruns_byte_identical(files, tmp_path):
    cmds = [
        ["gadget", "--d", 10, "--m", 4],
        ["digadget", "--in-deg", 3, "--out-deg", 7],
        ["transform", "--input", files["k5"]],
        ["ditransform", "--input", files["k5"]],
        ["reduce", "--input", files["s5"]],
        ["copnum", "--input", files["c4"], "--max-cops", 3],
        ["verify-monotone", "--input", files["c4"], "--max-cops", 3],
        ["lift-sim", "--input", files["c4"], "--cops", 1, "--rounds", 40, "--cop-policy", "random", "--seed", 2],
        ["meyniel", "--input", files["k5"], "--epsilon", "1/2"],
        ["gnp", "--n", 30, "--p", 0.2, "--seed", 7],
        ["named", "--family", "robertson"],
        ["render", "--input", files["c4"], "--out", tmp_path / "x.dot"],
    ]
    for cmd in cmds:
        assert call(cmd) == call(cmd), cmd


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "copkit", "copnum", "--input", str(files["c4"]),
                           "--max-cops", "3"], capture_output=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["outputs"]["cop_number"] == 2
