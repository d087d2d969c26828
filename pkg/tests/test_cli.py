import json
import subprocess
import sys

import pytest

from conftest import HEXAGON_EDGES
from lrbands.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(obj, name="in.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)
    return _write


def test_construct_then_analyze(capsys, write):
    code, out, _ = run(capsys, "construct", "lines", "--count", "3")
    assert code == 0
    code, out, _ = run(capsys, "analyze", write(out))
    rep = json.loads(out)
    assert code == 0
    assert rep["elements"] == 13
    assert len(rep["poset"]["chambers"]) == 6
    assert rep["classification"]["mc"] and rep["classification"]["thin"]
    assert rep["parity"]["ok"]


def test_free_analyze(capsys, write):
    _, out, _ = run(capsys, "construct", "free", "--letters", "3")
    code, out, _ = run(capsys, "analyze", write(out))
    rep = json.loads(out)
    assert code == 0 and rep["elements"] == 16
    assert rep["adjacency"]["edges"] == []
    assert not rep["classification"]["mc"]


def test_re_emit_is_byte_identical(capsys, write):
    for argv in (["lines", "--count", "4"], ["path", "--n", "5"], ["free", "--letters", "2"],
                 ["covectors", "0", "+", "-"]):
        _, built, _ = run(capsys, "construct", *argv)
        code, again, _ = run(capsys, "analyze", write(built), "--re-emit")
        assert code == 0 and again == built


def test_bad_table_exit_1(capsys, write):
    bad = {"table": [[0, 0, 1], [0, 1, 2], [1, 2, 2]]}
    code, out, err = run(capsys, "analyze", write(bad))
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False
    assoc = [f for f in payload["failures"] if f["axiom"] == "associativity"]
    assert len(assoc[0]["witness"]) == 3
    assert "left regular band" in err


def test_parse_errors_exit_2(capsys, write):
    assert run(capsys, "analyze", write("{oops"))[0] == 2
    assert run(capsys, "analyze", write({"table": [[0, 5]]}))[0] == 2
    assert run(capsys, "analyze", "/nonexistent/file.json")[0] == 2
    assert run(capsys, "construct", "free", "--letters", "9")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_graph_conversions(capsys, write):
    graph = {"vertices": 6, "edges": [list(e) for e in HEXAGON_EDGES]}
    code, out, _ = run(capsys, "from-graph", write(graph))
    assert code == 0
    lrb = json.loads(out)
    assert len(lrb["table"]) == 13
    code, out, _ = run(capsys, "to-graph", write(out, "lrb.json"))
    assert code == 0
    back = json.loads(out)
    assert back["vertices"] == 6 and len(back["edges"]) == 6
    code, out, _ = run(capsys, "roundtrip", write(graph))
    assert code == 0 and json.loads(out) == {"ok": True, "side": "graph"}


def test_invalid_graph_exit_1(capsys, write):
    triangle = {"vertices": 3, "edges": [[0, 1, 1, 1], [1, 2, 1, 2], [2, 0, 1, 3]]}
    code, out, _ = run(capsys, "roundtrip", write(triangle))
    assert code == 1 and "first component 1" in json.loads(out)["reason"]
    code, _, _ = run(capsys, "from-graph", write(triangle))
    assert code == 1


def test_to_graph_on_free_lrb_exit_1(capsys, write):
    _, built, _ = run(capsys, "construct", "free", "--letters", "3")
    code, out, _ = run(capsys, "to-graph", write(built))
    assert code == 1 and "connected" in json.loads(out)["reason"]


def test_check_and_export(capsys, write):
    _, built, _ = run(capsys, "construct", "path", "--n", "4")
    path = write(built)
    code, out, _ = run(capsys, "check", path)
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "export", path, "--format", "dot", "--what", "adjacency")
    assert code == 0 and out.startswith("graph adjacency")
    code, out, _ = run(capsys, "export", path, "--what", "graph")
    assert code == 0 and out.count("--") == 3


def test_stdin_and_module_entry_point(capsys, monkeypatch):
    _, built, _ = run(capsys, "construct", "lines", "--count", "2")
    code, out, _ = run(capsys, "analyze", stdin=built, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["elements"] == 9
    proc = subprocess.run([sys.executable, "-m", "lrbands", "construct", "path", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["names"] == ["0", "F1", "C1", "C2"]


def test_cycle_cap_env(capsys, write, monkeypatch):
    monkeypatch.setenv("LRB_CYCLE_CAP", "0")
    _, built, _ = run(capsys, "construct", "lines", "--count", "3")
    code, out, _ = run(capsys, "check", write(built))
    rep = json.loads(out)
    oracle = [c for c in rep["checks"] if c["name"] == "parity_basis_vs_enumeration"][0]
    assert code == 0 and "note" in oracle
