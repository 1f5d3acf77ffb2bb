import json
import subprocess
import sys

import pytest

from stabrep import __version__
from stabrep.cli import main
from stabrep.krings import KClass


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def result_of(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["version"] == __version__
    assert doc["meta"]["subcommand"] == argv[0]
    return doc["result"]


def test_tensor_osp(capsys):
    res = result_of(capsys, "tensor", "--cat", "osp", "2,1", "1,1")
    klass = KClass.from_json(res)
    assert klass.terms == {(3, 2): 1, (2, 2, 1): 1, (3, 1, 1): 1, (2, 1, 1, 1): 1,
                           (3,): 1, (1, 1, 1): 1, (2, 1): 2, (1,): 1}


def test_lr(capsys):
    assert result_of(capsys, "lr", "3,2,1", "2,1", "2,1") == 2


def test_kron(capsys):
    assert result_of(capsys, "kron", "2,1", "2,1", "2,1") == 1
    assert result_of(capsys, "kron", "--stable", "1", "1", "1") == 1


def test_specialize_tensor(capsys):
    res = result_of(capsys, "specialize", "--cat", "sp", "--rank", "2", "--tensor", "2,1", "1,1")
    assert res["group"] == "Sp(4)"
    assert {tuple(t["label"]): t["mult"] for t in res["terms"]} == {
        (3, 2): 1, (3,): 1, (2, 1): 1, (1,): 1}
    assert res["genuine"] is True


def test_specialize_single(capsys):
    res = result_of(capsys, "specialize", "--cat", "sp", "--rank", "2", "2,1,1,1")
    assert res["degree0"] is None
    assert res["euler"]["terms"] == [{"label": [2, 1], "mult": -1}]
    res = result_of(capsys, "specialize", "--cat", "sym", "--rank", "4", "3")
    assert res == {"zero": False, "degree": 1, "label": [2, 2]}
    res = result_of(capsys, "specialize", "--cat", "sym", "--rank", "2", "2,1")
    assert res == {"zero": True}


def test_branching_subcommands(capsys):
    res = result_of(capsys, "restrict", "--variant", "o", "1|1")
    assert KClass.from_json(res).terms == {(2,): 1, (1, 1): 1}
    res = result_of(capsys, "polarize", "--variant", "o", "1")
    assert KClass.from_json(res).terms == {((1,), ()): 1, ((), (1,)): 1}
    rows = result_of(capsys, "comult", "--cat", "o", "1")
    assert {(r["left"], r["right"]) for r in rows} == {("1", "-"), ("-", "1")}
    assert result_of(capsys, "ext", "--cat", "o", "--degree", "2", "", "3,1") == 1
    assert result_of(capsys, "ext", "--cat", "sp", "--degree", "2", "", "3,1") == 0
    assert result_of(capsys, "blocks", "--cat", "osp", "1", "") is False


def test_resolve(capsys):
    res = result_of(capsys, "resolve", "--cat", "ga", "2,1")
    assert [len(level) for level in res] == [1, 2, 1]


def test_graph_and_diagram(tmp_path, capsys):
    graph = tmp_path / "g.json"
    graph.write_text(json.dumps({"vertices": 3, "edges": [[0, 1, "1"], [1, 2, "1"], [2, 0, "2"]]}))
    assert result_of(capsys, "graph", "--json-in", str(graph)) == 1
    pair = [
        {"kind": "brauer", "top": 2, "bot": 2, "blocks": [["t0", "t1"], ["b0", "b1"]]},
        {"kind": "brauer", "top": 2, "bot": 2, "blocks": [["t0", "t1"], ["b0", "b1"]]},
    ]
    path = tmp_path / "d.json"
    path.write_text(json.dumps(pair))
    res = result_of(capsys, "diagram-compose", "--json-in", str(path))
    assert res["loops"] == 1 and res["sign"] == 1
    assert res["diagram"] == pair[0]


def test_centralizer(capsys):
    res = result_of(capsys, "centralizer", "--kind", "brauer", "--n", "2", "--rank", "3")
    assert res == {"dim_image": 3, "dim_commutant": 3}


@pytest.mark.parametrize("argv", [
    ["frobnicate"], [], ["lr", "3,x", "1", "1"], ["tensor", "--cat", "gl", "1", "1"],
    ["lr", "1,2", "1", "1"], ["graph", "--json-in", "/nonexistent.json"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert json.loads(err)["error"]["kind"] == "usage"


def test_computation_refusals(capsys):
    code, out, err = run(capsys, "centralizer", "--kind", "brauer", "--n", "4", "--rank", "4")
    assert code == 1 and out == ""
    assert json.loads(err)["error"]["kind"] == "computation"
    code, _, _ = run(capsys, "ext", "--cat", "o", "--degree", "1", "1|", "1")
    assert code == 2
    code, _, err = run(capsys, "specialize", "--cat", "sp", "--rank", "9", "1")
    assert code == 1


def test_console_script_is_byte_identical():
    cmd = [sys.executable, "-m", "stabrep", "tensor", "--cat", "gl", "2,1|1", "1|1"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
    doc = json.loads(first)
    assert KClass.from_json(doc["result"]).cat == "gl"
