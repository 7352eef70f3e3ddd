import json
import subprocess
import sys

import pytest
from conftest import FIXTURES

from fincat.cli import main

DPO = FIXTURES / "dpo"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_fig1(capsys):
    assert run(capsys, "cat", "build", "--quiver", FIXTURES / "fig1.json") == (0, "3 objects, 6 morphisms\n", "")


def test_commutes_square(capsys):
    code, out, _ = run(capsys, "cat", "commutes", "--category", FIXTURES / "fig4-free.json")
    assert code == 0 and out == "false; forcing set: i∘f = h∘g\n"
    code, out, _ = run(capsys, "cat", "commutes", "--category", FIXTURES / "fig4-commutative.json")
    assert out == "true\n"


def test_loop_is_possibly_infinite(capsys, tmp_path):
    loop = tmp_path / "loop.json"
    loop.write_text(json.dumps({"objects": ["X"], "arrows": [{"id": "e", "dom": "X", "cod": "X"}]}))
    code, _, err = run(capsys, "cat", "build", "--quiver", loop)
    assert code == 3 and "PossiblyInfinite" in err
    code, out, _ = run(capsys, "cat", "build", "--quiver", loop, "--truncate")
    assert code == 0 and "truncated" in out


def test_validation_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"objects": ["X", "X"]}))
    code, _, err = run(capsys, "cat", "build", "--quiver", bad)
    assert code == 2 and "DuplicateLabel" in err
    code, _, _ = run(capsys, "cat", "build", "--quiver", tmp_path / "missing.json")
    assert code == 2


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["cat", "frobnicate"])
    assert info.value.code == 2


def test_json_output(capsys):
    code, out, _ = run(capsys, "cat", "build", "--category", FIXTURES / "fig4-commutative.json", "--json")
    doc = json.loads(out)
    assert len(doc["morphisms"]) == 9 and doc["complete"]


def test_force_commands(capsys):
    _, out, _ = run(capsys, "cat", "force-groupoid", "--category", FIXTURES / "fig10-left.json")
    assert out.splitlines() == ["g∘f = id_X", "f∘g = id_Y"]
    _, out, _ = run(capsys, "cat", "force-commute", "--category", FIXTURES / "fig5-left.json", "--json")
    assert len(json.loads(out)["equations"]) == 2


def test_dual(capsys):
    _, out, _ = run(capsys, "cat", "dual", "--category", FIXTURES / "fig1.json", "--json")
    doc = json.loads(out)
    assert {"id": "f", "dom": "Y", "cod": "X"} in doc["arrows"]


def test_report_commands(capsys):
    code, out, _ = run(capsys, "cat", "report", "--category", FIXTURES / "fig20.json", "--forcing")
    assert code == 0 and "initial objects: X" in out and "forcing set (commutativity): (empty)" in out
    _, out, _ = run(capsys, "functor", "report", "--functor", FIXTURES / "fig19-left.json")
    assert "full: false" in out
    _, out, _ = run(capsys, "functor", "fibers", "--functor", FIXTURES / "fig27-left.json")
    assert "  morphism g" in out
    _, out, _ = run(capsys, "nat", "report", "--transformation", FIXTURES / "fig28-left.json")
    assert "natural: false" in out


def test_quiver_show(capsys):
    _, out, _ = run(capsys, "quiver", "show", "--quiver", FIXTURES / "fig3-left.json")
    assert out.splitlines() == ["objects: X, Z", "f: X -> X", "g: X -> Z"]


def test_dpo_apply(capsys):
    code, out, _ = run(capsys, "dpo", "apply", "--rule", DPO / "rule-relabel.json",
                       "--graph", DPO / "graph-three-edges.json", "--match-index", 0)
    assert code == 0 and "r#e2#0: 1 -> 2 (y)" in out and "pushout verified: true" in out
    code, _, err = run(capsys, "dpo", "apply", "--rule", DPO / "rule-delete-node.json", "--graph", DPO / "graph-pendant.json")
    assert code == 2 and "GluingViolation" in err
    code, _, _ = run(capsys, "dpo", "apply", "--rule", DPO / "rule-relabel.json",
                     "--graph", DPO / "graph-three-edges.json", "--match-index", 5)
    assert code == 2


def test_export_dot(capsys, tmp_path):
    _, out, _ = run(capsys, "export", "dot", "--category", FIXTURES / "fig1.json", "--mode", "Simple")
    assert out.count("->") == 3
    _, out, _ = run(capsys, "export", "dot", "--quiver", FIXTURES / "fig1.json")
    assert out.count("->") == 2
    target = tmp_path / "f.dot"
    run(capsys, "export", "dot", "--functor", FIXTURES / "fig12-left.json", "--output", target)
    assert target.read_text().startswith('digraph "functor"')
    _, out, _ = run(capsys, "export", "dot", "--transformation", FIXTURES / "fig28-right.json")
    assert "commutes" in out
    _, out, _ = run(capsys, "export", "dot", "--rule", DPO / "rule-delete-edge.json", "--graph", DPO / "graph-edge.json")
    assert "cluster_H" in out


def test_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("FINCAT_MAX_WORD_LENGTH", "2")
    code, _, _ = run(capsys, "cat", "build", "--category", FIXTURES / "fig10-right.json")
    assert code == 0
    code, out, _ = run(capsys, "cat", "build", "--category", FIXTURES / "fig11-left.json", "--max-word-length", "3")
    assert code == 0 and out.endswith("(truncated at word length 3)\n")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fincat", "cat", "build", "--quiver", str(FIXTURES / "fig1.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3 objects, 6 morphisms\n"
