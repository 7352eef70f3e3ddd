import json

import pytest
from conftest import FIXTURES, load_category, load_functor, load_transformation_parts

from fincat import serialize as s
from fincat.dpo import make_rule
from fincat.errors import MalformedDocument
from fincat.natural import natural_transformation


def roundtrip(to_json, from_json, doc):
    again = to_json(from_json(json.loads(json.dumps(doc))))
    assert again == doc
    return again


@pytest.mark.parametrize("name", ["fig1", "fig3-right", "fig4-commutative", "fig9-left", "fig11-right", "fig22-left"])
def test_category_roundtrip(name):
    c = load_category(name)
    doc = s.category_to_json(c)
    roundtrip(s.category_to_json, s.category_from_json, doc)
    assert s.category_from_json(doc).table.partition() == c.table.partition()


@pytest.mark.parametrize("name", ["fig13-left", "fig14-right", "fig17-right", "fig27-right"])
def test_functor_roundtrip(name):
    F = load_functor(name)
    doc = s.functor_to_json(F)
    roundtrip(s.functor_to_json, s.functor_from_json, doc)
    G = s.functor_from_json(doc)
    assert G.codomain.table.partition() == F.codomain.table.partition()


def test_transformation_roundtrip():
    nt = natural_transformation(*load_transformation_parts("fig29-right"))
    doc = s.transformation_to_json(nt)
    roundtrip(s.transformation_to_json, s.transformation_from_json, doc)


def test_graph_and_rule_roundtrip():
    rule = s.rule_from_json(s.load_json(FIXTURES / "dpo" / "rule-relabel.json"))
    doc = s.rule_to_json(rule)
    roundtrip(s.rule_to_json, s.rule_from_json, doc)
    g = s.graph_from_json(s.load_json(FIXTURES / "dpo" / "graph-fan.json"))
    roundtrip(s.graph_to_json, s.graph_from_json, s.graph_to_json(g))
    assert isinstance(make_rule(rule.L, rule.K, rule.R), type(rule))


def test_words():
    assert s.word_from_json("f") == ["f"]
    assert s.word_from_json({"id_at": "X"}) == {"id_at": "X"}
    for bad in ([], [1], {"at": "X"}, 3):
        with pytest.raises(MalformedDocument):
            s.word_from_json(bad)


def test_malformed_documents(tmp_path):
    with pytest.raises(MalformedDocument):
        s.quiver_from_json({"arrows": []})
    with pytest.raises(MalformedDocument):
        s.quiver_from_json({"objects": ["X"], "arrows": [{"id": "f"}]})
    with pytest.raises(MalformedDocument):
        s.category_from_json({"objects": ["X"], "relations": [["f"]]})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(MalformedDocument):
        s.load_json(bad)


def test_referenced_domain(tmp_path):
    (tmp_path / "dom.json").write_text((FIXTURES / "fig1.json").read_text())
    doc = {"domain": "dom.json", "object_map": {"X": "A", "Y": "A", "Z": "A"},
           "arrow_map": {"f": "a", "g": "b"}, "extra_morphism_eqs": [["a", {"id_at": "A"}], ["b", {"id_at": "A"}]]}
    F = s.functor_from_json(doc, base_dir=tmp_path)
    assert F.codomain.summary() == "1 objects, 1 morphisms"
