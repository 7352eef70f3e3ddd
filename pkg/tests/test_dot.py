import re

from conftest import load_category, load_functor, load_transformation_parts

from fincat import dot
from fincat.category import free_category
from fincat.dpo import apply, find_matches, make_graph, make_rule
from fincat.natural import natural_transformation
from fincat.quiver import build_quiver


def counts(text):
    edges = [line for line in text.splitlines() if "->" in line]
    nodes = [line for line in text.splitlines() if line.strip().endswith(";") and "->" not in line and "=" not in line]
    return len(nodes), edges


def test_reduced_fig1():
    text = dot.category_dot(load_category("fig1"), dot.Mode.REDUCED)
    n, edges = counts(text)
    assert n == 3 and len(edges) == 6
    assert sum(1 for e in edges if re.match(r'\s*"(\w)" -> "\1"', e)) == 3


def test_simple_drops_loops():
    edges = dot.category_edges(load_category("fig1"), dot.Mode.SIMPLE)
    assert edges == [("X", "Y", "f"), ("X", "Z", "g∘f"), ("Y", "Z", "g")]


def test_simple_merges_parallel_edges():
    edges = dot.category_edges(load_category("fig4-free"), "Simple")
    assert ("X", "W", "h∘g, i∘f") in edges


def test_full_draws_every_word():
    c = load_category("fig4-commutative")
    assert len(dot.category_edges(c, dot.Mode.FULL)) == 10
    assert len(dot.category_edges(c, dot.Mode.REDUCED)) == 9


def test_empty_category():
    assert dot.category_dot(free_category(build_quiver())) == 'digraph "category" {\n}\n'


def test_deterministic_output():
    a = dot.category_dot(load_category("fig11-right"))
    b = dot.category_dot(load_category("fig11-right"))
    assert a == b


def test_quiver_dot_uses_resolved_objects():
    q = build_quiver(["X", "Y"], [("f", "X", "Y")], object_eqs=[("X", "Y")])
    assert '"X" -> "X" [label="f"];' in dot.quiver_dot(q)


def test_functor_and_naturality():
    text = dot.functor_dot(load_functor("fig12-left"))
    assert text.count("style=dashed") == 3
    nt = natural_transformation(*load_transformation_parts("fig28-left"))
    text = dot.naturality_dot(nt)
    assert 'label="f: fails"' in text
    nt = natural_transformation(*load_transformation_parts("fig28-right"))
    assert 'label="f: commutes"' in dot.naturality_dot(nt)


def test_rewrite_dot():
    L = make_graph({"a": "a", "b": "b"}, [("e", "a", "b", "x")])
    K = make_graph({"a": "a", "b": "b"})
    rule = make_rule(L, K, K)
    rw = apply(rule, L, find_matches(rule, L)[0])
    text = dot.rewrite_dot(rw)
    for cluster in ("cluster_G", "cluster_D", "cluster_H"):
        assert cluster in text


def test_quotes_are_escaped():
    q = build_quiver(['say "hi"'])
    assert r'"say \"hi\""' in dot.quiver_dot(q)
