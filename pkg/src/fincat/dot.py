"""Deterministic Graphviz DOT text.

Output depends only on the input data: nodes and edges are emitted in
sorted order and every string is quoted.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .category import Category
from .dpo import GraphInstance, Rewrite
from .functor import Functor
from .natural import NaturalTransformation, _report
from .quiver import Quiver


class Mode(str, Enum):
    FULL = "Full"
    REDUCED = "Reduced"
    SIMPLE = "Simple"


def _q(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _attrs(**kw) -> str:
    if not kw:
        return ""
    return " [" + ", ".join(f"{k}={_q(v)}" for k, v in kw.items()) + "]"


def _digraph(name: str, body: Iterable[str]) -> str:
    lines = [f"digraph {_q(name)} {{"]
    lines.extend("  " + b for b in body)
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_dot(q: Quiver, name: str = "quiver") -> str:
    body = [f"{_q(x)};" for x in q.object_classes]
    for a in sorted(q.arrows, key=lambda a: a.id):
        r = q.resolved_arrow(a.id)
        body.append(f"{_q(r.dom)} -> {_q(r.cod)}{_attrs(label=a.id)};")
    return _digraph(name, body)


def category_edges(c: Category, mode: Mode = Mode.REDUCED) -> list[tuple[str, str, str]]:
    """``(dom, cod, label)`` triples drawn for ``c`` in ``mode``."""
    mode = Mode(mode)
    if mode is Mode.FULL:
        words = [w for cls in c.morphisms for w in cls.members]
        edges = [(w.dom, w.cod, c.format(w)) for w in sorted(words, key=lambda w: w.sort_key())]
    else:
        edges = [(f.dom, f.cod, c.format(f)) for f in c.morphisms]
    if mode is Mode.SIMPLE:
        merged: dict[tuple[str, str], list[str]] = {}
        for d, k, label in edges:
            if d != k:
                merged.setdefault((d, k), []).append(label)
        edges = [(d, k, ", ".join(labels)) for (d, k), labels in sorted(merged.items())]
    return edges


def category_dot(c: Category, mode: Mode = Mode.REDUCED, name: str = "category") -> str:
    body = [f"{_q(x)};" for x in c.objects]
    body += [f"{_q(d)} -> {_q(k)}{_attrs(label=label)};" for d, k, label in category_edges(c, mode)]
    return _digraph(name, body)


def _cluster(prefix: str, title: str, nodes, edges) -> list[str]:
    out = [f"subgraph {_q('cluster_' + prefix)} {{", f"  label={_q(title)};"]
    for node_id, label in nodes:
        out.append(f"  {_q(prefix + ':' + node_id)}{_attrs(label=label)};")
    for src, dst, label in edges:
        out.append(f"  {_q(prefix + ':' + src)} -> {_q(prefix + ':' + dst)}{_attrs(label=label)};")
    out.append("}")
    return out


def _generator_edges(q: Quiver):
    out = []
    for a in sorted(q.arrows, key=lambda a: a.id):
        r = q.resolved_arrow(a.id)
        out.append((r.dom, r.cod, a.id))
    return out


def functor_dot(F: Functor, name: str = "functor") -> str:
    """Domain and codomain side by side with dashed object-mapping edges."""
    d, c = F.domain, F.codomain
    body = ["rankdir=LR;"]
    body += _cluster("dom", "domain", [(x, x) for x in d.objects], _generator_edges(d.quiver))
    body += _cluster("cod", "codomain", [(x, x) for x in c.objects], _generator_edges(c.quiver))
    for x in d.objects:
        body.append(f"{_q('dom:' + x)} -> {_q('cod:' + F.map_object(x))} [style=dashed];")
    return _digraph(name, body)


def naturality_dot(nt: NaturalTransformation, name: str = "naturality") -> str:
    """One commutative-square cluster per generator arrow of the domain."""
    F, G, eta = nt.source, nt.target, nt.components
    c = nt.codomain
    report = _report(nt)
    missing = set(report.missing)
    body = []
    d = F.domain
    seen = set()
    n = 0
    for arrow in d.quiver.arrows:
        f = d.morphism(arrow.id)
        if f in seen:
            continue
        seen.add(f)
        x, y = (f.dom, f.cod) if F.covariant else (f.cod, f.dom)
        nodes = [("FX", F.map_object(x)), ("FY", F.map_object(y)), ("GX", G.map_object(x)), ("GY", G.map_object(y))]
        ff = c.format(F.map_word(f.canonical))
        gf = c.format(G.map_word(f.canonical))
        edges = [("FX", "FY", ff), ("GX", "GY", gf), ("FX", "GX", c.format(eta[x])), ("FY", "GY", c.format(eta[y]))]
        state = "fails" if report.required[n] in missing else "commutes"
        body += _cluster(f"sq{n}", f"{arrow.id}: {state}", nodes, edges)
        n += 1
    return _digraph(name, body)


def _graph_cluster(prefix: str, title: str, g: GraphInstance) -> list[str]:
    nodes = [(x, f"{x}:{g.nodes[x]}") for x in sorted(g.nodes)]
    edges = [(g.edges[e][0], g.edges[e][1], f"{e}:{g.edges[e][2]}") for e in sorted(g.edges)]
    return _cluster(prefix, title, nodes, edges)


def graph_dot(g: GraphInstance, name: str = "graph") -> str:
    body = [f"{_q(x)}{_attrs(label=g.nodes[x])};" for x in sorted(g.nodes)]
    for e in sorted(g.edges):
        s, d, label = g.edges[e]
        body.append(f"{_q(s)} -> {_q(d)}{_attrs(label=label)};")
    return _digraph(name, body)


def rewrite_dot(rw: Rewrite, name: str = "rewrite") -> str:
    """``G``, ``D`` and ``H`` side by side; dashed edges show ``g: D -> G`` and ``h: D -> H``."""
    body = ["rankdir=LR;"]
    body += _graph_cluster("G", "G", rw.G)
    body += _graph_cluster("D", "D", rw.D)
    body += _graph_cluster("H", "H", rw.H)
    for x in sorted(rw.D.nodes):
        body.append(f"{_q('D:' + x)} -> {_q('G:' + rw.g.node_map[x])} [style=dashed];")
        body.append(f"{_q('D:' + x)} -> {_q('H:' + rw.h.node_map[x])} [style=dashed];")
    return _digraph(name, body)
