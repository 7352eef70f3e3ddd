"""JSON documents for quivers, categories, functors, transformations, graphs and rules.

Words are arrays of arrow ids in composition order, so ``["g", "f"]`` is
``g∘f``; an identity is ``{"id_at": "X"}``. A category document is a
quiver document with an optional ``"relations"`` list of word pairs. A
functor's ``"domain"`` and a transformation's functors may be given
inline or as a path relative to the referencing file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .category import Category, make_category
from .congruence import PathWord, SaturationConfig
from .dpo import GraphEmbedding, GraphInstance, Rule, make_graph, make_rule
from .errors import MalformedDocument
from .functor import Functor, build_functor
from .natural import NaturalTransformation, natural_transformation
from .quiver import Quiver, build_quiver


def load_json(path) -> Any:
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"{path}: {exc}") from None


def _resolve(doc, base_dir: Optional[Path]):
    """Follow a string reference to another JSON file."""
    if isinstance(doc, str):
        path = Path(doc)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return load_json(path), path.parent
    return doc, base_dir


def _need(doc, key, kind):
    if not isinstance(doc, dict):
        raise MalformedDocument(f"{kind} document must be a JSON object")
    if key not in doc:
        raise MalformedDocument(f"{kind} document is missing {key!r}")
    return doc[key]


# words

def word_to_json(w: PathWord):
    if w.is_identity:
        return {"id_at": w.dom}
    return list(w.arrows)


def word_from_json(doc):
    if isinstance(doc, dict):
        if set(doc) != {"id_at"}:
            raise MalformedDocument(f"identity words look like {{\"id_at\": X}}, got {doc!r}")
        return doc
    if isinstance(doc, str):
        return [doc]
    if isinstance(doc, list) and doc and all(isinstance(a, str) for a in doc):
        return doc
    raise MalformedDocument(f"not a word: {doc!r}")


def _pairs(doc, kind):
    out = []
    for pair in doc:
        if not isinstance(pair, list) or len(pair) != 2:
            raise MalformedDocument(f"{kind} entries must be two-element lists, got {pair!r}")
        out.append(tuple(pair))
    return out


# quivers and categories

def quiver_to_json(q: Quiver) -> dict:
    return {
        "objects": list(q.objects),
        "arrows": [{"id": a.id, "dom": a.dom, "cod": a.cod} for a in q.arrows],
        "object_eqs": [list(p) for p in q.object_eqs],
        "arrow_eqs": [list(p) for p in q.arrow_eqs],
    }


def _arrows_from_json(doc):
    out = []
    for a in doc:
        try:
            out.append((a["id"], a["dom"], a["cod"]))
        except (KeyError, TypeError):
            raise MalformedDocument(f"arrows need id, dom and cod: {a!r}") from None
    return out


def quiver_from_json(doc) -> Quiver:
    return build_quiver(
        _need(doc, "objects", "quiver"),
        _arrows_from_json(doc.get("arrows", [])),
        _pairs(doc.get("object_eqs", []), "object_eqs"),
        _pairs(doc.get("arrow_eqs", []), "arrow_eqs"),
    )


def category_to_json(c: Category) -> dict:
    doc = quiver_to_json(c.quiver)
    doc["relations"] = [[word_to_json(u), word_to_json(v)] for u, v in c.relations]
    if c.truncate:
        doc["truncate"] = True
    if c.composition_symbol != "∘":
        doc["composition_symbol"] = c.composition_symbol
    if c.identity_prefix != "id_":
        doc["identity_prefix"] = c.identity_prefix
    return doc


def category_from_json(doc, cfg: Optional[SaturationConfig] = None, *, truncate: Optional[bool] = None,
                       base_dir: Optional[Path] = None) -> Category:
    doc, _ = _resolve(doc, base_dir)
    q = quiver_from_json(doc)
    probe = Category(q, (), None)
    rels = [(probe.word(word_from_json(u)), probe.word(word_from_json(v)))
            for u, v in _pairs(doc.get("relations", []), "relations")]
    return make_category(
        q,
        rels,
        cfg or SaturationConfig.from_env(),
        truncate=bool(doc.get("truncate", False)) if truncate is None else truncate,
        composition_symbol=doc.get("composition_symbol", "∘"),
        identity_prefix=doc.get("identity_prefix", "id_"),
    )


# functors and transformations

def functor_to_json(F: Functor) -> dict:
    doc = {
        "domain": category_to_json(F.domain),
        "covariant": F.covariant,
        "object_map": dict(F.object_map),
        "arrow_map": dict(F.arrow_map),
        "extra_objects": list(F.extra_objects),
        "extra_arrows": [{"id": a.id, "dom": a.dom, "cod": a.cod} for a in F.extra_arrows],
        "extra_object_eqs": [list(p) for p in F.extra_object_eqs],
        "extra_morphism_eqs": [[word_to_json(u), word_to_json(v)] for u, v in F.extra_morphism_eqs],
    }
    if F.codomain.truncate and not F.domain.truncate:
        doc["truncate"] = True
    return doc


def functor_from_json(doc, cfg: Optional[SaturationConfig] = None, *, truncate: Optional[bool] = None,
                      base_dir: Optional[Path] = None, domain: Optional[Category] = None) -> Functor:
    doc, base_dir = _resolve(doc, base_dir)
    if truncate is None and "truncate" in doc:
        truncate = bool(doc["truncate"])
    if domain is None:
        domain = category_from_json(_need(doc, "domain", "functor"), cfg, truncate=truncate, base_dir=base_dir)
    return build_functor(
        domain,
        _need(doc, "object_map", "functor"),
        _need(doc, "arrow_map", "functor"),
        covariant=bool(doc.get("covariant", True)),
        extra_objects=doc.get("extra_objects", []),
        extra_arrows=_arrows_from_json(doc.get("extra_arrows", [])),
        extra_object_eqs=_pairs(doc.get("extra_object_eqs", []), "extra_object_eqs"),
        extra_morphism_eqs=[(word_from_json(u), word_from_json(v))
                            for u, v in _pairs(doc.get("extra_morphism_eqs", []), "extra_morphism_eqs")],
        cfg=cfg,
        truncate=truncate,
    )


def transformation_to_json(nt: NaturalTransformation) -> dict:
    return {
        "source": functor_to_json(nt.source),
        "target": functor_to_json(nt.target),
        "components": {x: word_to_json(eta.canonical) for x, eta in nt.components.items()},
    }


def transformation_parts(doc, cfg=None, *, truncate=None, base_dir=None):
    """``(F, G, components)`` from a transformation document, unvalidated."""
    doc, base_dir = _resolve(doc, base_dir)
    domain = None
    if "domain" in doc:
        domain = category_from_json(doc["domain"], cfg, truncate=truncate, base_dir=base_dir)
    F = functor_from_json(_need(doc, "source", "transformation"), cfg, truncate=truncate,
                          base_dir=base_dir, domain=domain)
    G = functor_from_json(_need(doc, "target", "transformation"), cfg, truncate=truncate,
                          base_dir=base_dir, domain=domain or F.domain)
    comps = _need(doc, "components", "transformation")
    if not isinstance(comps, dict):
        raise MalformedDocument("components must map objects to words")
    return F, G, {x: word_from_json(w) for x, w in comps.items()}


def transformation_from_json(doc, cfg=None, *, truncate=None, base_dir=None) -> NaturalTransformation:
    F, G, comps = transformation_parts(doc, cfg, truncate=truncate, base_dir=base_dir)
    return natural_transformation(F, G, comps)


# graphs and rules

def graph_to_json(g: GraphInstance) -> dict:
    return {
        "nodes": [{"id": n, "label": lab} for n, lab in g.nodes.items()],
        "edges": [{"id": e, "src": s, "dst": d, "label": lab} for e, (s, d, lab) in g.edges.items()],
    }


def graph_from_json(doc, base_dir: Optional[Path] = None) -> GraphInstance:
    doc, _ = _resolve(doc, base_dir)
    nodes = _need(doc, "nodes", "graph")
    if isinstance(nodes, dict):
        pairs = list(nodes.items())
    else:
        try:
            pairs = [(n["id"], n.get("label", "")) for n in nodes]
        except (KeyError, TypeError, AttributeError):
            raise MalformedDocument("graph nodes need an id") from None
    try:
        edges = [(e["id"], e["src"], e["dst"], e.get("label", "")) for e in doc.get("edges", [])]
    except (KeyError, TypeError, AttributeError):
        raise MalformedDocument("graph edges need id, src and dst") from None
    return make_graph(pairs, edges)


def _embedding_to_json(e: GraphEmbedding) -> dict:
    return {"nodes": dict(e.node_map), "edges": dict(e.edge_map)}


def _embedding_from_json(doc):
    if doc is None:
        return None
    return dict(doc.get("nodes", {})), dict(doc.get("edges", {}))


def rule_to_json(rule: Rule) -> dict:
    return {
        "L": graph_to_json(rule.L),
        "K": graph_to_json(rule.K),
        "R": graph_to_json(rule.R),
        "l": _embedding_to_json(rule.l),
        "r": _embedding_to_json(rule.r),
    }


def rule_from_json(doc, base_dir: Optional[Path] = None) -> Rule:
    doc, base_dir = _resolve(doc, base_dir)
    L, K, R = (graph_from_json(_need(doc, k, "rule"), base_dir) for k in ("L", "K", "R"))
    return make_rule(L, K, R, _embedding_from_json(doc.get("l")), _embedding_from_json(doc.get("r")))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False)
