"""Double-pushout rewriting of labeled directed multigraphs.

A rule is a span ``L <-l- K -r-> R`` of injective graph embeddings. A
match ``m: L -> G`` is rewritten in two steps: the pushout complement
``D`` removes ``m(L - l(K))`` from ``G``, and the pushout ``H`` glues a
fresh copy of ``R - r(K)`` onto ``D`` along ``K``. Fresh items of ``H``
get ids ``r#<rule-item-id>#<match-index>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from .errors import BudgetExceeded, GluingViolation, InvalidGraph


@dataclass(frozen=True, eq=False)
class GraphInstance:
    nodes: Mapping[str, str]  # node id -> label
    edges: Mapping[str, tuple[str, str, str]]  # edge id -> (src, dst, label)

    def __eq__(self, other):
        return isinstance(other, GraphInstance) and dict(self.nodes) == dict(other.nodes) and dict(self.edges) == dict(other.edges)

    def __hash__(self):
        return hash((frozenset(self.nodes.items()), frozenset(self.edges.items())))

    def incident(self, node: str) -> list[str]:
        return [e for e, (s, d, _) in self.edges.items() if node in (s, d)]

    def __repr__(self):
        return f"GraphInstance({len(self.nodes)} nodes, {len(self.edges)} edges)"


def make_graph(nodes, edges=()) -> GraphInstance:
    """``nodes``: mapping id -> label or iterable of (id, label); ``edges``: (id, src, dst, label)."""
    items = nodes.items() if isinstance(nodes, Mapping) else nodes
    ns: dict[str, str] = {}
    for nid, label in items:
        if nid in ns:
            raise InvalidGraph(f"duplicate node id {nid!r}")
        ns[nid] = label
    es: dict[str, tuple[str, str, str]] = {}
    for eid, src, dst, label in edges:
        if eid in es:
            raise InvalidGraph(f"duplicate edge id {eid!r}")
        for end in (src, dst):
            if end not in ns:
                raise InvalidGraph(f"edge {eid!r} refers to unknown node {end!r}")
        es[eid] = (src, dst, label)
    return GraphInstance(ns, es)


@dataclass(frozen=True, eq=False)
class GraphEmbedding:
    """Label-preserving graph homomorphism; injective when used as an embedding."""

    source: GraphInstance
    target: GraphInstance
    node_map: Mapping[str, str]
    edge_map: Mapping[str, str]

    def problems(self, injective: bool = True) -> list[str]:
        out = []
        S, T = self.source, self.target
        if set(self.node_map) != set(S.nodes):
            out.append("node map is not total")
        if set(self.edge_map) != set(S.edges):
            out.append("edge map is not total")
        if out:
            return out
        for n, t in self.node_map.items():
            if t not in T.nodes or T.nodes[t] != S.nodes[n]:
                out.append(f"node {n} -> {t} does not preserve the label")
        for e, t in self.edge_map.items():
            if t not in T.edges:
                out.append(f"edge {e} -> {t}: no such edge")
                continue
            s, d, label = S.edges[e]
            if T.edges[t] != (self.node_map[s], self.node_map[d], label):
                out.append(f"edge {e} -> {t} does not preserve endpoints or label")
        if injective:
            if len(set(self.node_map.values())) != len(self.node_map):
                out.append("node map is not injective")
            if len(set(self.edge_map.values())) != len(self.edge_map):
                out.append("edge map is not injective")
        return out

    def check(self, injective: bool = True) -> "GraphEmbedding":
        problems = self.problems(injective)
        if problems:
            raise InvalidGraph("; ".join(problems))
        return self

    def then(self, other: "GraphEmbedding") -> "GraphEmbedding":
        """``other ∘ self``."""
        return GraphEmbedding(
            self.source,
            other.target,
            {n: other.node_map[t] for n, t in self.node_map.items()},
            {e: other.edge_map[t] for e, t in self.edge_map.items()},
        )

    def same_maps(self, other: "GraphEmbedding") -> bool:
        return dict(self.node_map) == dict(other.node_map) and dict(self.edge_map) == dict(other.edge_map)


def inclusion(sub: GraphInstance, sup: GraphInstance) -> GraphEmbedding:
    return GraphEmbedding(sub, sup, {n: n for n in sub.nodes}, {e: e for e in sub.edges})


@dataclass(frozen=True, eq=False)
class Rule:
    L: GraphInstance
    K: GraphInstance
    R: GraphInstance
    l: GraphEmbedding
    r: GraphEmbedding


def make_rule(L, K, R, l=None, r=None) -> Rule:
    """Assemble a rule; omitted legs default to inclusion by matching ids."""
    l = GraphEmbedding(K, L, *(l or _identity_maps(K))).check()
    r = GraphEmbedding(K, R, *(r or _identity_maps(K))).check()
    return Rule(L, K, R, l, r)


def _identity_maps(K: GraphInstance):
    return {n: n for n in K.nodes}, {e: e for e in K.edges}


def inverse_rule(rule: Rule) -> Rule:
    return Rule(rule.R, rule.K, rule.L, rule.r, rule.l)


class _Budget:
    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"trial budget of {self.limit} exhausted")


def homomorphisms(
    src: GraphInstance,
    dst: GraphInstance,
    *,
    injective: bool = False,
    fixed_nodes: Optional[Mapping[str, str]] = None,
    fixed_edges: Optional[Mapping[str, str]] = None,
    budget: Optional[_Budget] = None,
) -> Iterator[GraphEmbedding]:
    """All label-preserving homomorphisms, in lexicographic order of assignments."""
    fixed_nodes = fixed_nodes or {}
    fixed_edges = fixed_edges or {}
    snodes = sorted(src.nodes)
    sedges = sorted(src.edges)
    by_label: dict[str, list[str]] = {}
    for n in sorted(dst.nodes):
        by_label.setdefault(dst.nodes[n], []).append(n)
    by_ends: dict[tuple, list[str]] = {}
    for e in sorted(dst.edges):
        by_ends.setdefault(dst.edges[e], []).append(e)
    nmap: dict[str, str] = {}
    emap: dict[str, str] = {}
    used_nodes: set[str] = set()
    used_edges: set[str] = set()

    def edges_from(i):
        if i == len(sedges):
            yield GraphEmbedding(src, dst, dict(nmap), dict(emap))
            return
        e = sedges[i]
        s, d, label = src.edges[e]
        options = by_ends.get((nmap[s], nmap[d], label), [])
        if e in fixed_edges:
            options = [t for t in options if t == fixed_edges[e]]
        for t in options:
            if injective and t in used_edges:
                continue
            if budget:
                budget.tick()
            emap[e] = t
            used_edges.add(t)
            yield from edges_from(i + 1)
            used_edges.discard(t)
            del emap[e]

    def nodes_from(i):
        if i == len(snodes):
            yield from edges_from(0)
            return
        n = snodes[i]
        options = by_label.get(src.nodes[n], [])
        if n in fixed_nodes:
            options = [t for t in options if t == fixed_nodes[n]]
        for t in options:
            if injective and t in used_nodes:
                continue
            if budget:
                budget.tick()
            nmap[n] = t
            used_nodes.add(t)
            yield from nodes_from(i + 1)
            used_nodes.discard(t)
            del nmap[n]

    yield from nodes_from(0)


def find_matches(rule: Rule, G: GraphInstance) -> list[GraphEmbedding]:
    return list(homomorphisms(rule.L, G, injective=True))


def _deleted(rule: Rule):
    kept_nodes = set(rule.l.node_map.values())
    kept_edges = set(rule.l.edge_map.values())
    return (
        [n for n in rule.L.nodes if n not in kept_nodes],
        [e for e in rule.L.edges if e not in kept_edges],
    )


def dangling_edges(rule: Rule, m: GraphEmbedding) -> list[str]:
    G = m.target
    del_nodes, _ = _deleted(rule)
    doomed = {m.node_map[n] for n in del_nodes}
    matched = set(m.edge_map.values())
    return sorted(e for e, (s, d, _) in G.edges.items() if e not in matched and (s in doomed or d in doomed))


def gluing_condition(rule: Rule, m: GraphEmbedding) -> bool:
    """Dangling check; identification holds automatically for injective matches."""
    if len(set(m.node_map.values())) != len(m.node_map) or len(set(m.edge_map.values())) != len(m.edge_map):
        return False
    return not dangling_edges(rule, m)


@dataclass(frozen=True, eq=False)
class Rewrite:
    G: GraphInstance
    D: GraphInstance
    H: GraphInstance
    m: GraphEmbedding  # L -> G
    n: GraphEmbedding  # K -> D
    g: GraphEmbedding  # D -> G
    h: GraphEmbedding  # D -> H
    p: GraphEmbedding  # R -> H (the comatch)

    def squares_commute(self, rule: Rule) -> bool:
        return rule.l.then(self.m).same_maps(self.n.then(self.g)) and rule.r.then(self.p).same_maps(self.n.then(self.h))


def apply(rule: Rule, G: GraphInstance, m: GraphEmbedding, match_index: int = 0) -> Rewrite:
    m.check()
    if m.source is not rule.L and m.source != rule.L:
        raise InvalidGraph("match does not start at the rule's left-hand side")
    if not gluing_condition(rule, m):
        raise GluingViolation(f"deleting would leave dangling edges: {', '.join(dangling_edges(rule, m))}")
    del_nodes, del_edges = _deleted(rule)
    gone_nodes = {m.node_map[n] for n in del_nodes}
    gone_edges = {m.edge_map[e] for e in del_edges}
    D = GraphInstance(
        {n: lab for n, lab in G.nodes.items() if n not in gone_nodes},
        {e: v for e, v in G.edges.items() if e not in gone_edges},
    )
    g = inclusion(D, G)
    n = GraphEmbedding(
        rule.K, D,
        {k: m.node_map[rule.l.node_map[k]] for k in rule.K.nodes},
        {k: m.edge_map[rule.l.edge_map[k]] for k in rule.K.edges},
    )

    r_nodes_from_k = {v: k for k, v in rule.r.node_map.items()}
    r_edges_from_k = {v: k for k, v in rule.r.edge_map.items()}
    p_nodes: dict[str, str] = {}
    p_edges: dict[str, str] = {}
    h_nodes = dict(D.nodes)
    h_edges = dict(D.edges)
    for x in sorted(rule.R.nodes):
        if x in r_nodes_from_k:
            p_nodes[x] = n.node_map[r_nodes_from_k[x]]
        else:
            fresh = f"r#{x}#{match_index}"
            if fresh in h_nodes:
                raise InvalidGraph(f"fresh node id {fresh!r} already present in the host graph")
            h_nodes[fresh] = rule.R.nodes[x]
            p_nodes[x] = fresh
    for x in sorted(rule.R.edges):
        if x in r_edges_from_k:
            p_edges[x] = n.edge_map[r_edges_from_k[x]]
        else:
            fresh = f"r#{x}#{match_index}"
            if fresh in h_edges:
                raise InvalidGraph(f"fresh edge id {fresh!r} already present in the host graph")
            s, d, label = rule.R.edges[x]
            h_edges[fresh] = (p_nodes[s], p_nodes[d], label)
            p_edges[x] = fresh
    H = GraphInstance(h_nodes, h_edges)
    return Rewrite(G, D, H, m, n, g, inclusion(D, H), GraphEmbedding(rule.R, H, p_nodes, p_edges))


def _pushout(rule: Rule, rw: Rewrite):
    """Pushout of ``r`` and ``n`` built from scratch with tagged ids."""
    D, R = rw.D, rule.R
    r_from_k = {v: k for k, v in rule.r.node_map.items()}
    re_from_k = {v: k for k, v in rule.r.edge_map.items()}
    nodes = {("d", x): lab for x, lab in D.nodes.items()}
    h_nodes = {x: ("d", x) for x in D.nodes}
    p_nodes = {}
    for x, lab in R.nodes.items():
        p_nodes[x] = ("d", rw.n.node_map[r_from_k[x]]) if x in r_from_k else ("r", x)
        nodes.setdefault(p_nodes[x], lab)
    edges = {("d", e): (("d", s), ("d", t), lab) for e, (s, t, lab) in D.edges.items()}
    h_edges = {e: ("d", e) for e in D.edges}
    p_edges = {}
    for e, (s, t, lab) in R.edges.items():
        if e in re_from_k:
            p_edges[e] = ("d", rw.n.edge_map[re_from_k[e]])
        else:
            p_edges[e] = ("r", e)
            edges[("r", e)] = (p_nodes[s], p_nodes[t], lab)
    return nodes, edges, p_nodes, p_edges, h_nodes, h_edges


def _flatten(nodes, edges):
    name = {k: f"{k[0]}:{k[1]}" for k in nodes}
    ename = {k: f"{k[0]}:{k[1]}" for k in edges}
    return (
        GraphInstance({name[k]: v for k, v in nodes.items()},
                      {ename[k]: (name[s], name[t], lab) for k, (s, t, lab) in edges.items()}),
        name,
        ename,
    )


def _candidate_cocones(rule: Rule, rw: Rewrite):
    """Cocones over the span ``R <- K -> D``: the reference pushout, its
    single-pair quotients, itself plus one isolated node per label, and the
    supplied ``H``."""
    nodes, edges, pn, pe, hn, he = _pushout(rule, rw)
    base, name, ename = _flatten(nodes, edges)
    p0 = ({x: name[v] for x, v in pn.items()}, {x: ename[v] for x, v in pe.items()})
    h0 = ({x: name[v] for x, v in hn.items()}, {x: ename[v] for x, v in he.items()})
    yield base, p0, h0
    ids = sorted(base.nodes)
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            if base.nodes[a] != base.nodes[b]:
                continue
            merge = {x: (a if x == b else x) for x in ids}
            quotient = GraphInstance(
                {x: lab for x, lab in base.nodes.items() if x != b},
                {e: (merge[s], merge[t], lab) for e, (s, t, lab) in base.edges.items()},
            )
            yield quotient, ({x: merge[v] for x, v in p0[0].items()}, p0[1]), ({x: merge[v] for x, v in h0[0].items()}, h0[1])
    for label in sorted(set(base.nodes.values())):
        extra = dict(base.nodes)
        extra[f"extra:{label}"] = label
        yield GraphInstance(extra, dict(base.edges)), p0, h0
    yield rw.H, (dict(rw.p.node_map), dict(rw.p.edge_map)), (dict(rw.h.node_map), dict(rw.h.edge_map))


def pushout_counterexample(rule: Rule, rw: Rewrite, trial_budget: Optional[int] = 100000):
    """First cocone admitting zero or several mediators out of ``rw.H``.

    Returns ``(cocone_graph, mediator_count)`` or ``None``. Raises
    :class:`BudgetExceeded` when the search needs more than
    ``trial_budget`` assignment steps.
    """
    budget = _Budget(trial_budget)
    H = rw.H
    for target, (pn, pe), (hn, he) in _candidate_cocones(rule, rw):
        fixed_nodes: dict[str, str] = {}
        fixed_edges: dict[str, str] = {}
        clash = False
        for maps, via in (((pn, pe), rw.p), ((hn, he), rw.h)):
            for x, y in via.node_map.items():
                if fixed_nodes.setdefault(y, maps[0][x]) != maps[0][x]:
                    clash = True
            for x, y in via.edge_map.items():
                if fixed_edges.setdefault(y, maps[1][x]) != maps[1][x]:
                    clash = True
        count = 0
        if not clash:
            for _ in homomorphisms(H, target, fixed_nodes=fixed_nodes, fixed_edges=fixed_edges, budget=budget):
                count += 1
                if count > 1:
                    break
        if count != 1:
            return target, count
    return None


def verify_pushout_universal(rule: Rule, rw: Rewrite, trial_budget: Optional[int] = 100000) -> bool:
    return pushout_counterexample(rule, rw, trial_budget) is None


def is_isomorphic(a: GraphInstance, b: GraphInstance) -> bool:
    if len(a.nodes) != len(b.nodes) or len(a.edges) != len(b.edges):
        return False
    return next(homomorphisms(a, b, injective=True), None) is not None
