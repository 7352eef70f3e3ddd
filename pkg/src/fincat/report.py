"""Property readouts for categories, functors, transformations and rewrites.

A report maps each documented predicate name to a value and, where the
predicate has a certificate, a list of witnesses. Reports render both as
plain text (one ``name: value`` line per check) and as JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from . import analysis, functor as fn, natural
from .category import Category
from .dpo import Rewrite, Rule, pushout_counterexample
from .errors import BudgetExceeded, ContravariantUnsupported
from .forcing import ForcingSet
from .serialize import graph_to_json


@dataclass(frozen=True)
class Check:
    value: Any
    witnesses: tuple[str, ...] = ()


@dataclass
class AnalysisReport:
    subject: str
    checks: dict[str, Check] = field(default_factory=dict)
    forcing_sets: Optional[dict[str, list[str]]] = None

    def add(self, name: str, value, witnesses=()):
        self.checks[name] = Check(value, tuple(witnesses))

    def to_json(self) -> dict:
        doc = {
            "subject": self.subject,
            "checks": {k: {"value": v.value, "witnesses": list(v.witnesses)} for k, v in self.checks.items()},
        }
        if self.forcing_sets is not None:
            doc["forcing_sets"] = self.forcing_sets
        return doc

    def text(self) -> str:
        lines = [f"subject: {self.subject}"]
        for name, check in self.checks.items():
            lines.append(f"{name}: {_show(check.value)}")
            lines.extend(f"  {w}" for w in check.witnesses)
        for target, eqs in (self.forcing_sets or {}).items():
            lines.append(f"forcing set ({target}): {'; '.join(eqs) if eqs else '(empty)'}")
        return "\n".join(lines) + "\n"


def _show(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ", ".join(map(str, value)) if value else "(none)"
    return str(value)


def _names(c: Category, classes) -> list[str]:
    return [c.format(f) for f in classes]


def _signature(c: Category, f) -> str:
    return f"{c.format(f)}: {f.dom} -> {f.cod}"


def category_report(c: Category, subject: str = "category", forcing: Optional[dict[str, ForcingSet]] = None) -> AnalysisReport:
    r = AnalysisReport(subject)
    r.add("size", c.summary())
    r.add("objects", list(c.objects))
    r.add("morphisms", [_signature(c, f) for f in c.morphisms])

    monos, epis, witnesses_m, witnesses_e = [], [], [], []
    for f in c.morphisms:
        cm = analysis.mono_counterexample(c, f)
        if cm is None:
            monos.append(f)
        else:
            witnesses_m.append(f"{c.format(f)}: {c.format(cm[0])} vs {c.format(cm[1])}")
        ce = analysis.epi_counterexample(c, f)
        if ce is None:
            epis.append(f)
        else:
            witnesses_e.append(f"{c.format(f)}: {c.format(ce[0])} vs {c.format(ce[1])}")
    r.add("monomorphisms", _names(c, monos), witnesses_m)
    r.add("epimorphisms", _names(c, epis), witnesses_e)
    r.add("bimorphisms", _names(c, [f for f in monos if f in set(epis)]))

    sections, retractions, isos = [], [], []
    ws, wr, wi = [], [], []
    for f in c.morphisms:
        left = analysis.left_inverses(c, f)
        right = analysis.right_inverses(c, f)
        shown = not f.is_identity
        if left:
            sections.append(f)
            if shown:
                ws.append(f"{c.format(f)}: left inverse {c.format(left[0])}")
        if right:
            retractions.append(f)
            if shown:
                wr.append(f"{c.format(f)}: right inverse {c.format(right[0])}")
        inv = analysis.inverse(c, f)
        if inv is not None:
            isos.append(f)
            if shown:
                wi.append(f"{c.format(f)}: inverse {c.format(inv)}")
    r.add("sections", _names(c, sections), ws)
    r.add("retractions", _names(c, retractions), wr)
    r.add("isomorphisms", _names(c, isos), wi)

    r.add("constant morphisms", _names(c, [f for f in c.morphisms if analysis.is_constant(c, f)]))
    r.add("coconstant morphisms", _names(c, [f for f in c.morphisms if analysis.is_coconstant(c, f)]))
    r.add("zero morphisms", _names(c, [f for f in c.morphisms if analysis.is_zero_morphism(c, f)]))

    r.add("initial objects", analysis.initial_objects(c))
    r.add("terminal objects", analysis.terminal_objects(c))
    r.add("strict initial objects", analysis.strict_initial_objects(c))
    r.add("strict terminal objects", analysis.strict_terminal_objects(c))
    r.add("zero objects", analysis.zero_objects(c))

    homs = analysis.non_commuting_homs(c)
    r.add("commutes", not homs, [f"hom({x}, {y}) has {len(c.hom(x, y))} classes" for x, y in homs])
    r.add("groupoid", analysis.is_groupoid(c), [c.format(f) for f in analysis.non_isomorphisms(c)])
    r.add("discrete", analysis.is_discrete(c))
    r.add("indiscrete", analysis.is_indiscrete(c))
    r.add("balanced", analysis.is_balanced(c))
    r.add("pointed", analysis.is_pointed(c))
    if forcing:
        r.forcing_sets = {t: fs.format(c) for t, fs in forcing.items()}
    return r


def functor_report(F: fn.Functor, subject: str = "functor") -> AnalysisReport:
    r = AnalysisReport(subject)
    r.add("variance", "covariant" if F.covariant else "contravariant")
    r.add("domain", F.domain.summary())
    r.add("codomain", F.codomain.summary())
    r.add("object map", [f"{x} -> {F.map_object(x)}" for x in F.domain.objects])
    r.add("functorial", fn.validate_functoriality(F))
    r.add("injective on objects", fn.injective_on_objects(F))
    r.add("surjective on objects", fn.surjective_on_objects(F))
    r.add("bijective on objects", fn.bijective_on_objects(F))
    r.add("essentially injective", fn.essentially_injective(F))
    r.add("essentially surjective", fn.essentially_surjective(F))
    r.add("essentially bijective", fn.essentially_bijective(F))
    r.add("faithful", fn.faithful(F))
    r.add("full", fn.full(F))
    r.add("fully faithful", fn.fully_faithful(F))
    classes = fn.functor_class_predicates(F)
    for name, value in vars(classes).items():
        r.add(name.replace("_", " "), value)
    r.add("discrete fibration", fn.is_discrete_fibration(F))
    r.add("groupoidal fibration", fn.is_groupoidal_fibration(F))
    try:
        d = F.domain
        r.add("cartesian morphisms", [d.format(f) for f in d.morphisms if fn.is_cartesian_morphism(F, f)])
    except ContravariantUnsupported:
        r.add("cartesian morphisms", "not checked (contravariant)")
    return r


def fibers_report(F: fn.Functor, subject: str = "functor") -> AnalysisReport:
    r = AnalysisReport(subject)
    for fb in fn.fibers(F):
        d = F.domain
        extra = [d.format(f) for f in fb.morphisms if not f.is_identity]
        kind = "discrete" if fb.is_discrete else "not discrete"
        r.add(f"fiber over {fb.base_object}", f"objects {{{', '.join(fb.objects)}}}; {kind}",
              [f"morphism {m}" for m in extra])
    r.add("discrete fibration", fn.is_discrete_fibration(F))
    return r


def transformation_report(F: fn.Functor, G: fn.Functor, components, subject: str = "transformation") -> AnalysisReport:
    r = AnalysisReport(subject)
    matching = natural.matching_codomains(F, G)
    r.add("matching codomains", matching)
    if not matching:
        r.add("natural", False)
        return r
    nt = natural.natural_transformation(F, G, components)
    c = nt.codomain
    rep = natural.naturality_conditions(F, G, components)
    r.add("components", [f"{x}: {c.format(eta)}" for x, eta in nt.components.items()])
    r.add("naturality equations", [c.format(eq) for eq in rep.required])
    r.add("missing equations", [c.format(eq) for eq in rep.missing])
    r.add("natural", rep.valid)
    r.add("iso components", [x for x in nt.components if natural.component_is_natural_iso(nt, x)])
    r.add("natural isomorphism", natural.is_natural_isomorphism(nt))
    return r


def rewrite_report(rule: Rule, rw: Rewrite, match_index: int, matches: int,
                   trial_budget: Optional[int] = 100000) -> AnalysisReport:
    r = AnalysisReport("rewrite")
    r.add("matches", matches)
    r.add("match index", match_index)
    r.add("match", [f"{k} -> {v}" for k, v in sorted(rw.m.node_map.items())]
          + [f"{k} -> {v}" for k, v in sorted(rw.m.edge_map.items())])
    for name, g in (("D", rw.D), ("H", rw.H)):
        doc = graph_to_json(g)
        r.add(f"{name} nodes", [f"{n['id']}:{n['label']}" for n in doc["nodes"]])
        r.add(f"{name} edges", [f"{e['id']}: {e['src']} -> {e['dst']} ({e['label']})" for e in doc["edges"]])
    r.add("squares commute", rw.squares_commute(rule))
    try:
        bad = pushout_counterexample(rule, rw, trial_budget)
        r.add("pushout verified", bad is None,
              [] if bad is None else [f"cocone with {len(bad[0].nodes)} nodes admits {bad[1]} mediators"])
    except BudgetExceeded:
        r.add("pushout verified", "indeterminate (trial budget exhausted)")
    return r
