"""Command-line front end.

Exit codes: 0 on success, 2 on validation errors (including malformed
input and usage errors), 3 when a category could not be shown finite.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import analysis, dot, report, serialize
from .category import dual
from .congruence import SaturationConfig
from .dpo import apply, find_matches
from .errors import FincatError, PossiblyInfinite, ValidationError
from .forcing import force_commute, force_groupoid
from .natural import natural_transformation

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFINITE = 3


def _config(args) -> SaturationConfig:
    if args.max_word_length:
        return SaturationConfig.from_env(max_word_length=args.max_word_length)
    return SaturationConfig.from_env()


def _truncate(args) -> Optional[bool]:
    return True if args.truncate else None


def _category(args):
    path = args.category or args.quiver
    if path is None:
        raise ValidationError("give --category or --quiver")
    path = Path(path)
    return serialize.category_from_json(serialize.load_json(path), _config(args),
                                        truncate=_truncate(args), base_dir=path.parent)


def _functor(args):
    path = Path(args.functor)
    return serialize.functor_from_json(serialize.load_json(path), _config(args),
                                       truncate=_truncate(args), base_dir=path.parent)


def _transformation_parts(args):
    path = Path(args.transformation)
    return serialize.transformation_parts(serialize.load_json(path), _config(args),
                                          truncate=_truncate(args), base_dir=path.parent)


def _emit(args, text: str, doc) -> None:
    if args.json:
        print(serialize.dumps(doc))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_quiver_show(args):
    path = Path(args.quiver)
    q = serialize.quiver_from_json(serialize.load_json(path))
    lines = [f"objects: {', '.join(q.object_classes)}"]
    for a in q.arrows:
        r = q.resolved_arrow(a.id)
        lines.append(f"{a.id}: {r.dom} -> {r.cod}")
    _emit(args, "\n".join(lines), serialize.quiver_to_json(q))


def _category_doc(c):
    return {
        "objects": list(c.objects),
        "morphisms": [
            {"canonical": serialize.word_to_json(f.canonical), "dom": f.dom, "cod": f.cod,
             "members": [serialize.word_to_json(w) for w in f.members]}
            for f in c.morphisms
        ],
        "complete": c.complete,
        "summary": c.summary(),
    }


def cmd_cat_build(args):
    c = _category(args)
    text = c.summary()
    if args.dump:
        text += "\n" + c.table.dump()
    _emit(args, text, _category_doc(c))


def cmd_cat_report(args):
    c = _category(args)
    forcing = {}
    if args.forcing:
        forcing["commutativity"] = force_commute(c)
    r = report.category_report(c, Path(args.category or args.quiver).stem, forcing or None)
    _emit(args, r.text(), r.to_json())


def _forcing_doc(c, fs):
    return {
        "target": fs.target.value,
        "equations": [[serialize.word_to_json(u), serialize.word_to_json(v)] for u, v in fs.equations],
        "formatted": fs.format(c),
        "minimal_verified": fs.minimal_verified,
    }


def cmd_cat_commutes(args):
    c = _category(args)
    if analysis.commutes(c) and c.complete:
        _emit(args, "true", {"commutes": True})
        return
    fs = force_commute(c)
    text = f"false; forcing set: {'; '.join(fs.format(c))}"
    if not fs.minimal_verified:
        text += " (greedy; minimality not verified)"
    _emit(args, text, {"commutes": False, "forcing_set": _forcing_doc(c, fs)})


def _cmd_force(fn):
    def run(args):
        c = _category(args)
        fs = fn(c)
        lines = fs.format(c) or ["(already holds)"]
        if not fs.minimal_verified:
            lines.append("(greedy; minimality not verified)")
        _emit(args, "\n".join(lines), _forcing_doc(c, fs))
    return run


def cmd_cat_dual(args):
    d = dual(_category(args))
    _emit(args, d.summary(), serialize.category_to_json(d))


def cmd_functor_report(args):
    F = _functor(args)
    r = report.functor_report(F, Path(args.functor).stem)
    _emit(args, r.text(), r.to_json())


def cmd_functor_fibers(args):
    F = _functor(args)
    r = report.fibers_report(F, Path(args.functor).stem)
    _emit(args, r.text(), r.to_json())


def cmd_nat_report(args):
    F, G, comps = _transformation_parts(args)
    r = report.transformation_report(F, G, comps, Path(args.transformation).stem)
    _emit(args, r.text(), r.to_json())


def _rewrite(args):
    rule_path, graph_path = Path(args.rule), Path(args.graph)
    rule = serialize.rule_from_json(serialize.load_json(rule_path), rule_path.parent)
    G = serialize.graph_from_json(serialize.load_json(graph_path), graph_path.parent)
    matches = find_matches(rule, G)
    if not 0 <= args.match_index < len(matches):
        raise ValidationError(f"match index {args.match_index} out of range ({len(matches)} matches)")
    return rule, apply(rule, G, matches[args.match_index], args.match_index), len(matches)


def cmd_dpo_apply(args):
    rule, rw, count = _rewrite(args)
    r = report.rewrite_report(rule, rw, args.match_index, count, args.budget)
    doc = r.to_json()
    doc["D"] = serialize.graph_to_json(rw.D)
    doc["H"] = serialize.graph_to_json(rw.H)
    _emit(args, r.text(), doc)


def cmd_export_dot(args):
    if args.functor:
        text = dot.functor_dot(_functor(args))
    elif args.transformation:
        text = dot.naturality_dot(natural_transformation(*_transformation_parts(args)))
    elif args.rule:
        if not args.graph:
            raise ValidationError("--rule needs --graph")
        text = dot.rewrite_dot(_rewrite(args)[1])
    elif args.quiver and not args.category and args.mode is None:
        text = dot.quiver_dot(serialize.quiver_from_json(serialize.load_json(args.quiver)))
    else:
        text = dot.category_dot(_category(args), dot.Mode(args.mode or "Reduced"))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--truncate", action="store_true",
                        help="return a truncated table instead of failing on possibly infinite categories")
    common.add_argument("--max-word-length", type=int, default=None,
                        help="saturation bound (default 12, or FINCAT_MAX_WORD_LENGTH)")

    parser = argparse.ArgumentParser(prog="fincat", description="Finite categories, functors and graph rewriting.")
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(group, name, func, help_text, inputs=()):
        p = group.add_parser(name, parents=[common], help=help_text)
        for flag in inputs:
            p.add_argument(f"--{flag}")
        p.set_defaults(func=func)
        return p

    quiver = groups.add_parser("quiver").add_subparsers(dest="command", required=True)
    p = leaf(quiver, "show", cmd_quiver_show, "list objects and arrows")
    p.add_argument("--quiver", required=True)

    cat = groups.add_parser("cat").add_subparsers(dest="command", required=True)
    p = leaf(cat, "build", cmd_cat_build, "saturate and count morphism classes", ("quiver", "category"))
    p.add_argument("--dump", action="store_true", help="print the class table")
    p = leaf(cat, "report", cmd_cat_report, "evaluate every predicate", ("quiver", "category"))
    p.add_argument("--forcing", action="store_true", help="also compute a commutativity forcing set")
    leaf(cat, "commutes", cmd_cat_commutes, "commutativity with a forcing set", ("quiver", "category"))
    leaf(cat, "force-commute", _cmd_force(force_commute), "minimum equations forcing commutativity",
         ("quiver", "category"))
    leaf(cat, "force-groupoid", _cmd_force(force_groupoid), "minimum inverse equations forcing a groupoid",
         ("quiver", "category"))
    leaf(cat, "dual", cmd_cat_dual, "the opposite category", ("quiver", "category"))

    functor = groups.add_parser("functor").add_subparsers(dest="command", required=True)
    p = leaf(functor, "report", cmd_functor_report, "functor predicates")
    p.add_argument("--functor", required=True)
    p = leaf(functor, "fibers", cmd_functor_fibers, "fiber categories over each codomain object")
    p.add_argument("--functor", required=True)

    nat = groups.add_parser("nat").add_subparsers(dest="command", required=True)
    p = leaf(nat, "report", cmd_nat_report, "naturality conditions")
    p.add_argument("--transformation", required=True)

    dpo = groups.add_parser("dpo").add_subparsers(dest="command", required=True)
    p = leaf(dpo, "apply", cmd_dpo_apply, "rewrite a graph at one match")
    p.add_argument("--rule", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--match-index", type=int, default=0)
    p.add_argument("--budget", type=int, default=100000, help="trial budget for the pushout check")

    export = groups.add_parser("export").add_subparsers(dest="command", required=True)
    p = leaf(export, "dot", cmd_export_dot, "Graphviz DOT text",
             ("quiver", "category", "functor", "transformation", "rule", "graph", "output"))
    p.add_argument("--mode", choices=[m.value for m in dot.Mode], default=None)
    p.add_argument("--match-index", type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except PossiblyInfinite as exc:
        print(f"PossiblyInfinite: {exc}", file=sys.stderr)
        return EXIT_INFINITE
    except (FincatError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
