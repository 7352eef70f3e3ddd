"""Minimum sets of word equations that force a property.

Candidates are equations between existing classes. Subsets are tried in
order of size and, within a size, lexicographically by candidate index,
so the first success is minimum and deterministic. With more candidates
than ``exact_limit`` the search falls back to greedy merging followed by
pruning, and the result says so via ``minimal_verified=False``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from . import analysis
from .category import Category, Equation, with_relations
from .congruence import PathWord
from .errors import NotGroupoidalizable, PossiblyInfinite

EXACT_LIMIT = 20


class Target(str, Enum):
    COMMUTATIVITY = "Commutativity"
    GROUPOID = "Groupoid"


@dataclass(frozen=True)
class ForcingSet:
    equations: tuple[Equation, ...]
    target: Target
    minimal_verified: bool = True
    # indices of equations that equate an identity with a non-identity loop
    identity_merges: tuple[int, ...] = field(default=())

    def __len__(self):
        return len(self.equations)

    def format(self, c: Category) -> list[str]:
        out = []
        for n, eq in enumerate(self.equations):
            text = c.format(eq)
            if n in self.identity_merges:
                text += "  [identity merge]"
            out.append(text)
        return out


def _impose(c: Category, eqs) -> Optional[Category]:
    try:
        return with_relations(c, eqs)
    except PossiblyInfinite:
        return None


def _search(
    c: Category,
    candidates: list[Equation],
    achieved: Callable[[Category], bool],
    exact_limit: int,
) -> tuple[tuple[Equation, ...], bool]:
    if len(candidates) <= exact_limit:
        for size in range(1, len(candidates) + 1):
            for combo in itertools.combinations(candidates, size):
                result = _impose(c, combo)
                if result is not None and achieved(result):
                    return combo, True
        raise ValueError("no subset of the candidate equations achieves the target")
    return _greedy(c, candidates, achieved), False


def _greedy(c, candidates, achieved):
    chosen: list[Equation] = []
    current = c
    for eq in candidates:
        if achieved(current):
            break
        if current.find(eq[0]) == current.find(eq[1]):
            continue
        trial = _impose(c, chosen + [eq])
        if trial is None:
            continue
        chosen.append(eq)
        current = trial
    if not achieved(current):
        raise ValueError("greedy merging did not achieve the target")
    for eq in list(chosen):
        rest = [e for e in chosen if e != eq]
        trial = _impose(c, rest)
        if trial is not None and achieved(trial):
            chosen = rest
    return tuple(chosen)


def _identity_merges(eqs) -> tuple[int, ...]:
    return tuple(n for n, (u, v) in enumerate(eqs) if u.is_identity != v.is_identity)


def commutativity_candidates(c: Category) -> list[Equation]:
    """``(larger, smaller)`` class pairs within each hom-set."""
    out = []
    for x, y in analysis.non_commuting_homs(c):
        hom = c.hom(x, y)
        for a, b in itertools.combinations(hom, 2):
            out.append((b.canonical, a.canonical))
    return out


def _commutes_finitely(c: Category) -> bool:
    return c.complete and analysis.commutes(c)


def force_commute(c: Category, *, exact_limit: int = EXACT_LIMIT) -> ForcingSet:
    if _commutes_finitely(c):
        return ForcingSet((), Target.COMMUTATIVITY)
    eqs, exact = _search(c, commutativity_candidates(c), _commutes_finitely, exact_limit)
    return ForcingSet(eqs, Target.COMMUTATIVITY, exact, _identity_merges(eqs))


def _is_simple_path(c: Category, w: PathWord) -> bool:
    visited = [w.dom] + [c.quiver.resolved_arrow(a).cod for a in reversed(w.arrows)]
    inner = visited[:-1]
    if len(set(inner)) != len(inner):
        return False
    return visited[-1] not in inner or visited[-1] == visited[0]


def groupoid_candidates(c: Category) -> list[Equation]:
    """Inverse equations ``w∘a = id`` and ``a∘w = id`` for generator arrows ``a``.

    In a truncated category ``w`` is restricted to simple paths, which is
    where candidate inverses of a generator live once the truncation is
    quotiented down to something finite.
    """
    out: list[Equation] = []
    seen = set()
    for arrow in c.quiver.arrows:
        a = c.morphism(arrow.id)
        if a.is_identity or analysis.is_isomorphism(c, a):
            continue
        for w in c.hom(a.cod, a.dom):
            if not c.complete and not _is_simple_path(c, w.canonical):
                continue
            sides = (
                (w.canonical.after(a.canonical), c.identity(a.dom)),
                (a.canonical.after(w.canonical), c.identity(a.cod)),
            )
            for lhs, ident in sides:
                if c.find(lhs) == ident:
                    continue
                key = (lhs, ident.canonical)
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    return out


def _groupoid_finitely(c: Category) -> bool:
    return c.complete and analysis.is_groupoid(c)


def force_groupoid(c: Category, *, exact_limit: int = EXACT_LIMIT) -> ForcingSet:
    for f in c.morphisms:
        if not f.is_identity and not c.hom(f.cod, f.dom):
            raise NotGroupoidalizable(
                f"{c.format(f)}: {f.dom} -> {f.cod} has no morphism back from {f.cod} to {f.dom}"
            )
    if _groupoid_finitely(c):
        return ForcingSet((), Target.GROUPOID)
    eqs, exact = _search(c, groupoid_candidates(c), _groupoid_finitely, exact_limit)
    return ForcingSet(eqs, Target.GROUPOID, exact)
