"""Quivers: the generating skeleton of every category."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DuplicateLabel, MismatchedArrowEquivalence, UnknownEndpoint


@dataclass(frozen=True)
class Arrow:
    id: str
    dom: str
    cod: str

    def reversed(self) -> "Arrow":
        return Arrow(self.id, self.cod, self.dom)

    def __str__(self):
        return f"{self.id}: {self.dom} -> {self.cod}"


class UnionFind:
    """Union-find over hashable labels with lexicographically least roots."""

    def __init__(self, items: Iterable[str] = ()):
        self.parent = {x: x for x in items}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return ra

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return {root: sorted(members) for root, members in out.items()}


@dataclass(frozen=True)
class Quiver:
    """Objects, labeled multi-arrows and declared equivalences.

    Build instances with :func:`build_quiver`, which validates labels and
    endpoints; the dataclass constructor itself does no checking.
    """

    objects: tuple[str, ...] = ()
    arrows: tuple[Arrow, ...] = ()
    object_eqs: tuple[tuple[str, str], ...] = ()
    arrow_eqs: tuple[tuple[str, str], ...] = ()
    _arrow_index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_arrow_index", {a.id: a for a in self.arrows})

    def arrow(self, arrow_id: str) -> Arrow:
        return self._arrow_index[arrow_id]

    def has_arrow(self, arrow_id: str) -> bool:
        return arrow_id in self._arrow_index

    @cached_property
    def _object_uf(self) -> UnionFind:
        uf = UnionFind(self.objects)
        for a, b in self.object_eqs:
            uf.union(a, b)
        return uf

    def resolve(self, obj: str) -> str:
        """Canonical representative of the object's equivalence class."""
        if obj not in self._object_uf.parent:
            raise UnknownEndpoint(f"unknown object {obj!r}")
        return self._object_uf.find(obj)

    def resolved_arrow(self, arrow_id: str) -> Arrow:
        a = self.arrow(arrow_id)
        return Arrow(a.id, self.resolve(a.dom), self.resolve(a.cod))

    @cached_property
    def object_classes(self) -> tuple[str, ...]:
        """Canonical object representatives, in first-appearance order."""
        seen = {}
        for x in self.objects:
            seen.setdefault(self.resolve(x), None)
        return tuple(seen)


def build_quiver(
    objects: Sequence[str] = (),
    arrows: Sequence = (),
    object_eqs: Sequence = (),
    arrow_eqs: Sequence = (),
) -> Quiver:
    """Validate and assemble a quiver.

    ``arrows`` holds ``Arrow`` instances or ``(id, dom, cod)`` triples.
    Object equivalences are closed transitively; arrow equivalences must
    relate arrows whose resolved endpoints agree.
    """
    objs = []
    seen = set()
    for o in objects:
        if not isinstance(o, str) or not o:
            raise DuplicateLabel(f"object labels must be non-empty strings, got {o!r}")
        if o in seen:
            raise DuplicateLabel(f"duplicate object label {o!r}")
        seen.add(o)
        objs.append(o)

    arrs = []
    arrow_ids = set()
    for a in arrows:
        if not isinstance(a, Arrow):
            a = Arrow(*a)
        if not a.id:
            raise DuplicateLabel("arrow labels must be non-empty")
        if a.id in arrow_ids:
            raise DuplicateLabel(f"duplicate arrow label {a.id!r}")
        for end in (a.dom, a.cod):
            if end not in seen:
                raise UnknownEndpoint(f"arrow {a.id!r} refers to unknown object {end!r}")
        arrow_ids.add(a.id)
        arrs.append(a)

    oeqs = []
    for x, y in object_eqs:
        for end in (x, y):
            if end not in seen:
                raise UnknownEndpoint(f"object equivalence refers to unknown object {end!r}")
        oeqs.append((x, y))

    q = Quiver(tuple(objs), tuple(arrs), tuple(oeqs), ())
    aeqs = []
    for f, g in arrow_eqs:
        for end in (f, g):
            if end not in arrow_ids:
                raise UnknownEndpoint(f"arrow equivalence refers to unknown arrow {end!r}")
        rf, rg = q.resolved_arrow(f), q.resolved_arrow(g)
        if (rf.dom, rf.cod) != (rg.dom, rg.cod):
            raise MismatchedArrowEquivalence(
                f"cannot equate {f!r} ({rf.dom} -> {rf.cod}) with {g!r} ({rg.dom} -> {rg.cod})"
            )
        aeqs.append((f, g))
    return Quiver(tuple(objs), tuple(arrs), tuple(oeqs), tuple(aeqs))


def resolved_objects(q: Quiver) -> list[list[str]]:
    """Partition of the objects induced by the declared equivalences.

    Each class is sorted, so its first element is the canonical label;
    classes are ordered by that label.
    """
    return [members for _, members in sorted(q._object_uf.classes().items())]


def reverse_quiver(q: Quiver) -> Quiver:
    return Quiver(q.objects, tuple(a.reversed() for a in q.arrows), q.object_eqs, q.arrow_eqs)


def extend_quiver(q: Quiver, objects=(), arrows=(), object_eqs=(), arrow_eqs=()) -> Quiver:
    return build_quiver(
        list(q.objects) + list(objects),
        list(q.arrows) + list(arrows),
        list(q.object_eqs) + list(object_eqs),
        list(q.arrow_eqs) + list(arrow_eqs),
    )
