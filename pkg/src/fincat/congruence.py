"""Bounded word enumeration and congruence closure.

Morphisms are composable arrow words. A word is stored in composition
order, so ``("g", "f")`` is ``g∘f``: ``f`` is applied first and
``arrows[i]`` is applied after ``arrows[i + 1]``. Identities are empty
words carrying their object. Because composition is concatenation,
associativity and identity absorption hold by construction; only the
user relations need saturating.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    MismatchedRelation,
    NotComposable,
    PossiblyInfinite,
    UnknownMorphism,
    UnknownObject,
    ValidationError,
    WordOutOfRange,
)
from .quiver import Quiver

COMPOSITION = "∘"
IDENTITY_PREFIX = "id_"


@dataclass(frozen=True)
class PathWord:
    dom: str
    cod: str
    arrows: tuple[str, ...] = ()

    @classmethod
    def identity(cls, obj: str) -> "PathWord":
        return cls(obj, obj, ())

    @property
    def is_identity(self) -> bool:
        return not self.arrows

    def __len__(self):
        return len(self.arrows)

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.dom, self.cod)

    def after(self, other: "PathWord") -> "PathWord":
        """``self ∘ other``."""
        if other.cod != self.dom:
            raise NotComposable(f"cannot compose {self} after {other}: {other.cod} != {self.dom}")
        return PathWord(other.dom, self.cod, self.arrows + other.arrows)

    def reversed(self) -> "PathWord":
        return PathWord(self.cod, self.dom, self.arrows[::-1])

    def format(self, composition=COMPOSITION, identity_prefix=IDENTITY_PREFIX) -> str:
        if not self.arrows:
            return f"{identity_prefix}{self.dom}"
        return composition.join(self.arrows)

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class MorphismClass:
    """An equivalence class of words; compares by canonical word only."""

    canonical: PathWord
    members: tuple[PathWord, ...] = field(default=(), compare=False, repr=False)

    @property
    def dom(self):
        return self.canonical.dom

    @property
    def cod(self):
        return self.canonical.cod

    @property
    def is_identity(self):
        return self.canonical.is_identity

    def sort_key(self):
        return self.canonical.sort_key()

    def __str__(self):
        return str(self.canonical)


@dataclass(frozen=True)
class SaturationConfig:
    max_word_length: int = 12
    max_classes: int = 10000
    # enumeration cap; exceeding it is reported like any other runaway growth
    max_words: int = 100000
    # bound used for the table returned in truncated mode
    truncate_at: int = 6

    def __post_init__(self):
        for name in ("max_word_length", "max_classes", "max_words", "truncate_at"):
            if getattr(self, name) <= 0:
                raise ValidationError(f"{name} must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "SaturationConfig":
        env = os.environ.get("FINCAT_MAX_WORD_LENGTH")
        if env and "max_word_length" not in overrides:
            overrides["max_word_length"] = int(env)
        return cls(**overrides)


def check_word(q: Quiver, word: PathWord) -> PathWord:
    """Validate ``word`` against ``q`` and return it with resolved endpoints."""
    try:
        dom, cod = q.resolve(word.dom), q.resolve(word.cod)
    except ValidationError as exc:
        raise UnknownObject(str(exc)) from None
    if not word.arrows:
        if dom != cod:
            raise MismatchedRelation(f"identity word with distinct endpoints {word.dom}, {word.cod}")
        return PathWord(dom, dom, ())
    for a in word.arrows:
        if not q.has_arrow(a):
            raise UnknownMorphism(f"unknown arrow {a!r}")
    resolved = [q.resolved_arrow(a) for a in word.arrows]
    for outer, inner in zip(resolved, resolved[1:]):
        if inner.cod != outer.dom:
            raise NotComposable(f"{outer.id} cannot follow {inner.id}: {inner.cod} != {outer.dom}")
    if resolved[-1].dom != dom or resolved[0].cod != cod:
        raise NotComposable(
            f"word {word} runs {resolved[-1].dom} -> {resolved[0].cod}, declared {word.dom} -> {word.cod}"
        )
    return PathWord(dom, cod, word.arrows)


def word_from_arrows(q: Quiver, arrows: Sequence[str]) -> PathWord:
    """Build a non-identity word from arrow ids given in composition order."""
    if not arrows:
        raise ValidationError("empty arrow list; identities need an explicit object")
    for a in arrows:
        if not q.has_arrow(a):
            raise UnknownMorphism(f"unknown arrow {a!r}")
    dom = q.resolved_arrow(arrows[-1]).dom
    cod = q.resolved_arrow(arrows[0]).cod
    return check_word(q, PathWord(dom, cod, tuple(arrows)))


class CongruenceTable:
    """Words up to ``bound`` partitioned by the saturated congruence.

    ``complete`` means every morphism of the presented category has a
    representative shorter than ``bound``, so the classes are exactly its
    hom-sets. A table with ``complete=False`` is a truncation: composites
    whose representatives would exceed the bound are simply unknown.
    """

    def __init__(self, quiver: Quiver, relations, bound: int):
        self.quiver = quiver
        self.relations = list(relations)
        self.bound = bound
        self.complete = False
        self.words: list[PathWord] = []
        self.index: dict[PathWord, int] = {}
        self.classes: list[MorphismClass] = []
        self.hom_index: dict[tuple[str, str], list[MorphismClass]] = {}
        self._class_of: dict[PathWord, MorphismClass] = {}
        self._left: dict[tuple[PathWord, str], MorphismClass] = {}
        self._products: dict[tuple[PathWord, PathWord], Optional[MorphismClass]] = {}
        self.unions = 0

    # --- lookups -------------------------------------------------------

    @property
    def objects(self) -> tuple[str, ...]:
        return self.quiver.object_classes

    def class_of(self, word: PathWord) -> MorphismClass:
        word = check_word(self.quiver, word)
        found = self._class_of.get(word)
        if found is not None:
            return found
        if not self.complete:
            raise WordOutOfRange(f"{word} is beyond the truncation bound {self.bound}")
        return self._fold(word)

    def find_class(self, word: PathWord) -> Optional[MorphismClass]:
        """Like :meth:`class_of` but ``None`` when a truncated table cannot tell."""
        try:
            return self.class_of(word)
        except WordOutOfRange:
            return None

    def _fold(self, word: PathWord) -> Optional[MorphismClass]:
        cls = self._class_of[PathWord.identity(word.dom)]
        for a in reversed(word.arrows):
            cls = self.left_action(cls, a)
            if cls is None:
                return None
        return cls

    def left_action(self, cls: MorphismClass, arrow_id: str) -> Optional[MorphismClass]:
        """Class of ``arrow ∘ cls``; ``None`` if the truncation does not reach it."""
        key = (cls.canonical, arrow_id)
        if key in self._left:
            return self._left[key]
        a = self.quiver.resolved_arrow(arrow_id)
        if a.dom != cls.cod:
            raise NotComposable(f"{arrow_id} cannot follow {cls}")
        out = self._class_of.get(PathWord(cls.dom, a.cod, (arrow_id,) + cls.canonical.arrows))
        if out is None:
            for m in cls.members:
                out = self._class_of.get(PathWord(m.dom, a.cod, (arrow_id,) + m.arrows))
                if out is not None:
                    break
        self._left[key] = out
        return out

    def compose(self, g: MorphismClass, f: MorphismClass) -> Optional[MorphismClass]:
        """Class of ``g ∘ f``; ``None`` only in truncated tables.

        A truncated table only knows a composite when some pair of
        representatives concatenates within the bound and all such
        concatenations agree. That rule reads the same in the opposite
        category, so truncated answers stay symmetric under duality.
        """
        if f.cod != g.dom:
            raise NotComposable(f"cannot compose {g} after {f}: {f.cod} != {g.dom}")
        if not self.complete:
            return self._truncated_compose(g, f)
        direct = self._class_of.get(g.canonical.after(f.canonical))
        if direct is not None:
            return direct
        cls = f
        for a in reversed(g.canonical.arrows):
            cls = self.left_action(cls, a)
            if cls is None:
                return None
        return cls

    def _truncated_compose(self, g: MorphismClass, f: MorphismClass) -> Optional[MorphismClass]:
        key = (g.canonical, f.canonical)
        if key in self._products:
            return self._products[key]
        seen = set()
        room = self.bound - len(f.canonical)
        for m in g.members:
            if len(m) > room:
                break
            for n in f.members:
                if len(m) + len(n) > self.bound:
                    break
                found = self._class_of.get(m.after(n))
                if found is not None:
                    seen.add(found)
        out = seen.pop() if len(seen) == 1 else None
        self._products[key] = out
        return out

    def identity(self, obj: str) -> MorphismClass:
        return self._class_of[PathWord.identity(self.quiver.resolve(obj))]

    def hom(self, x: str, y: str) -> list[MorphismClass]:
        try:
            x, y = self.quiver.resolve(x), self.quiver.resolve(y)
        except ValidationError as exc:
            raise UnknownObject(str(exc)) from None
        return list(self.hom_index.get((x, y), ()))

    def word_equal(self, u: PathWord, v: PathWord) -> bool:
        return self.class_of(u) == self.class_of(v)

    def partition(self) -> set[frozenset[PathWord]]:
        return {frozenset(c.members) for c in self.classes}

    def dump(self, composition=COMPOSITION, identity_prefix=IDENTITY_PREFIX) -> str:
        lines = []
        for c in self.classes:
            members = ", ".join(m.format(composition, identity_prefix) for m in c.members)
            lines.append(f"{c.dom} -> {c.cod} : {c.canonical.format(composition, identity_prefix)} = {{{members}}}")
        return "\n".join(lines)


class _Saturation:
    """Mutable working state of one bounded closure run."""

    def __init__(self, q: Quiver, bound: int, max_words: int):
        self.q = q
        self.bound = bound
        ends = self.ends = {a.id: q.resolved_arrow(a.id) for a in q.arrows}
        arrow_ids = [a.id for a in q.arrows]
        code = {a: n for n, a in enumerate(arrow_ids)}
        shift = len(arrow_ids)
        out = {x: [] for x in q.object_classes}
        for a in arrow_ids:
            out[ends[a].dom].append(a)
        words = [PathWord.identity(x) for x in q.object_classes]
        obj_index = {w.dom: i for i, w in enumerate(words)}
        # sig[i]: extension key -> index of one word reached by it; left
        # extensions by arrow n use key n, right extensions use n + shift
        sig: list = [dict() for _ in words]
        rest = [None] * len(words)  # word minus its innermost arrow
        level = list(range(len(words)))
        for _ in range(bound):
            nxt = []
            for i in level:
                w = words[i]
                for a in out[w.cod]:
                    k = len(words)
                    words.append(PathWord(w.dom, ends[a].cod, (a,) + w.arrows))
                    sig.append({})
                    sig[i][code[a]] = k
                    if w.arrows:
                        r = sig[rest[i]][code[a]]
                        inner = w.arrows[-1]
                    else:
                        r = obj_index[ends[a].cod]
                        inner = a
                    rest.append(r)
                    sig[r][code[inner] + shift] = k
                    nxt.append(k)
            if len(words) > max_words:
                raise PossiblyInfinite(
                    f"more than {max_words} words of length <= {bound}", max_word_length=bound
                )
            if not nxt:
                break
            level = nxt
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}
        self.sig = sig
        self.parent = list(range(len(words)))
        self.size = [1] * len(words)
        self.pending = deque()
        self.unions = 0

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def close(self):
        find, parent, size, sig, pending = self.find, self.parent, self.size, self.sig, self.pending
        while pending:
            a, b = pending.popleft()
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            if size[ra] < size[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            size[ra] += size[rb]
            self.unions += 1
            big = sig[ra]
            for key, j in sig[rb].items():
                other = big.get(key)
                if other is None:
                    big[key] = j
                else:
                    pending.append((other, j))
            sig[rb] = None

    def run(self, relations):
        index = self.index
        for u, v in relations:
            self.pending.append((index[u], index[v]))
        for f, g in self.q.arrow_eqs:
            ef, eg = self.ends[f], self.ends[g]
            self.pending.append((index[PathWord(ef.dom, ef.cod, (f,))], index[PathWord(eg.dom, eg.cod, (g,))]))
        words = self.words
        while True:
            self.close()
            # words are enumerated by length, so the first member seen of a
            # class is among its shortest; ties go to the least arrow tuple
            canon: dict[int, int] = {}
            for i, w in enumerate(words):
                root = self.find(i)
                c = canon.get(root)
                if c is None or (len(w) == len(words[c]) and w.arrows < words[c].arrows):
                    canon[root] = i
            self.canon = canon
            self.complete = all(len(words[c]) < self.bound for c in canon.values())
            if not self.complete:
                return self
            extra = _coherence_pairs(self)
            if not extra:
                return self
            self.pending.extend(extra)

    def table(self, relations) -> CongruenceTable:
        t = CongruenceTable(self.q, relations, self.bound)
        t.complete = self.complete
        t.words = self.words
        t.index = self.index
        t.unions = self.unions
        groups: dict[int, list[PathWord]] = {}
        for i, w in enumerate(self.words):
            groups.setdefault(self.find(i), []).append(w)
        classes = []
        class_of = {}
        for members in groups.values():
            ms = tuple(sorted(members, key=PathWord.sort_key))
            c = MorphismClass(ms[0], ms)
            classes.append(c)
            for m in ms:
                class_of[m] = c
        classes.sort(key=MorphismClass.sort_key)
        t.classes = classes
        t._class_of = class_of
        for c in classes:
            t.hom_index.setdefault((c.dom, c.cod), []).append(c)
        return t


def _build(q: Quiver, relations, bound: int, cfg: SaturationConfig) -> CongruenceTable:
    return _Saturation(q, bound, cfg.max_words).run(relations).table(relations)


def _coherence_pairs(st: _Saturation):
    """Unions forced by associativity across the bound.

    For a canonical word ``w`` and arrows ``a``, ``b`` with ``a∘w∘b``
    outside the table, ``a∘red(w∘b)`` and ``red(a∘w)∘b`` must agree.
    Both sides lie inside the table when it is complete.
    """
    words, index, find, canon = st.words, st.index, st.find, st.canon
    out_arrows: dict[str, list] = {}
    in_arrows: dict[str, list] = {}
    for a in st.ends.values():
        out_arrows.setdefault(a.dom, []).append(a)
        in_arrows.setdefault(a.cod, []).append(a)
    pairs = []
    for ci in canon.values():
        w = words[ci]
        if len(w) + 2 <= st.bound:
            continue
        for a in out_arrows.get(w.cod, ()):
            left = index.get(PathWord(w.dom, a.cod, (a.id,) + w.arrows))
            if left is None:
                continue
            red_left = words[canon[find(left)]]
            for b in in_arrows.get(w.dom, ()):
                right = index.get(PathWord(b.dom, w.cod, w.arrows + (b.id,)))
                if right is None:
                    continue
                red_right = words[canon[find(right)]]
                x = index.get(PathWord(b.dom, a.cod, (a.id,) + red_right.arrows))
                y = index.get(PathWord(b.dom, a.cod, red_left.arrows + (b.id,)))
                if x is not None and y is not None and find(x) != find(y):
                    pairs.append((x, y))
    return pairs


def enumerate_and_saturate(
    q: Quiver,
    relations: Iterable = (),
    cfg: Optional[SaturationConfig] = None,
    *,
    truncate: bool = False,
) -> CongruenceTable:
    """Saturate the congruence generated by ``relations`` and ``q.arrow_eqs``.

    Bounds are tried in increasing order until one is complete. If none up
    to ``cfg.max_word_length`` is, :class:`PossiblyInfinite` is raised, or
    with ``truncate=True`` a truncated table at ``cfg.truncate_at`` is
    returned instead.
    """
    cfg = cfg or SaturationConfig()
    rels = []
    for pair in relations:
        u, v = pair
        u, v = check_word(q, u), check_word(q, v)
        if (u.dom, u.cod) != (v.dom, v.cod):
            raise MismatchedRelation(f"relation {u} = {v} has mismatched endpoints")
        rels.append((u, v))
    longest = max((max(len(u), len(v)) for u, v in rels), default=0)
    start = max(1, longest)
    classes = None
    for bound in range(start, max(start, cfg.max_word_length) + 1):
        try:
            st = _Saturation(q, bound, cfg.max_words).run(rels)
        except PossiblyInfinite:
            if truncate:
                break
            raise
        classes = len(st.canon)
        if classes > cfg.max_classes and not truncate:
            raise PossiblyInfinite(
                f"{classes} classes exceed max_classes={cfg.max_classes} at length {bound}",
                max_word_length=bound,
                classes=classes,
            )
        if st.complete:
            return st.table(rels)
    if not truncate:
        raise PossiblyInfinite(
            f"new morphism classes still appear at length {cfg.max_word_length}",
            max_word_length=cfg.max_word_length,
            classes=classes,
        )
    return _build(q, rels, max(start, min(cfg.truncate_at, cfg.max_word_length)), cfg)


def word_equal(t: CongruenceTable, u: PathWord, v: PathWord) -> bool:
    return t.word_equal(u, v)


def compose(t: CongruenceTable, g: MorphismClass, f: MorphismClass) -> Optional[MorphismClass]:
    return t.compose(g, f)


def hom_set(t: CongruenceTable, x: str, y: str) -> list[MorphismClass]:
    return t.hom(x, y)
