"""Categories presented by a quiver and word relations."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .congruence import (
    COMPOSITION,
    IDENTITY_PREFIX,
    CongruenceTable,
    MorphismClass,
    PathWord,
    SaturationConfig,
    check_word,
    enumerate_and_saturate,
    word_from_arrows,
)
from .errors import UnknownMorphism, UnknownObject, ValidationError, WordOutOfRange
from .quiver import Quiver, extend_quiver, reverse_quiver

Equation = tuple[PathWord, PathWord]


@dataclass(frozen=True, eq=False)
class Category:
    """A quiver together with a saturated congruence on its words.

    ``truncate`` records whether the category was allowed to come back as a
    truncation (see :func:`fincat.congruence.enumerate_and_saturate`); it is
    inherited by every category derived from this one.
    """

    quiver: Quiver
    relations: tuple[Equation, ...]
    table: CongruenceTable
    config: SaturationConfig = field(default_factory=SaturationConfig)
    truncate: bool = False
    composition_symbol: str = COMPOSITION
    identity_prefix: str = IDENTITY_PREFIX

    @property
    def objects(self) -> tuple[str, ...]:
        return self.quiver.object_classes

    @property
    def morphisms(self) -> list[MorphismClass]:
        return self.table.classes

    @property
    def complete(self) -> bool:
        return self.table.complete

    def hom(self, x: str, y: str) -> list[MorphismClass]:
        return self.table.hom(x, y)

    def identity(self, x: str) -> MorphismClass:
        try:
            return self.table.identity(x)
        except ValidationError as exc:
            raise UnknownObject(str(exc)) from None

    def compose(self, g: MorphismClass, f: MorphismClass) -> Optional[MorphismClass]:
        return self.table.compose(g, f)

    def resolve(self, x: str) -> str:
        try:
            return self.quiver.resolve(x)
        except ValidationError as exc:
            raise UnknownObject(str(exc)) from None

    def word(self, ref) -> PathWord:
        """Coerce ``ref`` to a validated word.

        Accepts a :class:`PathWord`, a :class:`MorphismClass`, a single arrow
        id, a sequence of arrow ids in composition order, or ``{"id_at": X}``.
        """
        if isinstance(ref, MorphismClass):
            return ref.canonical
        if isinstance(ref, PathWord):
            return check_word(self.quiver, ref)
        if isinstance(ref, dict) and "id_at" in ref:
            return PathWord.identity(self.resolve(ref["id_at"]))
        if isinstance(ref, str):
            ref = (ref,)
        return word_from_arrows(self.quiver, tuple(ref))

    def morphism(self, ref) -> MorphismClass:
        if isinstance(ref, MorphismClass):
            found = self.table._class_of.get(ref.canonical)
            if found is None or found != ref:
                raise UnknownMorphism(f"{ref} is not a morphism class of this category")
            return found
        return self.table.class_of(self.word(ref))

    def find(self, ref) -> Optional[MorphismClass]:
        try:
            return self.morphism(ref)
        except WordOutOfRange:
            return None

    def format(self, item) -> str:
        if isinstance(item, MorphismClass):
            item = item.canonical
        if isinstance(item, PathWord):
            return item.format(self.composition_symbol, self.identity_prefix)
        lhs, rhs = item
        return f"{self.format(lhs)} = {self.format(rhs)}"

    def summary(self) -> str:
        text = f"{len(self.objects)} objects, {len(self.morphisms)} morphisms"
        if not self.complete:
            text += f" (truncated at word length {self.table.bound})"
        return text

    def __repr__(self):
        return f"<Category {self.summary()}>"


def make_category(
    q: Quiver,
    relations: Iterable = (),
    cfg: Optional[SaturationConfig] = None,
    *,
    truncate: bool = False,
    composition_symbol: str = COMPOSITION,
    identity_prefix: str = IDENTITY_PREFIX,
) -> Category:
    cfg = cfg or SaturationConfig()
    rels = tuple((check_word(q, u), check_word(q, v)) for u, v in relations)
    table = enumerate_and_saturate(q, rels, cfg, truncate=truncate)
    return Category(q, rels, table, cfg, truncate, composition_symbol, identity_prefix)


def free_category(q: Quiver, cfg: Optional[SaturationConfig] = None, *, truncate: bool = False) -> Category:
    return make_category(q, (), cfg, truncate=truncate)


def with_relations(
    c: Category,
    morphism_eqs: Iterable = (),
    object_eqs: Sequence = (),
    *,
    cfg: Optional[SaturationConfig] = None,
) -> Category:
    """Impose extra word equations and object equations, then re-saturate.

    Equation sides may be anything :meth:`Category.word` accepts; they are
    interpreted in the quiver after the new object equations are applied.
    """
    q = extend_quiver(c.quiver, object_eqs=object_eqs) if object_eqs else c.quiver
    probe = replace(c, quiver=q)
    eqs = [(probe.word(u), probe.word(v)) for u, v in morphism_eqs]
    return make_category(
        q,
        list(c.relations) + eqs,
        cfg or c.config,
        truncate=c.truncate,
        composition_symbol=c.composition_symbol,
        identity_prefix=c.identity_prefix,
    )


def dual(c: Category) -> Category:
    """Reverse every arrow and every relation word."""
    return make_category(
        reverse_quiver(c.quiver),
        [(u.reversed(), v.reversed()) for u, v in c.relations],
        c.config,
        truncate=c.truncate,
        composition_symbol=c.composition_symbol,
        identity_prefix=c.identity_prefix,
    )


def opposite(c_dual: Category, f: MorphismClass) -> Optional[MorphismClass]:
    """The class in ``c_dual`` of the reversed canonical word of ``f``."""
    return c_dual.find(f.canonical.reversed())
