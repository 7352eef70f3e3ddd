"""Decision procedures for special morphisms, objects and categories.

Everything is decided by exhaustive search over the finite hom-sets. On a
truncated category a composite that falls outside the table is treated
as unknown and skipped, so answers describe the truncation.
"""

from __future__ import annotations

from typing import Optional

from .category import Category
from .congruence import MorphismClass


def _post_images(c: Category, f: MorphismClass, z: str):
    """``(g, f∘g)`` for every ``g`` in hom(z, dom f) with a known composite."""
    for g in c.hom(z, f.dom):
        fg = c.compose(f, g)
        if fg is not None:
            yield g, fg


def _pre_images(c: Category, f: MorphismClass, z: str):
    """``(g, g∘f)`` for every ``g`` in hom(cod f, z) with a known composite."""
    for g in c.hom(f.cod, z):
        gf = c.compose(g, f)
        if gf is not None:
            yield g, gf


def _collision(pairs):
    seen = {}
    for g, image in pairs:
        other = seen.setdefault(image, g)
        if other != g:
            return other, g
    return None


def mono_counterexample(c: Category, f) -> Optional[tuple[MorphismClass, MorphismClass]]:
    """Distinct ``g1``, ``g2`` with ``f∘g1 = f∘g2``, or ``None``."""
    f = c.morphism(f)
    for z in c.objects:
        found = _collision(_post_images(c, f, z))
        if found:
            return found
    return None


def epi_counterexample(c: Category, f) -> Optional[tuple[MorphismClass, MorphismClass]]:
    f = c.morphism(f)
    for z in c.objects:
        found = _collision(_pre_images(c, f, z))
        if found:
            return found
    return None


def is_monomorphism(c: Category, f) -> bool:
    return mono_counterexample(c, f) is None


def is_epimorphism(c: Category, f) -> bool:
    return epi_counterexample(c, f) is None


def is_bimorphism(c: Category, f) -> bool:
    return is_monomorphism(c, f) and is_epimorphism(c, f)


def left_inverses(c: Category, f) -> list[MorphismClass]:
    f = c.morphism(f)
    ident = c.identity(f.dom)
    return [g for g in c.hom(f.cod, f.dom) if c.compose(g, f) == ident]


def right_inverses(c: Category, f) -> list[MorphismClass]:
    f = c.morphism(f)
    ident = c.identity(f.cod)
    return [g for g in c.hom(f.cod, f.dom) if c.compose(f, g) == ident]


def is_section(c: Category, f) -> bool:
    return bool(left_inverses(c, f))


def is_retraction(c: Category, f) -> bool:
    return bool(right_inverses(c, f))


def inverse(c: Category, f) -> Optional[MorphismClass]:
    """The two-sided inverse of ``f`` if there is one."""
    f = c.morphism(f)
    right = set(right_inverses(c, f))
    for g in left_inverses(c, f):
        if g in right:
            return g
    return None


def is_isomorphism(c: Category, f) -> bool:
    return inverse(c, f) is not None


def non_isomorphisms(c: Category) -> list[MorphismClass]:
    return [f for f in c.morphisms if not f.is_identity and not is_isomorphism(c, f)]


def is_groupoid(c: Category) -> bool:
    return not non_isomorphisms(c)


def isomorphic_objects(c: Category, x: str, y: str) -> bool:
    return any(is_isomorphism(c, f) for f in c.hom(x, y))


def initial_objects(c: Category) -> list[str]:
    return [x for x in c.objects if all(len(c.hom(x, p)) == 1 for p in c.objects)]


def terminal_objects(c: Category) -> list[str]:
    return [x for x in c.objects if all(len(c.hom(p, x)) == 1 for p in c.objects)]


def strict_initial_objects(c: Category) -> list[str]:
    return [
        x
        for x in initial_objects(c)
        if all(is_isomorphism(c, g) for q in c.objects for g in c.hom(q, x))
    ]


def strict_terminal_objects(c: Category) -> list[str]:
    return [
        x
        for x in terminal_objects(c)
        if all(is_isomorphism(c, g) for q in c.objects for g in c.hom(x, q))
    ]


def zero_objects(c: Category) -> list[str]:
    terminal = set(terminal_objects(c))
    return [x for x in initial_objects(c) if x in terminal]


def is_pointed(c: Category) -> bool:
    return bool(zero_objects(c))


def is_constant(c: Category, f) -> bool:
    f = c.morphism(f)
    return all(len({image for _, image in _post_images(c, f, z)}) <= 1 for z in c.objects)


def is_coconstant(c: Category, f) -> bool:
    f = c.morphism(f)
    return all(len({image for _, image in _pre_images(c, f, z)}) <= 1 for z in c.objects)


def is_zero_morphism(c: Category, f) -> bool:
    return is_constant(c, f) and is_coconstant(c, f)


def endomorphisms(c: Category, x: str) -> list[MorphismClass]:
    return c.hom(x, x)


def automorphisms(c: Category, x: str) -> list[MorphismClass]:
    return [f for f in c.hom(x, x) if is_isomorphism(c, f)]


def is_discrete(c: Category) -> bool:
    return all(f.is_identity for f in c.morphisms)


def is_indiscrete(c: Category) -> bool:
    return all(len(c.hom(x, y)) == 1 for x in c.objects for y in c.objects)


def is_balanced(c: Category) -> bool:
    """Every bimorphism is an isomorphism (vacuously true without bimorphisms)."""
    return all(is_isomorphism(c, f) for f in c.morphisms if is_bimorphism(c, f))


def non_commuting_homs(c: Category) -> list[tuple[str, str]]:
    return sorted({(f.dom, f.cod) for f in c.morphisms if len(c.hom(f.dom, f.cod)) > 1})


def commutes(c: Category) -> bool:
    """Every hom-set has at most one class (identities included)."""
    return not non_commuting_homs(c)
