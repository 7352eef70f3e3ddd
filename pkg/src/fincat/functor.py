"""Functors between presented categories.

A functor is given by object and arrow maps on the domain quiver. Its
codomain is always derived: the image objects and arrows, any extra
objects, arrows and equations, and every domain relation pushed through
the word map. Functoriality therefore holds by construction;
:func:`validate_functoriality` re-checks it independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from . import analysis
from .category import Category, Equation, make_category
from .congruence import MorphismClass, PathWord, SaturationConfig
from .errors import (
    ContravariantUnsupported,
    EndpointIncoherent,
    PartialMap,
    UnknownObject,
    ValidationError,
)
from .quiver import Arrow, Quiver, build_quiver


@dataclass(frozen=True, eq=False)
class Functor:
    domain: Category
    covariant: bool
    object_map: Mapping[str, str]
    arrow_map: Mapping[str, str]
    extra_objects: tuple[str, ...]
    extra_arrows: tuple[Arrow, ...]
    extra_object_eqs: tuple[tuple[str, str], ...]
    extra_morphism_eqs: tuple[Equation, ...]
    codomain: Category

    def map_word(self, w: PathWord) -> PathWord:
        """Image word in the codomain quiver (not yet reduced)."""
        fdom, fcod = self.object_map[w.dom], self.object_map[w.cod]
        if self.codomain is not None:
            fdom, fcod = self.codomain.resolve(fdom), self.codomain.resolve(fcod)
        arrows = tuple(self.arrow_map[a] for a in w.arrows)
        if self.covariant:
            return PathWord(fdom, fcod, arrows)
        return PathWord(fcod, fdom, arrows[::-1])

    def map_object(self, x: str) -> str:
        """Resolved codomain object of the domain object ``x``."""
        try:
            return self.codomain.resolve(self.object_map[self.domain.resolve(x)])
        except KeyError:
            raise UnknownObject(f"unknown domain object {x!r}") from None

    def __call__(self, ref) -> Optional[MorphismClass]:
        return apply_to_morphism(self, ref)


def _image_quiver(domain_q: Quiver, covariant, object_map, arrow_map, extra_objects, extra_arrows, extra_object_eqs):
    objects: dict[str, None] = {}
    for x in domain_q.objects:
        objects.setdefault(object_map[x], None)
    for x in extra_objects:
        objects.setdefault(x, None)

    arrows: dict[str, Arrow] = {}

    def add(a: Arrow, what: str):
        prev = arrows.get(a.id)
        if prev is None:
            arrows[a.id] = a
        elif (prev.dom, prev.cod) != (a.dom, a.cod):
            raise EndpointIncoherent(
                f"codomain arrow {a.id!r} is required both as {prev.dom} -> {prev.cod} and {a.dom} -> {a.cod} ({what})"
            )

    for a in domain_q.arrows:
        fd, fc = object_map[a.dom], object_map[a.cod]
        if not covariant:
            fd, fc = fc, fd
        add(Arrow(arrow_map[a.id], fd, fc), f"image of {a.id}")
    for a in extra_arrows:
        a = a if isinstance(a, Arrow) else Arrow(*a)
        add(a, "extra arrow")

    object_eqs = [(object_map[x], object_map[y]) for x, y in domain_q.object_eqs]
    object_eqs += list(extra_object_eqs)
    arrow_eqs = [(arrow_map[f], arrow_map[g]) for f, g in domain_q.arrow_eqs]
    try:
        q = build_quiver(list(objects), list(arrows.values()), object_eqs, [])
    except ValidationError as exc:
        raise EndpointIncoherent(str(exc)) from None
    # image arrows of parallel domain arrows might only become parallel
    # after the codomain object equations are applied, so check here
    for f, g in arrow_eqs:
        rf, rg = q.resolved_arrow(f), q.resolved_arrow(g)
        if (rf.dom, rf.cod) != (rg.dom, rg.cod):
            raise EndpointIncoherent(f"images {f!r} and {g!r} of equated arrows are not parallel")
    return build_quiver(q.objects, q.arrows, q.object_eqs, arrow_eqs)


def build_functor(
    domain: Category,
    object_map: Mapping[str, str],
    arrow_map: Mapping[str, str],
    *,
    covariant: bool = True,
    extra_objects: Iterable[str] = (),
    extra_arrows: Iterable = (),
    extra_object_eqs: Iterable = (),
    extra_morphism_eqs: Iterable = (),
    cfg: Optional[SaturationConfig] = None,
    truncate: Optional[bool] = None,
) -> Functor:
    """Build a functor and derive its codomain category.

    ``extra_morphism_eqs`` sides are read in the codomain quiver and may be
    anything :meth:`Category.word` accepts, e.g. ``["F(g)", "F(f)"]`` or
    ``{"id_at": "F(X)"}``.
    """
    dq = domain.quiver
    missing = [x for x in dq.objects if x not in object_map]
    if missing:
        raise PartialMap(f"object map is missing {', '.join(missing)}")
    missing = [a.id for a in dq.arrows if a.id not in arrow_map]
    if missing:
        raise PartialMap(f"arrow map is missing {', '.join(missing)}")
    object_map = {x: object_map[x] for x in dq.objects}
    arrow_map = {a.id: arrow_map[a.id] for a in dq.arrows}
    extra_objects = tuple(extra_objects)
    extra_arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in extra_arrows)
    extra_object_eqs = tuple(tuple(p) for p in extra_object_eqs)

    cq = _image_quiver(dq, covariant, object_map, arrow_map, extra_objects, extra_arrows, extra_object_eqs)
    stub = Category(cq, (), None)
    extra_eqs = tuple((stub.word(u), stub.word(v)) for u, v in extra_morphism_eqs)

    partial = Functor(domain, covariant, object_map, arrow_map, extra_objects, extra_arrows,
                      extra_object_eqs, extra_eqs, None)
    relations = [(partial.map_word(u), partial.map_word(v)) for u, v in domain.relations]
    codomain = make_category(
        cq,
        relations + list(extra_eqs),
        cfg or domain.config,
        truncate=domain.truncate if truncate is None else truncate,
        composition_symbol=domain.composition_symbol,
        identity_prefix=domain.identity_prefix,
    )
    return Functor(domain, covariant, object_map, arrow_map, extra_objects, extra_arrows,
                   extra_object_eqs, extra_eqs, codomain)


def apply_to_morphism(F: Functor, ref) -> MorphismClass:
    """Codomain class of the image of a domain word or class.

    Raises :class:`~fincat.errors.WordOutOfRange` when a truncated codomain
    cannot place the image.
    """
    w = F.domain.word(ref)
    return F.codomain.morphism(F.map_word(w))


def _find_image(F: Functor, f: MorphismClass) -> Optional[MorphismClass]:
    return F.codomain.find(F.map_word(f.canonical))


def swap_variance(F: Functor) -> Functor:
    """Flip the variance; the codomain is rebuilt over the reversed quiver."""
    return build_functor(
        F.domain,
        F.object_map,
        F.arrow_map,
        covariant=not F.covariant,
        extra_objects=F.extra_objects,
        extra_arrows=[a.reversed() for a in F.extra_arrows],
        extra_object_eqs=F.extra_object_eqs,
        extra_morphism_eqs=[(u.reversed(), v.reversed()) for u, v in F.extra_morphism_eqs],
        cfg=F.codomain.config,
        truncate=F.codomain.truncate,
    )


def functoriality_violations(F: Functor) -> list[tuple[PathWord, PathWord]]:
    """Pairs of congruent domain words whose images are not congruent."""
    out = []
    for cls in F.domain.morphisms:
        first = None
        for w in cls.members:
            image = F.codomain.find(F.map_word(w))
            if image is None:
                continue
            if first is None:
                first = (w, image)
            elif image != first[1]:
                out.append((first[0], w))
    return out


def validate_functoriality(F: Functor) -> bool:
    return not functoriality_violations(F)


def _object_classes(F: Functor):
    return {x: F.map_object(x) for x in F.domain.objects}


def injective_on_objects(F: Functor) -> bool:
    images = list(_object_classes(F).values())
    return len(set(images)) == len(images)


def surjective_on_objects(F: Functor) -> bool:
    return set(F.codomain.objects) <= set(_object_classes(F).values())


def bijective_on_objects(F: Functor) -> bool:
    return injective_on_objects(F) and surjective_on_objects(F)


def essentially_injective(F: Functor) -> bool:
    """Domain objects with equal images must be isomorphic in the domain."""
    images = _object_classes(F)
    for x, y in itertools.combinations(F.domain.objects, 2):
        if images[x] == images[y] and not analysis.isomorphic_objects(F.domain, x, y):
            return False
    return True


def essentially_surjective(F: Functor) -> bool:
    """Every codomain object is isomorphic to some image object."""
    images = set(_object_classes(F).values())
    c = F.codomain
    return all(
        p in images or any(analysis.isomorphic_objects(c, p, img) for img in images)
        for p in c.objects
    )


def essentially_bijective(F: Functor) -> bool:
    return essentially_injective(F) and essentially_surjective(F)


def _hom_maps(F: Functor):
    """For each ordered domain object pair: (domain hom, images, target hom)."""
    d, c = F.domain, F.codomain
    for x in d.objects:
        for y in d.objects:
            fx, fy = F.map_object(x), F.map_object(y)
            target = c.hom(fx, fy) if F.covariant else c.hom(fy, fx)
            source = d.hom(x, y)
            yield source, [_find_image(F, f) for f in source], target


def faithful(F: Functor) -> bool:
    for _, images, _ in _hom_maps(F):
        known = [i for i in images if i is not None]
        if len(set(known)) != len(known):
            return False
    return True


def full(F: Functor) -> bool:
    return all(set(target) <= set(images) for _, images, target in _hom_maps(F))


def fully_faithful(F: Functor) -> bool:
    return faithful(F) and full(F)


def _same_category(a: Category, b: Category) -> bool:
    return (
        set(a.quiver.objects) == set(b.quiver.objects)
        and {x.id for x in a.quiver.arrows} == {x.id for x in b.quiver.arrows}
        and a.table.partition() == b.table.partition()
    )


@dataclass(frozen=True)
class FunctorClasses:
    equivalence: bool
    embedding: bool
    full_embedding: bool
    inclusion: bool
    full_inclusion: bool
    endofunctor: bool
    identity: bool
    constant: bool
    conservative: bool


def is_inclusion(F: Functor) -> bool:
    dq, cq = F.domain.quiver, F.codomain.quiver
    return (
        F.covariant
        and all(F.object_map[x] == x for x in dq.objects)
        and all(F.arrow_map[a.id] == a.id for a in dq.arrows)
        and set(dq.objects) <= set(cq.objects)
        and {a.id for a in dq.arrows} <= {a.id for a in cq.arrows}
    )


def is_endofunctor(F: Functor) -> bool:
    return _same_category(F.domain, F.codomain)


def is_identity_functor(F: Functor) -> bool:
    return is_inclusion(F) and is_endofunctor(F)


def is_constant_functor(F: Functor) -> bool:
    if len(set(_object_classes(F).values())) > 1:
        return False
    return all(
        (img := _find_image(F, f)) is None or img.is_identity for f in F.domain.morphisms
    )


def is_conservative(F: Functor) -> bool:
    for f in F.domain.morphisms:
        img = _find_image(F, f)
        if img is not None and analysis.is_isomorphism(F.codomain, img) and not analysis.is_isomorphism(F.domain, f):
            return False
    return True


def functor_class_predicates(F: Functor) -> FunctorClasses:
    ff = fully_faithful(F)
    inj = injective_on_objects(F)
    incl = is_inclusion(F)
    return FunctorClasses(
        equivalence=ff and essentially_surjective(F),
        embedding=faithful(F) and inj,
        full_embedding=ff and inj,
        inclusion=incl,
        full_inclusion=incl and full(F),
        endofunctor=is_endofunctor(F),
        identity=is_identity_functor(F),
        constant=is_constant_functor(F),
        conservative=is_conservative(F),
    )


@dataclass(frozen=True, eq=False)
class FiberCategory:
    """Objects over ``base_object`` and the domain classes sent to its identity.

    ``category`` presents the fiber by its own multiplication table: one
    arrow per non-identity class (labelled by its canonical word) and one
    relation per composable pair.
    """

    base_object: str
    objects: tuple[str, ...]
    morphisms: tuple[MorphismClass, ...]
    category: Category

    @property
    def is_discrete(self) -> bool:
        return all(f.is_identity for f in self.morphisms)


def fiber_category(F: Functor, x: str) -> FiberCategory:
    base = F.codomain.resolve(x)
    ident = F.codomain.identity(base)
    d = F.domain
    objects = tuple(u for u in d.objects if F.map_object(u) == base)
    members = set(objects)
    morphisms = tuple(
        f for f in d.morphisms
        if f.dom in members and f.cod in members and _find_image(F, f) == ident
    )
    labels = {f: d.format(f) for f in morphisms if not f.is_identity}
    q = build_quiver(objects, [(labels[f], f.dom, f.cod) for f in labels])
    relations = []
    for g, f in itertools.product(morphisms, repeat=2):
        if f.cod != g.dom or (f.is_identity or g.is_identity):
            continue
        gf = d.compose(g, f)
        if gf is None:
            continue
        lhs = PathWord(f.dom, g.cod, (labels[g], labels[f]))
        rhs = PathWord.identity(f.dom) if gf.is_identity else PathWord(f.dom, g.cod, (labels[gf],))
        relations.append((lhs, rhs))
    category = make_category(q, relations, d.config, truncate=d.truncate,
                             composition_symbol=d.composition_symbol, identity_prefix=d.identity_prefix)
    return FiberCategory(base, objects, morphisms, category)


def fibers(F: Functor) -> list[FiberCategory]:
    return [fiber_category(F, x) for x in F.codomain.objects]


def is_discrete_fibration(F: Functor) -> bool:
    return all(fb.is_discrete for fb in fibers(F))


def is_groupoidal_fibration(F: Functor) -> bool:
    """Every fiber is a groupoid; offered as a convenience composite only."""
    return all(analysis.is_groupoid(fb.category) for fb in fibers(F))


def cartesian_counterexample(F: Functor, f) -> Optional[tuple]:
    """``(h, u, lifts)`` where the number of lifts ``v`` is not exactly one."""
    if not F.covariant:
        raise ContravariantUnsupported("Cartesian morphisms are only checked for covariant functors")
    d, c = F.domain, F.codomain
    f = d.morphism(f)
    ff = _find_image(F, f)
    if ff is None:
        return None
    for z in d.objects:
        fz, fx = F.map_object(z), F.map_object(f.dom)
        candidates = d.hom(z, f.dom)
        images = {v: _find_image(F, v) for v in candidates}
        for h in d.hom(z, f.cod):
            fh = _find_image(F, h)
            if fh is None:
                continue
            for u in c.hom(fz, fx):
                if c.compose(ff, u) != fh:
                    continue
                lifts = [v for v in candidates if d.compose(f, v) == h and images[v] == u]
                if len(lifts) != 1:
                    return h, u, lifts
    return None


def is_cartesian_morphism(F: Functor, f) -> bool:
    return cartesian_counterexample(F, f) is None
