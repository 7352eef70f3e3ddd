"""Natural transformations between parallel functors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import analysis
from .category import Category, Equation
from .congruence import MorphismClass
from .errors import CodomainMismatch, IllTypedComponent, UnknownObject, ValidationError
from .functor import Functor, _same_category


@dataclass(frozen=True, eq=False)
class NaturalTransformation:
    source: Functor
    target: Functor
    # resolved domain object -> component class in the shared codomain
    components: Mapping[str, MorphismClass]

    @property
    def codomain(self) -> Category:
        return self.source.codomain


@dataclass(frozen=True)
class NaturalityReport:
    required: tuple[Equation, ...]
    satisfied: tuple[Equation, ...]
    missing: tuple[Equation, ...]

    @property
    def valid(self) -> bool:
        return not self.missing


def matching_codomains(F: Functor, G: Functor) -> bool:
    """Same object and arrow labels and the same class partition."""
    return _same_category(F.codomain, G.codomain)


def _check_pair(F: Functor, G: Functor):
    if F.covariant != G.covariant:
        raise CodomainMismatch("functors of different variance cannot be related by a transformation")
    if F.domain is not G.domain and not _same_category(F.domain, G.domain):
        raise CodomainMismatch("functors do not share a domain category")
    if not matching_codomains(F, G):
        raise CodomainMismatch("functor codomains do not match")


def natural_transformation(F: Functor, G: Functor, components: Mapping) -> NaturalTransformation:
    """Validate component types; ``components`` values are codomain word references."""
    _check_pair(F, G)
    c = F.codomain
    d = F.domain
    given = {}
    for x, ref in components.items():
        try:
            given[d.resolve(x)] = ref
        except UnknownObject:
            raise IllTypedComponent(f"component given for unknown object {x!r}") from None
    out = {}
    for x in d.objects:
        if x not in given:
            raise IllTypedComponent(f"missing component at {x}")
        try:
            eta = c.morphism(given[x])
        except ValidationError as exc:
            raise IllTypedComponent(f"component at {x}: {exc}") from None
        want = (F.map_object(x), G.map_object(x))
        if (eta.dom, eta.cod) != want:
            raise IllTypedComponent(
                f"component at {x} is {eta.dom} -> {eta.cod}, expected {want[0]} -> {want[1]}"
            )
        out[x] = eta
    return NaturalTransformation(F, G, out)


def _report(nt: NaturalTransformation) -> NaturalityReport:
    F, G, eta = nt.source, nt.target, nt.components
    c = nt.codomain
    d = F.domain
    required, satisfied, missing = [], [], []
    seen = set()
    for arrow in d.quiver.arrows:
        f = d.morphism(arrow.id)
        if f in seen:
            continue
        seen.add(f)
        ff, gf = F.map_word(f.canonical), G.map_word(f.canonical)
        if F.covariant:
            lhs = eta[f.cod].canonical.after(ff)
            rhs = gf.after(eta[f.dom].canonical)
        else:
            lhs = eta[f.dom].canonical.after(ff)
            rhs = gf.after(eta[f.cod].canonical)
        eq = (lhs, rhs)
        required.append(eq)
        a, b = c.find(lhs), c.find(rhs)
        (satisfied if a is not None and a == b else missing).append(eq)
    return NaturalityReport(tuple(required), tuple(satisfied), tuple(missing))


def naturality_conditions(F: Functor, G: Functor, components: Mapping) -> NaturalityReport:
    """One square per generator arrow; composite squares follow by congruence."""
    return _report(natural_transformation(F, G, components))


def validate(F: Functor, G: Functor, components: Mapping) -> bool:
    try:
        return naturality_conditions(F, G, components).valid
    except (CodomainMismatch, IllTypedComponent):
        return False


def component_is_natural_iso(nt: NaturalTransformation, x: str) -> bool:
    x = nt.source.domain.resolve(x)
    return analysis.is_isomorphism(nt.codomain, nt.components[x])


def is_natural_isomorphism(nt: NaturalTransformation) -> bool:
    return _report(nt).valid and all(component_is_natural_iso(nt, x) for x in nt.components)


def identity_transformation(F: Functor) -> NaturalTransformation:
    c = F.codomain
    return NaturalTransformation(F, F, {x: c.identity(F.map_object(x)) for x in F.domain.objects})


def vertical_composite(eta: NaturalTransformation, theta: NaturalTransformation) -> NaturalTransformation:
    """``theta ∘ eta`` computed componentwise."""
    c = eta.codomain
    comps = {}
    for x, e in eta.components.items():
        composite = c.compose(theta.components[x], e)
        if composite is None:
            raise IllTypedComponent(f"composite component at {x} lies outside the truncated codomain")
        comps[x] = composite
    return NaturalTransformation(eta.source, theta.target, comps)
