"""Inputs to the equivariant K-theory machine and the Mackey functor of its pi_0.

Two input families are supported.  A Mackey functor becomes a PC-functor by
regarding each value as a discrete permutative category; finite values are
built as explicit ``FinPermCat`` tables and run through the generic pi_0
and group completion code, infinite values are kept symbolic.  A finite
G-set ``X`` gives the representable input whose value at ``G/H`` is the
span category from ``G/H`` to ``X``, acted on by precomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

import numpy as np

from .abgroups import AbGroup, AbHom
from .burnside import pi0_enrichment
from .errors import InvalidInputError
from .groups import Group, conjugacy_classes_of_subgroups
from .gsets import GSet, class_orbit
from .mackey import (MackeyFunctor, OrbitKey, make_mackey, orbit_maps, restriction_span, transfer_span,
                     validate_mackey)
from .permcat import CommMonoid, FinPermCat, LaxFunctor, discrete_permcat
from .pi0 import components, group_completion, induced_map_on_completions, pi0_objects
from .spans import Span, compose_spans

EXPLICIT_LIMIT = 64


@dataclass
class ExplicitDiscrete:
    """A finite abelian group as an explicit discrete permutative category."""

    group: AbGroup
    elements: list[tuple[int, ...]]  # Smith coordinates, one per object
    category: FinPermCat

    def index(self, x) -> int:
        return self._pos[self.group.coordinates(x)]

    def __post_init__(self):
        self._pos = {e: i for i, e in enumerate(self.elements)}


@dataclass
class DiscreteGroupCategory:
    """An abelian group regarded as a discrete permutative category, kept symbolic."""

    group: AbGroup


@dataclass
class SpanCategory:
    """The category of spans from ``source`` to ``target``, kept symbolic."""

    source: GSet
    target: GSet


@dataclass
class Precomposition:
    """Precomposition with ``span``, a functor ``Span(B, X) -> Span(A, X)`` for ``span: A -> B``."""

    span: Span

    def __call__(self, s: Span) -> Span:
        return compose_spans(self.span, s)


Value = Union[ExplicitDiscrete, DiscreteGroupCategory, SpanCategory]
Datum = Union[LaxFunctor, AbHom, Precomposition]


@dataclass
class PCFunctorData:
    group: Group
    family: str  # "mackey" or "representable"
    values: list[Value]
    restrictions: dict[OrbitKey, Datum]
    transfers: dict[OrbitKey, Datum]


def explicit_discrete(a: AbGroup, limit: int = EXPLICIT_LIMIT) -> ExplicitDiscrete:
    if not a.is_finite or a.order > limit:
        raise InvalidInputError(f"{a.describe()} is too large for an explicit category")
    ranges = [range(a.diagonal[i]) for i in a.nontrivial]
    elements = list(itertools.product(*ranges))
    pos = {e: i for i, e in enumerate(elements)}
    table = [[pos[a.coordinates(a.from_coordinates(x) + a.from_coordinates(y))] for y in elements]
             for x in elements]
    monoid = CommMonoid(table, labels=elements)
    return ExplicitDiscrete(a, elements, discrete_permcat(monoid, name=f"discrete({a.describe()})"))


def _discrete_value(a: AbGroup, limit: int) -> Value:
    if a.is_finite and a.order <= limit:
        return explicit_discrete(a, limit)
    return DiscreteGroupCategory(a)


def _hom_datum(src: Value, tgt: Value, h: AbHom) -> Datum:
    if isinstance(src, ExplicitDiscrete) and isinstance(tgt, ExplicitDiscrete):
        obj = [tgt.index(h(src.group.from_coordinates(e))) for e in src.elements]
        c, d = src.category, tgt.category
        delta = [[int(d.ident[obj[int(c.add[x, y])]]) for y in range(c.nobj)] for x in range(c.nobj)]
        return LaxFunctor(c, d, obj, obj, delta)
    return h


def mackey_to_pcfunctor(m: MackeyFunctor, explicit_limit: int = EXPLICIT_LIMIT) -> PCFunctorData:
    rep = validate_mackey(m, limit=1)
    if not rep.ok:
        raise InvalidInputError(f"invalid Mackey functor: {rep.failures[0]}")
    values = [_discrete_value(v, explicit_limit) for v in m.values]
    R = {k: _hom_datum(values[k[0]], values[k[1]], h) for k, h in m.restrictions.items()}
    T = {k: _hom_datum(values[k[1]], values[k[0]], h) for k, h in m.transfers.items()}
    return PCFunctorData(m.group, "mackey", values, R, T)


def suspension_pcfunctor(x: GSet) -> PCFunctorData:
    g = x.group
    n = len(conjugacy_classes_of_subgroups(g))
    values = [SpanCategory(class_orbit(g, i), x) for i in range(n)]
    R = {k: Precomposition(restriction_span(g, k)) for k in orbit_maps(g)}
    T = {k: Precomposition(transfer_span(g, k)) for k in orbit_maps(g)}
    return PCFunctorData(g, "representable", values, R, T)


# pi_0 of the output ------------------------------------------------------------------

def _completion(v: Value) -> AbGroup:
    if isinstance(v, ExplicitDiscrete):
        return group_completion(pi0_objects(v.category))
    if isinstance(v, DiscreteGroupCategory):
        return v.group  # a group is its own group completion
    return pi0_enrichment(v.source, v.target).group


def _class_vector(v: Value, gr: AbGroup, x) -> np.ndarray:
    """Class in ``Gr(pi0 v)`` of the object ``x`` (a group element of ``v``)."""
    if isinstance(v, ExplicitDiscrete):
        out = np.zeros(gr.ngens, dtype=object)
        out[int(components(v.category)[v.index(x)])] = 1
        return out
    return np.asarray(x, dtype=object)


def _induced(src: Value, tgt: Value, datum: Datum, gs: AbGroup, gt: AbGroup) -> AbHom:
    if isinstance(datum, LaxFunctor):
        return induced_map_on_completions(datum)
    if isinstance(datum, AbHom):
        # source generators: one per object (explicit) or the presentation generators (symbolic)
        gens = [src.group.from_coordinates(e) for e in src.elements] if isinstance(src, ExplicitDiscrete) \
            else [src.group.generator(i) for i in range(src.group.ngens)]
        rows = [_class_vector(tgt, gt, datum(x)) for x in gens]
        return AbHom(gs, gt, np.array(rows, dtype=object).reshape(gs.ngens, gt.ngens))
    if isinstance(datum, Precomposition):
        hs = pi0_enrichment(src.source, src.target)
        ht = pi0_enrichment(tgt.source, tgt.target)
        rows = [ht.project(datum(hs.representative(k))).coefficients for k in range(hs.rank)]
        return AbHom(gs, gt, np.array(rows, dtype=object).reshape(gs.ngens, gt.ngens), check=False)
    raise InvalidInputError(f"unknown functor datum {type(datum).__name__}")


def kg_pi0(x: PCFunctorData) -> MackeyFunctor:
    """The Mackey functor ``G/H -> Gr(pi0 ob X(G/H))`` with the induced structure maps."""
    values = [_completion(v) for v in x.values]
    R, T = {}, {}
    for key in orbit_maps(x.group):
        i, j, _ = key
        R[key] = _induced(x.values[i], x.values[j], x.restrictions[key], values[i], values[j])
        T[key] = _induced(x.values[j], x.values[i], x.transfers[key], values[j], values[i])
    return make_mackey(x.group, values, R, T)
