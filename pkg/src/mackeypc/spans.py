"""Spans of finite G-sets, their composition by chosen pullbacks, and canonical forms.

Composition follows fixed pullback choices: along an identity leg the other
span's middle is reused verbatim, otherwise the pullback is the set of
matching pairs ``(c, d)`` numbered in lexicographic order.  With these
choices composition is strictly unital and strictly associative as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import InvalidInputError
from .groups import class_representative, conjugacy_classes_of_subgroups, normalizer
from .gsets import (GMap, GSet, compose_maps, cosets, disjoint_union, empty_gset,
                    fixed_point_set, identity_map, orbit_gset, stabilizer)


@dataclass(frozen=True)
class Span:
    """``A <-left- C -right-> B``."""

    left: GMap
    right: GMap

    def __post_init__(self):
        if self.left.source != self.right.source:
            raise InvalidInputError("span legs have different sources")

    @property
    def middle(self) -> GSet:
        return self.left.source

    @property
    def source(self) -> GSet:
        return self.left.target

    @property
    def target(self) -> GSet:
        return self.right.target

    @property
    def group(self):
        return self.middle.group


class TransitiveSpanKey(NamedTuple):
    """Iso class of a span with transitive middle G/L.

    ``L`` is the subgroup class index, ``a`` and ``b`` the images of the base
    coset, minimised over the action of the normalizer of the representative.
    """

    L: int
    a: int
    b: int


@dataclass(frozen=True)
class SpanClass:
    source: GSet
    target: GSet
    keys: tuple[TransitiveSpanKey, ...]


def make_span(left: GMap, right: GMap) -> Span:
    return Span(left, right)


def identity_span(a: GSet) -> Span:
    ident = identity_map(a)
    return Span(ident, ident)


def zero_span(a: GSet, b: GSet) -> Span:
    e = empty_gset(a.group)
    return Span(GMap(e, a, ()), GMap(e, b, ()))


def _pullback(f: GMap, g: GMap) -> tuple[GSet, list[tuple[int, int]]]:
    """Lexicographically numbered pullback of ``f: C -> B <- D :g``."""
    c, d = f.source, g.source
    pairs = [(i, j) for i in range(1, c.n + 1) for j in range(1, d.n + 1) if f(i) == g(j)]
    number = {p: k for k, p in enumerate(pairs, start=1)}
    action = tuple(
        tuple(number[(ac[i - 1], ad[j - 1])] for i, j in pairs)
        for ac, ad in zip(c.action, d.action))
    return GSet(c.group, len(pairs), action), pairs


def compose_spans(s: Span, t: Span) -> Span:
    """The composite of ``s: A -> B`` followed by ``t: B -> E``."""
    if s.target != t.source:
        raise InvalidInputError("spans are not composable")
    g, h = s.right, t.left
    if g.is_identity:
        return Span(compose_maps(s.left, h), t.right)
    if h.is_identity:
        return Span(s.left, compose_maps(t.right, g))
    p, pairs = _pullback(g, h)
    left = GMap(p, s.source, tuple(s.left(i) for i, _ in pairs))
    right = GMap(p, t.target, tuple(t.right(j) for _, j in pairs))
    return Span(left, right)


def disjoint_union_spans(s: Span, t: Span) -> Span:
    if s.source != t.source or s.target != t.target:
        raise InvalidInputError("spans have different end objects")
    m = disjoint_union(s.middle, t.middle)
    return Span(GMap(m, s.source, s.left.images + t.left.images),
                GMap(m, s.target, s.right.images + t.right.images))


# canonical forms ------------------------------------------------------------

def _weyl_min(a_set: GSet, b_set: GSet, li: int, a: int, b: int) -> TransitiveSpanKey:
    g = a_set.group
    n = _normalizer_elements(g, li)
    best = min((a_set.act(x, a), b_set.act(x, b)) for x in n)
    return TransitiveSpanKey(li, *best)


@lru_cache(maxsize=None)
def _normalizer_elements(g, li: int) -> tuple[int, ...]:
    return normalizer(class_representative(g, li)).elements


def _orbit_keys(s: Span) -> list[tuple[TransitiveSpanKey, int]]:
    """One (key, base point) pair per orbit of the middle."""
    c = s.middle
    chart = c.chart
    out = []
    for li, base in zip(chart.classes, chart.bases):
        key = _weyl_min(s.source, s.target, li, s.left(base), s.right(base))
        out.append((key, base))
    return out


def canonicalize_span(s: Span) -> SpanClass:
    keys = tuple(sorted(k for k, _ in _orbit_keys(s)))
    return SpanClass(s.source, s.target, keys)


def _normalised_base(s: Span, key: TransitiveSpanKey, base: int) -> int:
    """A point of the orbit with stabilizer the class representative and legs (key.a, key.b)."""
    g = s.group
    for x in _normalizer_elements(g, key.L):
        p = s.middle.act(x, base)
        if s.left(p) == key.a and s.right(p) == key.b:
            return p
    raise AssertionError("normalizer orbit does not reach the canonical pair")


def span_iso(s: Span, t: Span) -> Optional[GMap]:
    """An isomorphism of middles commuting with both legs, or None."""
    if s.source != t.source or s.target != t.target:
        raise InvalidInputError("spans have different end objects")
    ks, kt = _orbit_keys(s), _orbit_keys(t)
    if sorted(k for k, _ in ks) != sorted(k for k, _ in kt):
        return None
    g = s.group
    pool: dict[TransitiveSpanKey, list[int]] = {}
    for k, base in kt:
        pool.setdefault(k, []).append(_normalised_base(t, k, base))
    images = [0] * s.middle.n
    for k, base in ks:
        p = _normalised_base(s, k, base)
        q = pool[k].pop()
        for x in range(g.order):
            images[s.middle.act(x, p) - 1] = t.middle.act(x, q)
    return GMap(s.middle, t.middle, tuple(images))


def transitive_span_basis(a: GSet, b: GSet) -> list[TransitiveSpanKey]:
    """Iso classes of spans ``a <- G/L -> b``: normalizer orbits on fixed pairs, per class L."""
    return list(_basis(a, b))


@lru_cache(maxsize=4096)
def _basis(a: GSet, b: GSet) -> tuple[TransitiveSpanKey, ...]:
    if a.group != b.group:
        raise InvalidInputError("G-sets are over different groups")
    g = a.group
    keys = set()
    for cls in conjugacy_classes_of_subgroups(g):
        fa = fixed_point_set(a, cls.representative)
        fb = fixed_point_set(b, cls.representative)
        for x in fa:
            for y in fb:
                keys.add(_weyl_min(a, b, cls.index, x, y))
    return tuple(sorted(keys))


def representative_span(a: GSet, b: GSet, key: TransitiveSpanKey) -> Span:
    """``a <- G/L -> b`` sending the base coset to ``(key.a, key.b)``."""
    g = a.group
    rep = class_representative(g, key.L)
    mid = orbit_gset(g, rep)
    reps, _ = cosets(g, rep)
    left = GMap(mid, a, tuple(a.act(x, key.a) for x in reps))
    right = GMap(mid, b, tuple(b.act(x, key.b) for x in reps))
    return Span(left, right)


def is_transitive_key_valid(a: GSet, b: GSet, key: TransitiveSpanKey) -> bool:
    rep = class_representative(a.group, key.L)
    stab_a = stabilizer(a, key.a)
    stab_b = stabilizer(b, key.b)
    return rep.issubset(stab_a) and rep.issubset(stab_b)
