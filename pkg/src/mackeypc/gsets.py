"""Skeletal finite G-sets ``(n, alpha)`` and equivariant maps between them.

Points are 1-based.  A G-set stores the images of its points under each group
generator; the action of every group element is derived on construction,
which also verifies that the generator data defines a homomorphism into the
symmetric group.  Disjoint union is block sum, so it is strictly associative
and unital as plain data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidInputError
from .groups import (Group, Subgroup, check_subgroup, class_index, class_representative,
                     conjugacy_classes_of_subgroups)


@dataclass(frozen=True)
class GSet:
    group: Group
    n: int
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        action = tuple(tuple(int(x) for x in imgs) for imgs in self.action)
        object.__setattr__(self, "action", action)
        if self.n < 0:
            raise InvalidInputError("a G-set cannot have negative size")
        if len(action) != len(self.group.generators):
            raise InvalidInputError(
                f"expected images for {len(self.group.generators)} generators, got {len(action)}")
        for imgs in action:
            if sorted(imgs) != list(range(1, self.n + 1)):
                raise InvalidInputError(f"generator images {list(imgs)} are not a permutation of 1..{self.n}")
        self._table  # forces the homomorphism check

    @cached_property
    def _table(self) -> np.ndarray:
        """Row ``x`` holds the 0-based images of the 0-based points under element ``x``."""
        g = self.group
        table = np.full((g.order, self.n), -1, dtype=np.int64)
        table[g.identity] = np.arange(self.n)
        gens = [np.array(imgs, dtype=np.int64) - 1 for imgs in self.action]
        done = np.zeros(g.order, dtype=bool)
        done[g.identity] = True
        frontier = [g.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s, img in zip(g.generator_indices, gens):
                    y = g.mul(s, x)
                    row = img[table[x]]
                    if not done[y]:
                        table[y] = row
                        done[y] = True
                        nxt.append(y)
                    elif not np.array_equal(table[y], row):
                        raise InvalidInputError("generator images do not define a group action")
            frontier = nxt
        return table

    def act(self, x: int, point: int) -> int:
        """Image of a 1-based point under the element with index ``x``."""
        return int(self._table[x, point - 1]) + 1

    def element_action(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) + 1 for v in self._table[x])

    def __repr__(self):
        return f"GSet(n={self.n}, action={[list(a) for a in self.action]})"

    # orbit bookkeeping ----------------------------------------------------
    @cached_property
    def _orbits(self) -> tuple[tuple[int, ...], ...]:
        label = np.full(self.n, -1, dtype=np.int64)
        out = []
        for p in range(self.n):
            if label[p] >= 0:
                continue
            pts = np.unique(self._table[:, p])
            label[pts] = len(out)
            out.append(tuple(int(q) + 1 for q in pts))
        return tuple(out)

    @cached_property
    def chart(self) -> "OrbitChart":
        return OrbitChart(self)


def empty_gset(g: Group) -> GSet:
    return GSet(g, 0, tuple(() for _ in g.generators))


def point_gset(g: Group) -> GSet:
    return GSet(g, 1, tuple((1,) for _ in g.generators))


def trivial_gset(g: Group, n: int) -> GSet:
    return GSet(g, n, tuple(tuple(range(1, n + 1)) for _ in g.generators))


def cosets(g: Group, h: Subgroup) -> tuple[list[int], np.ndarray]:
    """Left cosets ``xH`` numbered by least representative.

    Returns the list of least representatives and, for every element, the
    0-based number of its coset.
    """
    check_subgroup(g, h)
    number = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if number[x] >= 0:
            continue
        for y in h.elements:
            number[g.mul(x, y)] = len(reps)
        reps.append(x)
    return reps, number


def orbit_gset(g: Group, h: Subgroup) -> GSet:
    """The coset space G/H with left translation."""
    reps, number = cosets(g, h)
    action = tuple(tuple(int(number[g.mul(s, r)]) + 1 for r in reps) for s in g.generator_indices)
    return GSet(g, len(reps), action)


def class_orbit(g: Group, i: int) -> GSet:
    """G/H for the representative H of subgroup class ``i``."""
    return _class_orbits(g)[i]


def _class_orbits(g: Group) -> tuple[GSet, ...]:
    cached = g.__dict__.get("_orbit_cache")
    if cached is None:
        cached = tuple(orbit_gset(g, c.representative) for c in conjugacy_classes_of_subgroups(g))
        g.__dict__["_orbit_cache"] = cached
    return cached


def _same_group(a: GSet, b: GSet) -> None:
    if a.group != b.group:
        raise InvalidInputError("G-sets are over different groups")


def disjoint_union(a: GSet, b: GSet) -> GSet:
    _same_group(a, b)
    action = tuple(ia + tuple(a.n + x for x in ib) for ia, ib in zip(a.action, b.action))
    return GSet(a.group, a.n + b.n, action)


def disjoint_union_all(g: Group, parts: Sequence[GSet]) -> GSet:
    out = empty_gset(g)
    for p in parts:
        out = disjoint_union(out, p)
    return out


def product(a: GSet, b: GSet) -> GSet:
    """Diagonal action on pairs; pair (i, j) is point ``(i-1)*b.n + j``."""
    _same_group(a, b)
    action = tuple(
        tuple((ia[i] - 1) * b.n + ib[j] for i in range(a.n) for j in range(b.n))
        for ia, ib in zip(a.action, b.action))
    return GSet(a.group, a.n * b.n, action)


def orbits(a: GSet) -> list[list[int]]:
    return [list(o) for o in a._orbits]


def stabilizer(a: GSet, point: int) -> Subgroup:
    if not 1 <= point <= a.n:
        raise InvalidInputError(f"point {point} out of range 1..{a.n}")
    col = a._table[:, point - 1]
    return Subgroup(a.group, tuple(int(x) for x in np.flatnonzero(col == point - 1)))


def fixed_points(a: GSet, h: Subgroup) -> int:
    check_subgroup(a.group, h)
    if a.n == 0:
        return 0
    rows = a._table[list(h.elements)]
    return int(np.count_nonzero(np.all(rows == np.arange(a.n), axis=0)))


def fixed_point_set(a: GSet, h: Subgroup) -> list[int]:
    if a.n == 0:
        return []
    rows = a._table[list(h.elements)]
    return [int(p) + 1 for p in np.flatnonzero(np.all(rows == np.arange(a.n), axis=0))]


class OrbitChart:
    """Identifies every orbit of a G-set with a class-representative orbit G/H_i.

    For each orbit the base point is the least point whose stabilizer is exactly
    the class representative.  ``locate(p)`` returns the orbit number and the
    1-based coset of G/H_i corresponding to ``p``.
    """

    def __init__(self, a: GSet):
        g = a.group
        self.gset = a
        self.classes: list[int] = []
        self.bases: list[int] = []
        self._where: dict[int, tuple[int, int]] = {}
        for k, orb in enumerate(a._orbits):
            h = stabilizer(a, orb[0])
            ci = class_index(h)
            rep = class_representative(g, ci)
            base = next(p for p in orb if stabilizer(a, p).elements == rep.elements)
            _, number = cosets(g, rep)
            for x in range(g.order):
                self._where.setdefault(a.act(x, base), (k, int(number[x]) + 1))
            self.classes.append(ci)
            self.bases.append(base)

    def locate(self, point: int) -> tuple[int, int]:
        return self._where[point]

    def __len__(self):
        return len(self.classes)


def canonical_form(a: GSet) -> tuple[int, ...]:
    """Sorted stabilizer-class indices, one per orbit: a complete isomorphism invariant."""
    return tuple(sorted(a.chart.classes))


@dataclass(frozen=True)
class GMap:
    source: GSet
    target: GSet
    images: tuple[int, ...] = field()

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        _same_group(self.source, self.target)
        if len(images) != self.source.n:
            raise InvalidInputError(f"map has {len(images)} images for {self.source.n} points")
        if any(not 1 <= y <= self.target.n for y in images):
            raise InvalidInputError("map image out of range")
        for ia, ib in zip(self.source.action, self.target.action):
            for i in range(self.source.n):
                if images[ia[i] - 1] != ib[images[i] - 1]:
                    raise InvalidInputError(f"map is not equivariant at point {i + 1}")

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and self.images == tuple(range(1, self.source.n + 1))

    def __repr__(self):
        return f"GMap({list(self.images)})"


def identity_map(a: GSet) -> GMap:
    return GMap(a, a, tuple(range(1, a.n + 1)))


def compose_maps(g: GMap, f: GMap) -> GMap:
    """``g o f``."""
    if f.target != g.source:
        raise InvalidInputError("maps are not composable")
    return GMap(f.source, g.target, tuple(g.images[y - 1] for y in f.images))


def is_bijective(f: GMap) -> bool:
    return f.source.n == f.target.n and len(set(f.images)) == f.source.n


def iso_gsets(a: GSet, b: GSet) -> Optional[GMap]:
    """An equivariant bijection a -> b, or None when the G-sets are not isomorphic."""
    _same_group(a, b)
    if canonical_form(a) != canonical_form(b):
        return None
    g = a.group
    ca, cb = a.chart, b.chart
    unused: dict[int, list[int]] = {}
    for k, ci in enumerate(cb.classes):
        unused.setdefault(ci, []).append(k)
    images = [0] * a.n
    for k, ci in enumerate(ca.classes):
        kb = unused[ci].pop(0)
        pa, pb = ca.bases[k], cb.bases[kb]
        # both base points have stabilizer exactly the class representative
        for x in range(g.order):
            images[a.act(x, pa) - 1] = b.act(x, pb)
    return GMap(a, b, tuple(images))
