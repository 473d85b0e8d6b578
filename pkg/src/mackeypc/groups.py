"""Finite permutation groups, their subgroups, conjugacy classes and double cosets.

Permutations are 1-based image tuples: ``p[i-1]`` is the image of ``i``.
Products compose right to left, ``(p * q)(i) = p(q(i))``, so a group acts on
the left.  Group elements are kept in lexicographic order of their image
tuples and are usually handled by their index in that order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInputError, ResourceCapError

DEFAULT_ORDER_CAP = 10080
_TABLE_LIMIT = 2048


class Permutation(tuple):
    """An immutable bijection of {1..n} stored as its image tuple."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidInputError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(self[j - 1] for j in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def __repr__(self):
        return f"Permutation({list(self)})"


class Group:
    """A finite group of permutations of {1..degree}, closed on construction."""

    def __init__(self, degree: int, generators: Sequence[Sequence[int]] = (),
                 cap: int = DEFAULT_ORDER_CAP):
        if degree < 1:
            raise InvalidInputError("degree must be positive")
        gens = []
        for g in generators:
            if len(g) != degree:
                raise InvalidInputError(f"generator {list(g)} does not have degree {degree}")
            gens.append(Permutation(g))
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.cap = cap
        self.elements: tuple[Permutation, ...] = tuple(sorted(_closure(degree, gens, cap)))
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.identity = self._index[Permutation.identity(degree)]
        self.generator_indices = tuple(self._index[g] for g in self.generators)

    def __eq__(self, other):
        return (isinstance(other, Group) and self.degree == other.degree
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.degree, self.generators))

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Group(degree={self.degree}, order={self.order}, generators={[list(g) for g in self.generators]})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, p: Sequence[int]) -> int:
        try:
            return self._index[tuple(p)]
        except KeyError:
            raise InvalidInputError(f"{list(p)} is not an element of the group") from None

    @cached_property
    def _table(self):
        n = self.order
        if n > _TABLE_LIMIT:
            return None
        els, idx = self.elements, self._index
        table = np.empty((n, n), dtype=np.int64)
        for i, p in enumerate(els):
            for j, q in enumerate(els):
                table[i, j] = idx[tuple(p[k - 1] for k in q)]
        return table

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        return tuple(self._index[p.inverse()] for p in self.elements)

    def mul(self, i: int, j: int) -> int:
        """Index of ``elements[i] * elements[j]``."""
        t = self._table
        if t is not None:
            return int(t[i, j])
        return self._index[self.elements[i] * self.elements[j]]

    def inv(self, i: int) -> int:
        return self._inverses[i]

    def conj(self, x: int, h: int) -> int:
        """Index of ``x h x^-1``."""
        return self.mul(self.mul(x, h), self.inv(x))

    # cached derived structure -----------------------------------------
    @cached_property
    def _subgroups(self) -> tuple["Subgroup", ...]:
        return _enumerate_subgroups(self)

    @cached_property
    def _classes(self) -> tuple["SubgroupClass", ...]:
        return _conjugacy_classes(self)

    @cached_property
    def _class_lookup(self) -> dict[tuple[int, ...], int]:
        return {h.elements: c.index for c in self._classes for h in c.members}

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, (self.identity,))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by the sorted indices of its elements in ``parent``."""

    parent: Group
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, i: int) -> bool:
        return i in self._set

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def perms(self) -> list[Permutation]:
        return [self.parent.elements[i] for i in self.elements]

    @property
    def sort_key(self) -> tuple:
        return (len(self.elements), self.elements)

    def issubset(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def __repr__(self):
        return f"Subgroup(order={self.order}, elements={self.elements})"


@dataclass(frozen=True)
class SubgroupClass:
    index: int
    representative: Subgroup
    members: tuple[Subgroup, ...]

    @property
    def order(self) -> int:
        return self.representative.order


@dataclass(frozen=True)
class DoubleCoset:
    representative: int
    elements: tuple[int, ...]


def _closure(degree, gens, cap):
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = g * p
            if q not in seen:
                seen.add(q)
                if len(seen) > cap:
                    raise ResourceCapError("group-order", cap)
                queue.append(q)
    return seen


def make_group(degree: int, generators: Sequence[Sequence[int]] = (),
               cap: int = DEFAULT_ORDER_CAP) -> Group:
    return Group(degree, generators, cap=cap)


def generated_subgroup(g: Group, gens: Iterable[int]) -> Subgroup:
    """Closure of a set of element indices."""
    gens = sorted(set(gens))
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.mul(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(g, tuple(sorted(seen)))


def make_subgroup(g: Group, generators: Iterable[Sequence[int]]) -> Subgroup:
    return generated_subgroup(g, [g.index(p) for p in generators])


def check_subgroup(g: Group, h: Subgroup) -> None:
    if h.parent != g:
        raise InvalidInputError("subgroup does not belong to this group")


def _enumerate_subgroups(g: Group) -> tuple[Subgroup, ...]:
    cyclic = {}
    for x in range(g.order):
        c = generated_subgroup(g, [x])
        cyclic.setdefault(c.elements, (c, x))
    found: dict[tuple[int, ...], Subgroup] = {}
    for key, (c, _) in cyclic.items():
        found[key] = c
    frontier = list(found.values())
    cyc_gens = [x for _, (_, x) in sorted(cyclic.items())]
    while frontier:
        nxt = []
        for s in frontier:
            for x in cyc_gens:
                if x in s:
                    continue
                j = generated_subgroup(g, list(_small_generating_set(g, s)) + [x])
                if j.elements not in found:
                    found[j.elements] = j
                    nxt.append(j)
        frontier = nxt
    return tuple(sorted(found.values(), key=lambda h: h.sort_key))


def _small_generating_set(g: Group, h: Subgroup) -> list[int]:
    gens: list[int] = []
    span = {g.identity}
    for x in h.elements:
        if x not in span:
            gens.append(x)
            span = set(generated_subgroup(g, gens).elements)
            if len(span) == h.order:
                break
    return gens


def subgroups(g: Group) -> list[Subgroup]:
    """All subgroups, sorted by (order, element indices)."""
    return list(g._subgroups)


def conjugate_subgroup(h: Subgroup, x: int) -> Subgroup:
    """``x h x^-1``."""
    g = h.parent
    return Subgroup(g, tuple(sorted(g.conj(x, y) for y in h.elements)))


def _conjugacy_classes(g: Group) -> tuple[SubgroupClass, ...]:
    assigned: dict[tuple[int, ...], int] = {}
    groups: list[list[Subgroup]] = []
    for h in g._subgroups:
        if h.elements in assigned:
            continue
        members = {}
        for x in range(g.order):
            c = conjugate_subgroup(h, x)
            members[c.elements] = c
        for key in members:
            assigned[key] = len(groups)
        groups.append(sorted(members.values(), key=lambda s: s.sort_key))
    classes = sorted(groups, key=lambda ms: ms[0].sort_key)
    return tuple(SubgroupClass(i, ms[0], tuple(ms)) for i, ms in enumerate(classes))


def conjugacy_classes_of_subgroups(g: Group) -> list[SubgroupClass]:
    """Subgroup classes ordered by (order, representative); the global class ordering."""
    return list(g._classes)


def class_index(h: Subgroup) -> int:
    return h.parent._class_lookup[h.elements]


def class_representative(g: Group, i: int) -> Subgroup:
    return g._classes[i].representative


def normalizer(h: Subgroup) -> Subgroup:
    g = h.parent
    return Subgroup(g, tuple(x for x in range(g.order)
                             if conjugate_subgroup(h, x).elements == h.elements))


def intersection(h: Subgroup, k: Subgroup) -> Subgroup:
    return Subgroup(h.parent, tuple(sorted(h._set & k._set)))


def double_cosets(g: Group, h: Subgroup, k: Subgroup) -> list[DoubleCoset]:
    """The sets ``h x k`` partitioning ``g``, ordered by least element."""
    check_subgroup(g, h)
    check_subgroup(g, k)
    seen: set[int] = set()
    out = []
    for x in range(g.order):
        if x in seen:
            continue
        block = sorted({g.mul(g.mul(a, x), b) for a in h.elements for b in k.elements})
        seen.update(block)
        out.append(DoubleCoset(block[0], tuple(block)))
    return out
