"""Built-in small groups, permutative categories and Mackey functors."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .abgroups import AbGroup, AbHom
from .errors import InvalidInputError
from .groups import Group, make_group
from .mackey import MackeyFunctor, complete_maps, constant_mackey, direct_sum_mackey, make_mackey
from .permcat import CommMonoid, FinPermCat, discrete_permcat, group_morphism_permcat

GROUPS: dict[str, tuple[int, list[list[int]]]] = {
    "C1": (1, []),
    "C2": (2, [[2, 1]]),
    "C3": (3, [[2, 3, 1]]),
    "C4": (4, [[2, 3, 4, 1]]),
    "K4": (4, [[2, 1, 4, 3], [3, 4, 1, 2]]),
    "S3": (3, [[2, 3, 1], [2, 1, 3]]),
    "D4": (4, [[2, 3, 4, 1], [4, 3, 2, 1]]),
    # left regular representation on 1, -1, i, -i, j, -j, k, -k
    "Q8": (8, [[3, 4, 2, 1, 7, 8, 6, 5], [5, 6, 8, 7, 2, 1, 3, 4]]),
}

_group_cache: dict[str, Group] = {}


def group(name: str) -> Group:
    if name not in GROUPS:
        raise InvalidInputError(f"unknown group {name!r}; known: {', '.join(GROUPS)}")
    if name not in _group_cache:
        _group_cache[name] = make_group(*GROUPS[name])
    return _group_cache[name]


def saturating_monoid(n: int) -> CommMonoid:
    """``{0, .., n-1}`` under addition capped at ``n-1``; not a group for n > 1."""
    r = np.arange(n)
    return CommMonoid(np.minimum(r[:, None] + r[None, :], n - 1))


def _twist_ab(a: int, b: int) -> tuple[int]:
    return (a * b,)


PERMCATS: dict[str, Callable[[], FinPermCat]] = {
    "discrete(0)": lambda: discrete_permcat(CommMonoid.trivial(), name="discrete(0)"),
    "discrete(Z/2)": lambda: discrete_permcat(CommMonoid.cyclic(2), name="discrete(Z/2)"),
    "discrete(Z/3)": lambda: discrete_permcat(CommMonoid.cyclic(3), name="discrete(Z/3)"),
    "discrete(N<=2)": lambda: discrete_permcat(saturating_monoid(3), name="discrete(N<=2)"),
    "group_morphism(0,Z/2)": lambda: group_morphism_permcat(CommMonoid.trivial(), 2,
                                                            name="group_morphism(0,Z/2)"),
    "group_morphism(Z/2,Z/2)": lambda: group_morphism_permcat(CommMonoid.cyclic(2), 2,
                                                              name="group_morphism(Z/2,Z/2)"),
    "group_morphism(Z/2,Z/3)": lambda: group_morphism_permcat(CommMonoid.cyclic(2), 3,
                                                              name="group_morphism(Z/2,Z/3)"),
    "twisted(Z/2,Z/2)": lambda: group_morphism_permcat(CommMonoid.cyclic(2), 2, twist=_twist_ab,
                                                       name="twisted(Z/2,Z/2)"),
}

# triples (a, b, c) for the closed-structure checks; all hom categories stay within the caps
CLOSED_TRIPLES: list[tuple[str, str, str]] = [
    ("discrete(0)", "discrete(0)", "discrete(0)"),
    ("discrete(Z/2)", "discrete(Z/2)", "discrete(Z/2)"),
    ("discrete(Z/2)", "discrete(Z/3)", "discrete(Z/3)"),
    ("discrete(N<=2)", "discrete(Z/2)", "discrete(Z/2)"),
    ("discrete(Z/2)", "group_morphism(Z/2,Z/2)", "group_morphism(Z/2,Z/2)"),
    ("group_morphism(Z/2,Z/2)", "discrete(Z/2)", "group_morphism(Z/2,Z/2)"),
    ("group_morphism(Z/2,Z/2)", "group_morphism(Z/2,Z/2)", "group_morphism(Z/2,Z/2)"),
    ("group_morphism(0,Z/2)", "group_morphism(0,Z/2)", "group_morphism(Z/2,Z/2)"),
    ("discrete(Z/2)", "twisted(Z/2,Z/2)", "twisted(Z/2,Z/2)"),
    ("twisted(Z/2,Z/2)", "twisted(Z/2,Z/2)", "twisted(Z/2,Z/2)"),
]


def permcat(name: str) -> FinPermCat:
    if name not in PERMCATS:
        raise InvalidInputError(f"unknown permutative category {name!r}; known: {', '.join(PERMCATS)}")
    return PERMCATS[name]()


def reduction_mackey(g: Group) -> MackeyFunctor:
    """For C2: Z at C2/C2 and Z/2 at C2/e, restriction the reduction map, transfer zero."""
    if g.order != 2:
        raise InvalidInputError("the reduction functor is defined for the group of order 2")
    top, bottom = AbGroup.free(1), AbGroup.cyclic(2)
    values = [bottom, top]
    R = {(1, 0, 1): AbHom(top, bottom, [[1]]), (0, 0, 2): AbHom.identity(bottom)}
    T = {(1, 0, 1): AbHom.zero(bottom, top)}
    R, T = complete_maps(g, values, R, T)
    return make_mackey(g, values, R, T)


def mixed_torsion_mackey(g: Group) -> MackeyFunctor:
    """The reduction functor plus constant Z/3: values Z + Z/3 on top and Z/2 + Z/3 below."""
    return direct_sum_mackey([reduction_mackey(g), constant_mackey(g, AbGroup.cyclic(3))])
