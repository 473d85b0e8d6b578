"""Connected components of objects, group completion and induced maps."""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .abgroups import AbGroup, AbHom
from .permcat import CommMonoid, FinPermCat, LaxFunctor


def components(c: FinPermCat) -> np.ndarray:
    """Component label of each object (zig-zags of morphisms); the unit object is in component 0."""
    n = c.nobj
    graph = coo_matrix((np.ones(c.nmor), (c.src, c.tgt)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    # relabel by first occurrence so the numbering is deterministic and 0 holds the unit
    order = {}
    for lab in labels:
        order.setdefault(int(lab), len(order))
    return np.array([order[int(lab)] for lab in labels], dtype=np.int64)


def pi0_objects(c: FinPermCat) -> CommMonoid:
    """The commutative monoid of components under the sum of objects."""
    lab = components(c)
    k = int(lab.max()) + 1
    rep = [int(np.flatnonzero(lab == i)[0]) for i in range(k)]
    table = [[int(lab[c.add[rep[i], rep[j]]]) for j in range(k)] for i in range(k)]
    return CommMonoid(table, labels=rep)


def group_completion(m: CommMonoid) -> AbGroup:
    """One generator per element and the relations ``e_x + e_y - e_{x+y}``."""
    n = m.n
    rows = []
    for x in range(n):
        for y in range(x, n):
            row = [0] * n
            row[x] += 1
            row[y] += 1
            row[m.add(x, y)] -= 1
            if any(row):
                rows.append(row)
    return AbGroup(n, rows)


def induced_map_on_completions(f: LaxFunctor) -> AbHom:
    """``Gr(pi0 source) -> Gr(pi0 target)`` sending the class of ``x`` to the class of ``f(x)``."""
    src_lab, tgt_lab = components(f.source), components(f.target)
    src_m, tgt_m = pi0_objects(f.source), pi0_objects(f.target)
    mat = np.zeros((src_m.n, tgt_m.n), dtype=np.int64)
    for i, x in enumerate(src_m.labels):
        mat[i, tgt_lab[f.obj[x]]] = 1
    return AbHom(group_completion(src_m), group_completion(tgt_m), mat)
