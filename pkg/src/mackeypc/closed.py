"""Hom permutative categories, evaluation, composition, currying and the trilinear check.

Lax functors and monoidal transformations are enumerated by a small
backtracking search: each constraint is attached to the last variable it
mentions, so partial assignments are pruned as soon as a constraint can be
decided.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .errors import InvalidInputError, ResourceCapError
from .permcat import (FinPermCat, LaxFunctor, MultilinearFunctor, Report, _run, compose_lax,
                      compose_multilinear, identity_lax, validate_lax, validate_multilinear)

MAX_OBJECTS = 8
MAX_MORPHISMS = 64
MAX_CANDIDATES = 200_000


def _search(domains: Sequence[Sequence[int]], constraints: Sequence[tuple[tuple[int, ...], Callable]],
            cap: int = MAX_CANDIDATES):
    """Yield every assignment satisfying all constraints ``pred(assign)``."""
    n = len(domains)
    by_last: list[list[Callable]] = [[] for _ in range(n)]
    upfront = []
    for vars_, pred in constraints:
        if vars_:
            by_last[max(vars_)].append(pred)
        else:
            upfront.append(pred)
    assign = [None] * n
    if not all(p(assign) for p in upfront):
        return
    steps = 0

    def rec(i):
        nonlocal steps
        if i == n:
            yield tuple(assign)
            return
        for v in domains[i]:
            steps += 1
            if steps > cap:
                raise ResourceCapError("search-candidates", cap)
            assign[i] = v
            if all(p(assign) for p in by_last[i]):
                yield from rec(i + 1)
        assign[i] = None

    yield from rec(0)


def _check_sizes(*cats: FinPermCat, max_objects=MAX_OBJECTS, max_morphisms=MAX_MORPHISMS):
    for c in cats:
        if c.nobj > max_objects:
            raise ResourceCapError("hom-objects", max_objects, f"{c!r} has more than {max_objects} objects")
        if c.nmor > max_morphisms:
            raise ResourceCapError("hom-morphisms", max_morphisms,
                                   f"{c!r} has more than {max_morphisms} morphisms")


def enumerate_lax_functors(a: FinPermCat, b: FinPermCat, cap: int = MAX_CANDIDATES) -> list[LaxFunctor]:
    """All strictly unital lax symmetric monoidal functors ``a -> b``, zero functor first."""
    out = []
    m = a.nobj
    mor_constraints = []
    # the composition table, and additivity on morphisms with a unit end (structure morphisms are identities there)
    for (g, f), h in a.comp.items():
        mor_constraints.append(((g, f, h), lambda s, g=g, f=f, h=h: b.comp.get((s[g], s[f])) == s[h]))
    for u in range(a.nmor):
        if a.src[u] == 0 and a.tgt[u] == 0:
            for v in range(a.nmor):
                w = int(a.msum[u, v])
                mor_constraints.append(((u, v, w), lambda s, u=u, v=v, w=w: b.msum[s[u], s[v]] == s[w]))
                w2 = int(a.msum[v, u])
                mor_constraints.append(((u, v, w2), lambda s, u=u, v=v, w=w2: b.msum[s[v], s[u]] == s[w]))
    pairs = [(x, y) for x in range(1, m) for y in range(1, m)]
    slot = {p: i for i, p in enumerate(pairs)}
    # object maps admitting some image for every morphism and every structure morphism
    obj_constraints = []
    for u in range(a.nmor):
        x, y = int(a.src[u]), int(a.tgt[u])
        obj_constraints.append(((x, y), lambda o, x=x, y=y: bool(b.hom(o[x], o[y]))))
    for x in range(m):
        for y in range(m):
            s = int(a.add[x, y])
            obj_constraints.append(((x, y, s), lambda o, x=x, y=y, s=s:
                                    bool(b.hom(int(b.add[o[x], o[y]]), o[s]))))
    obj_domains = [[0]] + [list(range(b.nobj))] * (m - 1)
    steps = 0
    for fo in _search(obj_domains, obj_constraints, cap):
        domains = []
        for u in range(a.nmor):
            s, t = int(a.src[u]), int(a.tgt[u])
            domains.append([int(b.ident[fo[s]])] if u == a.ident[s] else b.hom(fo[s], fo[t]))
        for fm in _search(domains, mor_constraints, cap):
            def delta_of(d, x, y, fo=fo):
                if x == 0 or y == 0:
                    return int(b.ident[fo[a.add[x, y]]])
                return d[slot[(x, y)]]
            ddom = [b.hom(int(b.add[fo[x], fo[y]]), fo[a.add[x, y]]) for x, y in pairs]
            cons = []
            for u in range(a.nmor):
                for v in range(a.nmor):
                    x, y, x2, y2 = int(a.src[u]), int(a.src[v]), int(a.tgt[u]), int(a.tgt[v])
                    vs = tuple(slot[p] for p in ((x, y), (x2, y2)) if p in slot)

                    def natural(d, u=u, v=v, x=x, y=y, x2=x2, y2=y2, fm=fm):
                        left = b.comp.get((delta_of(d, x2, y2), int(b.msum[fm[u], fm[v]])))
                        return left is not None and left == b.comp.get((fm[a.msum[u, v]], delta_of(d, x, y)))
                    cons.append((vs, natural))
            for fd in _search(ddom, cons, cap):
                steps += 1
                if steps > cap:
                    raise ResourceCapError("lax-functor-candidates", cap)
                delta = [[delta_of(fd, x, y) for y in range(m)] for x in range(m)]
                f = LaxFunctor(a, b, fo, fm, delta)
                if validate_lax(f, limit=1).ok:
                    out.append(f)
    # the zero functor is the unit of the pointwise sum and must be object 0
    zkey = _zero_key(a, b)
    return sorted(out, key=lambda f: (f.key != zkey, f.key))


def _zero_key(a: FinPermCat, b: FinPermCat) -> tuple:
    z = int(b.ident[0])
    return ((0,) * a.nobj, (z,) * a.nmor, tuple((z,) * a.nobj for _ in range(a.nobj)))


def enumerate_transformations(f: LaxFunctor, g: LaxFunctor, cap: int = MAX_CANDIDATES) -> list[tuple[int, ...]]:
    """Monoidal natural transformations ``f => g`` as component tuples (unit component the identity)."""
    a, b = f.source, f.target
    domains = [[int(b.ident[0])] if x == 0 else b.hom(f.obj[x], g.obj[x]) for x in range(a.nobj)]
    cons = []
    for u in range(a.nmor):
        x, y = int(a.src[u]), int(a.tgt[u])
        cons.append(((x, y), lambda t, u=u, x=x, y=y:
                     b.comp.get((g.mor[u], t[x])) == b.comp.get((t[y], f.mor[u]))))
    for x in range(a.nobj):
        for y in range(a.nobj):
            s = int(a.add[x, y])
            cons.append(((x, y, s), lambda t, x=x, y=y, s=s:
                         b.comp.get((t[s], f.delta[x][y])) == b.comp.get((g.delta[x][y], int(b.msum[t[x], t[y]])))))
    return list(_search(domains, cons, cap))


@dataclass
class HomData:
    functors: list[LaxFunctor]
    transformations: list[tuple[int, int, tuple[int, ...]]]  # (source functor, target functor, components)
    functor_index: dict[tuple, int]
    transformation_index: dict[tuple, int]


class HomPermCat(FinPermCat):
    """The permutative category of lax functors ``a -> b`` and monoidal transformations."""

    def __init__(self, a: FinPermCat, b: FinPermCat, data: HomData, **tables):
        super().__init__(**tables, name=f"hom({a.name or a!r}, {b.name or b!r})")
        self.inner_source = a
        self.inner_target = b
        self.data = data

    @property
    def functors(self) -> list[LaxFunctor]:
        return self.data.functors

    def functor(self, i: int) -> LaxFunctor:
        return self.data.functors[i]

    def index_of(self, f: LaxFunctor) -> int:
        try:
            return self.data.functor_index[f.key]
        except KeyError:
            raise InvalidInputError("not a lax functor of this hom category") from None

    def components(self, t: int) -> tuple[int, ...]:
        return self.data.transformations[t][2]

    def transformation(self, s: int, t: int, comps: Sequence[int]) -> int:
        try:
            return self.data.transformation_index[(s, t, tuple(comps))]
        except KeyError:
            raise InvalidInputError("components do not form a monoidal transformation") from None


def functor_sum(f: LaxFunctor, g: LaxFunctor) -> LaxFunctor:
    """Pointwise sum with structure morphism ``(delta^f + delta^g) o (1 + gamma + 1)``."""
    a, b = f.source, f.target
    m = a.nobj
    obj = [int(b.add[f.obj[x], g.obj[x]]) for x in range(m)]
    mor = [int(b.msum[f.mor[u], g.mor[u]]) for u in range(a.nmor)]
    delta = []
    for x in range(m):
        row = []
        for y in range(m):
            twist = b.mplus(int(b.ident[f.obj[x]]), int(b.gamma[g.obj[x], f.obj[y]]), int(b.ident[g.obj[y]]))
            row.append(b.compose(int(b.msum[f.delta[x][y], g.delta[x][y]]), twist))
        delta.append(row)
    return LaxFunctor(a, b, obj, mor, delta)


@lru_cache(maxsize=64)
def hom_permcat(a: FinPermCat, b: FinPermCat, max_objects: int = MAX_OBJECTS,
                max_morphisms: int = MAX_MORPHISMS, cap: int = MAX_CANDIDATES) -> HomPermCat:
    _check_sizes(a, b, max_objects=max_objects, max_morphisms=max_morphisms)
    functors = enumerate_lax_functors(a, b, cap)
    if len(functors) > max_objects:
        raise ResourceCapError("hom-objects", max_objects,
                               f"hom category has {len(functors)} objects (cap {max_objects})")
    findex = {f.key: i for i, f in enumerate(functors)}
    trans = []
    for i, f in enumerate(functors):
        for j, g in enumerate(functors):
            for comps in enumerate_transformations(f, g, cap):
                trans.append((i, j, comps))
                if len(trans) > max_morphisms:
                    raise ResourceCapError("hom-morphisms", max_morphisms,
                                           f"hom category exceeds {max_morphisms} morphisms")
    tindex = {t: k for k, t in enumerate(trans)}
    n, mm = len(functors), len(trans)
    ident = [tindex[(i, i, tuple(int(b.ident[x]) for x in f.obj))] for i, f in enumerate(functors)]
    comp = {}
    for k1, (s1, t1, c1) in enumerate(trans):
        for k2, (s2, t2, c2) in enumerate(trans):
            if s1 == t2:
                comps = tuple(b.compose(p, q) for p, q in zip(c1, c2))
                comp[(k1, k2)] = tindex[(s2, t1, comps)]
    add = [[findex[functor_sum(f, g).key] for g in functors] for f in functors]
    msum = [[tindex[(add[s1][s2], add[t1][t2], tuple(int(b.msum[p, q]) for p, q in zip(c1, c2)))]
             for (s2, t2, c2) in trans] for (s1, t1, c1) in trans]
    gamma = [[tindex[(add[i][j], add[j][i], tuple(int(b.gamma[fx, gx]) for fx, gx in zip(f.obj, g.obj)))]
              for j, g in enumerate(functors)] for i, f in enumerate(functors)]
    tables = dict(add=add, src=[t[0] for t in trans], tgt=[t[1] for t in trans], ident=ident, comp=comp,
                  msum=msum, gamma=gamma)
    return HomPermCat(a, b, HomData(functors, trans, findex, tindex), **tables)


def eval_bilinear(a: FinPermCat, b: FinPermCat, **caps) -> MultilinearFunctor:
    """``ev: hom(a, b) x a -> b``; first constraint the identity, second the structure morphism of f."""
    h = hom_permcat(a, b, **caps)
    obj, mor, d1, d2 = {}, {}, {}, {}
    for i, f in enumerate(h.functors):
        for x in range(a.nobj):
            obj[(i, x)] = f.obj[x]
            for j, g in enumerate(h.functors):
                d1[((i, x), j)] = int(b.ident[b.add[f.obj[x], g.obj[x]]])
            for y in range(a.nobj):
                d2[((i, x), y)] = f.delta[x][y]
    for t, (s, tt, comps) in enumerate(h.data.transformations):
        g = h.functors[tt]
        for u in range(a.nmor):
            mor[(t, u)] = b.compose(g.mor[u], comps[a.src[u]])
    return MultilinearFunctor((h, a), b, obj, mor, [d1, d2])


def composition_bilinear(a: FinPermCat, b: FinPermCat, c: FinPermCat, **caps) -> MultilinearFunctor:
    """``hom(b, c) x hom(a, b) -> hom(a, c)``, ``(g, f) -> g o f``."""
    hbc, hab, hac = hom_permcat(b, c, **caps), hom_permcat(a, b, **caps), hom_permcat(a, c, **caps)
    obj, mor, d1, d2 = {}, {}, {}, {}
    comp_idx = {}
    for i, g in enumerate(hbc.functors):
        for j, f in enumerate(hab.functors):
            comp_idx[(i, j)] = hac.index_of(compose_lax(g, f))
            obj[(i, j)] = comp_idx[(i, j)]
    for (i, j), k in comp_idx.items():
        g, f = hbc.functor(i), hab.functor(j)
        for i2 in range(len(hbc.functors)):
            target = comp_idx[(int(hbc.add[i, i2]), j)]
            if target != hac.add[k, comp_idx[(i2, j)]]:
                raise InvalidInputError("precomposition is not strictly additive")
            d1[((i, j), i2)] = int(hac.ident[target])
        for j2, f2 in enumerate(hab.functors):
            comps = tuple(g.delta[f.obj[x]][f2.obj[x]] for x in range(a.nobj))
            d2[((i, j), j2)] = hac.transformation(int(hac.add[k, comp_idx[(i, j2)]]),
                                                   comp_idx[(i, int(hab.add[j, j2]))], comps)
    for p, (gs, gt, psi) in enumerate(hbc.data.transformations):
        g = hbc.functor(gs)
        for q, (fs, ft, theta) in enumerate(hab.data.transformations):
            f2 = hab.functor(ft)
            comps = tuple(c.compose(psi[f2.obj[x]], g.mor[theta[x]]) for x in range(a.nobj))
            mor[(p, q)] = hac.transformation(comp_idx[(gs, fs)], comp_idx[(gt, ft)], comps)
    return MultilinearFunctor((hbc, hab), hac, obj, mor, [d1, d2])


def curry(f: MultilinearFunctor, **caps) -> LaxFunctor:
    """The lax functor ``a -> hom(b, c)``, ``x -> f(x, -)``, with structure from the first constraint."""
    if f.arity != 2:
        raise InvalidInputError("curry needs a bilinear functor")
    a, b = f.sources
    c = f.target
    h = hom_permcat(b, c, **caps)
    rows = []
    for x in range(a.nobj):
        g = LaxFunctor(b, c, [f.obj[(x, y)] for y in range(b.nobj)],
                       [f.mor[(int(a.ident[x]), v)] for v in range(b.nmor)],
                       [[f.deltas[1][((x, y), y2)] for y2 in range(b.nobj)] for y in range(b.nobj)])
        rows.append(h.index_of(g))
    mor = [h.transformation(rows[a.src[u]], rows[a.tgt[u]],
                            [f.mor[(u, int(b.ident[y]))] for y in range(b.nobj)]) for u in range(a.nmor)]
    delta = [[h.transformation(int(h.add[rows[x], rows[x2]]), rows[a.add[x, x2]],
                               [f.deltas[0][((x, y), x2)] for y in range(b.nobj)])
              for x2 in range(a.nobj)] for x in range(a.nobj)]
    return LaxFunctor(a, h, rows, mor, delta)


def uncurry(g: LaxFunctor, **caps) -> MultilinearFunctor:
    """``ev o (g x id)``."""
    h = g.target
    if not isinstance(h, HomPermCat):
        raise InvalidInputError("uncurry needs a functor into a hom category")
    ev = eval_bilinear(h.inner_source, h.inner_target, **caps)
    return compose_multilinear(ev, [g, identity_lax(h.inner_source)])


def curry_factorizations(f: MultilinearFunctor, **caps) -> list[LaxFunctor]:
    """Every lax functor ``g: a -> hom(b, c)`` with ``ev o (g x id) = f``, by exhaustive search."""
    a, b = f.sources
    h = hom_permcat(b, f.target, **caps)
    return [g for g in enumerate_lax_functors(a, h) if uncurry(g, **caps) == f]


def check_curry(a: FinPermCat, b: FinPermCat, c: FinPermCat, **caps) -> Report:
    """Currying is a bijection between bilinear maps ``(a, b) -> c`` and lax functors ``a -> hom(b, c)``.

    Every lax ``g: a -> hom(b, c)`` is enumerated; ``f = ev o (g x id)`` must be
    bilinear, ``curry(f)`` must give back ``g`` and distinct ``g`` must give
    distinct ``f``, so each ``f`` has exactly one factorization.  Also checks
    that currying the evaluation map gives the identity of ``hom(b, c)``.
    """
    def body(col):
        h = hom_permcat(b, c, **caps)
        ev = eval_bilinear(b, c, **caps)
        col.check(curry(ev, **caps) == identity_lax(h), "curry of evaluation is the identity")
        seen: dict[tuple, int] = {}
        for k, g in enumerate(enumerate_lax_functors(a, h)):
            f = compose_multilinear(ev, [g, identity_lax(b)])
            col.check(validate_multilinear(f, limit=1).ok, "uncurried functor is bilinear", k)
            col.check(curry(f, **caps) == g, "curry inverts uncurry", k)
            key = _data_key(f)
            col.check(key not in seen, "unique factorization", k, seen.get(key))
            seen[key] = k
    return _run(f"curry({a.name}, {b.name}, {c.name})", 20, body)


def _data_key(f: MultilinearFunctor) -> tuple:
    return (tuple(sorted(f.obj.items())), tuple(sorted(f.mor.items())),
            tuple(tuple(sorted(d.items())) for d in f.deltas))


def check_trilinear_eval(a: FinPermCat, b: FinPermCat, c: FinPermCat, **caps) -> Report:
    """``ev o (comp x id) = ev o (id x ev)`` on ``hom(b, c) x hom(a, b) x a``, data included."""
    def body(col):
        hbc = hom_permcat(b, c, **caps)
        comp = composition_bilinear(a, b, c, **caps)
        left = compose_multilinear(eval_bilinear(a, c, **caps), [comp, identity_lax(a)])
        right = compose_multilinear(eval_bilinear(b, c, **caps), [identity_lax(hbc), eval_bilinear(a, b, **caps)])
        for diff in left.differences(right):
            col.check(False, diff.axiom, diff.witness)
        col.check(left.sources == right.sources, "same sources")
    return _run(f"trilinear({a.name}, {b.name}, {c.name})", 20, body)
