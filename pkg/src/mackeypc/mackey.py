"""Mackey functors on orbit representatives, their validation, span actions and isomorphisms.

A Mackey functor stores one abelian group per subgroup class ``i`` (the
value at ``G/H_i``) and, for every G-map ``phi: G/H_j -> G/H_i``, a
restriction ``R_phi: M(i) -> M(j)`` and a transfer ``T_phi: M(j) -> M(i)``.
A G-map between orbit representatives is keyed ``(i, j, p)``: it sends the
base coset of ``G/H_j`` to the coset ``p`` of ``G/H_i``, which must be fixed
by ``H_j``.  Restrictions along inclusions, conjugations and their
composites are all maps of this form, so the usual generators are covered.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Sequence

import numpy as np

from .abgroups import AbGroup, AbHom, block_hom, direct_sum
from .burnside import BurnsideElement, compose_elements, span_to_element, transitive_span_basis
from .errors import AxiomError, InvalidInputError, ResourceCapError
from .groups import Group, class_representative, conjugacy_classes_of_subgroups
from .gsets import GMap, GSet, class_orbit, cosets, fixed_point_set, identity_map
from .permcat import Failure, Report, _run
from .spans import Span, _pullback, representative_span

OrbitKey = tuple[int, int, int]


# orbit maps -----------------------------------------------------------------------

@lru_cache(maxsize=None)
def orbit_maps(g: Group) -> tuple[OrbitKey, ...]:
    """Every G-map between orbit representatives, as sorted keys ``(i, j, p)``."""
    n = len(conjugacy_classes_of_subgroups(g))
    out = []
    for i in range(n):
        for j in range(n):
            for p in fixed_point_set(class_orbit(g, i), class_representative(g, j)):
                out.append((i, j, p))
    return tuple(out)


@lru_cache(maxsize=None)
def _coset_reps(g: Group, i: int) -> tuple[int, ...]:
    return tuple(cosets(g, class_representative(g, i))[0])


def orbit_map(g: Group, key: OrbitKey) -> GMap:
    i, j, p = key
    src, tgt = class_orbit(g, j), class_orbit(g, i)
    return GMap(src, tgt, tuple(tgt.act(x, p) for x in _coset_reps(g, j)))


def compose_keys(g: Group, outer: OrbitKey, inner: OrbitKey) -> OrbitKey:
    """``outer o inner`` for ``inner: G/H_k -> G/H_j`` and ``outer: G/H_j -> G/H_i``."""
    i, j, p = outer
    j2, k, q = inner
    if j != j2:
        raise InvalidInputError("orbit maps are not composable")
    return (i, k, class_orbit(g, i).act(_coset_reps(g, j)[q - 1], p))


def identity_key(i: int) -> OrbitKey:
    return (i, i, 1)


def inverse_key(g: Group, key: OrbitKey) -> OrbitKey:
    i, j, p = key
    if i != j:
        raise InvalidInputError("only self-maps of an orbit are invertible")
    for k in orbit_maps(g):
        if k[0] == i and k[1] == i and compose_keys(g, key, k) == identity_key(i):
            return k
    raise AssertionError("self-map of an orbit without inverse")


def restriction_span(g: Group, key: OrbitKey) -> Span:
    """``G/H_j <-id- G/H_j -phi-> G/H_i``, a morphism from G/H_j to G/H_i."""
    phi = orbit_map(g, key)
    return Span(identity_map(phi.source), phi)


def transfer_span(g: Group, key: OrbitKey) -> Span:
    """``G/H_i <-phi- G/H_j -id-> G/H_j``, a morphism from G/H_i to G/H_j."""
    phi = orbit_map(g, key)
    return Span(phi, identity_map(phi.source))


@lru_cache(maxsize=None)
def _double_coset_terms(g: Group, t_key: OrbitKey, r_key: OrbitKey) -> tuple[tuple[OrbitKey, OrbitKey], ...]:
    """Orbits of the pullback of ``T``'s map and ``R``'s map, as (restriction, transfer) key pairs."""
    p, pairs = _pullback(orbit_map(g, t_key), orbit_map(g, r_key))
    chart = p.chart
    j, k = t_key[1], r_key[1]
    out = []
    for cls, base in zip(chart.classes, chart.bases):
        c, d = pairs[base - 1]
        out.append(((j, cls, c), (k, cls, d)))
    return tuple(out)


# Mackey functors ---------------------------------------------------------------------

@dataclass
class MackeyFunctor:
    group: Group
    values: list[AbGroup]
    restrictions: dict[OrbitKey, AbHom]
    transfers: dict[OrbitKey, AbHom]

    @property
    def nlevels(self) -> int:
        return len(self.values)

    def R(self, key: OrbitKey) -> AbHom:
        return self.restrictions[key]

    def T(self, key: OrbitKey) -> AbHom:
        return self.transfers[key]

    def describe(self) -> list[str]:
        return [v.describe() for v in self.values]

    def __repr__(self):
        return f"MackeyFunctor({self.describe()})"


def _as_hom(source: AbGroup, target: AbGroup, data) -> AbHom:
    if isinstance(data, AbHom):
        if data.source != source or data.target != target:
            raise InvalidInputError("homomorphism between the wrong groups")
        return data
    return AbHom(source, target, data)


def validate_mackey(m: MackeyFunctor, limit: int = 20) -> Report:
    g = m.group
    keys = orbit_maps(g)

    def body(col):
        col.check(m.nlevels == len(conjugacy_classes_of_subgroups(g)), "one value per subgroup class",
                  m.nlevels)
        for name, table in (("restriction", m.restrictions), ("transfer", m.transfers)):
            missing = sorted(set(keys) - set(table))
            extra = sorted(set(table) - set(keys))
            col.check(not missing, f"{name} defined on every orbit map", missing[:5])
            col.check(not extra, f"{name} keys are orbit maps", extra[:5])
            if missing or extra:
                return
        for i in range(m.nlevels):
            ident = AbHom.identity(m.values[i])
            col.check(m.R(identity_key(i)).equals(ident), "restriction along identity", i)
            col.check(m.T(identity_key(i)).equals(ident), "transfer along identity", i)
        for outer in keys:
            for inner in keys:
                if inner[0] != outer[1]:
                    continue
                both = compose_keys(g, outer, inner)
                col.check(m.R(outer).then(m.R(inner)).equals(m.R(both)), "restriction functoriality",
                          outer, inner)
                col.check(m.T(inner).then(m.T(outer)).equals(m.T(both)), "transfer functoriality",
                          outer, inner)
        for key in keys:
            if key[0] == key[1]:
                col.check(m.T(key).equals(m.R(inverse_key(g, key))), "conjugation compatibility", key)
        for t_key in keys:
            for r_key in keys:
                if t_key[0] != r_key[0]:
                    continue
                left = m.T(t_key).then(m.R(r_key))
                right = AbHom.zero(m.values[t_key[1]], m.values[r_key[1]])
                for rk, tk in _double_coset_terms(g, t_key, r_key):
                    right = right + m.R(rk).then(m.T(tk))
                col.check(left.equals(right), "double coset formula", t_key, r_key)
    return _run("Mackey functor", limit, body)


def make_mackey(group: Group, values: Sequence[AbGroup], restrictions: Mapping, transfers: Mapping,
                check: bool = True) -> MackeyFunctor:
    """Build and validate a Mackey functor; raises ``AxiomError`` listing failed relations."""
    values = list(values)
    n = len(values)
    try:
        R = {tuple(k): _as_hom(values[k[0]], values[k[1]], v) for k, v in restrictions.items()}
        T = {tuple(k): _as_hom(values[k[1]], values[k[0]], v) for k, v in transfers.items()}
    except IndexError:
        raise InvalidInputError(f"map key refers to a level outside 0..{n - 1}") from None
    m = MackeyFunctor(group, values, R, T)
    if check:
        rep = validate_mackey(m)
        if not rep.ok:
            raise AxiomError("not a Mackey functor", rep.failures)
    return m


def complete_maps(g: Group, values: Sequence[AbGroup], restrictions: Mapping,
                  transfers: Mapping) -> tuple[dict, dict]:
    """Extend generating structure maps to every orbit map.

    Identities are filled in, a transfer along a self-map of an orbit defaults
    to the restriction along its inverse, and composites are generated until
    nothing changes.  Raises if some orbit map is still undetermined.
    """
    values = list(values)
    keys = orbit_maps(g)
    R = {tuple(k): _as_hom(values[k[0]], values[k[1]], v) for k, v in restrictions.items()}
    T = {tuple(k): _as_hom(values[k[1]], values[k[0]], v) for k, v in transfers.items()}
    for i in range(len(values)):
        R.setdefault(identity_key(i), AbHom.identity(values[i]))
        T.setdefault(identity_key(i), AbHom.identity(values[i]))
    changed = True
    while changed:
        changed = False
        for k in keys:
            if k[0] == k[1] and k not in T and inverse_key(g, k) in R:
                T[k] = R[inverse_key(g, k)]
                changed = True
        for outer in keys:
            for inner in keys:
                if inner[0] != outer[1]:
                    continue
                both = compose_keys(g, outer, inner)
                if both not in R and outer in R and inner in R:
                    R[both] = R[outer].then(R[inner])
                    changed = True
                if both not in T and outer in T and inner in T:
                    T[both] = T[inner].then(T[outer])
                    changed = True
    for name, table in (("restriction", R), ("transfer", T)):
        missing = [k for k in keys if k not in table]
        if missing:
            raise InvalidInputError(f"no {name} along orbit map {missing[0]} can be generated")
    return R, T


def zero_mackey(g: Group) -> MackeyFunctor:
    n = len(conjugacy_classes_of_subgroups(g))
    z = AbGroup.zero()
    return make_mackey(g, [z] * n, {k: AbHom.zero(z, z) for k in orbit_maps(g)},
                       {k: AbHom.zero(z, z) for k in orbit_maps(g)})


def _index(g: Group, key: OrbitKey) -> int:
    i, j, _ = key
    return class_orbit(g, j).n // class_orbit(g, i).n


def constant_mackey(g: Group, a: AbGroup) -> MackeyFunctor:
    """Restrictions the identity, transfers multiplication by the index."""
    n = len(conjugacy_classes_of_subgroups(g))
    ident = AbHom.identity(a)
    keys = orbit_maps(g)
    return make_mackey(g, [a] * n, {k: ident for k in keys}, {k: ident * _index(g, k) for k in keys})


def dual_constant_mackey(g: Group, a: AbGroup) -> MackeyFunctor:
    """Restrictions multiplication by the index, transfers the identity."""
    n = len(conjugacy_classes_of_subgroups(g))
    ident = AbHom.identity(a)
    keys = orbit_maps(g)
    return make_mackey(g, [a] * n, {k: ident * _index(g, k) for k in keys}, {k: ident for k in keys})


def direct_sum_mackey(ms: Sequence[MackeyFunctor]) -> MackeyFunctor:
    g = ms[0].group
    if any(m.group != g for m in ms):
        raise InvalidInputError("Mackey functors over different groups")
    n = ms[0].nlevels
    values = [direct_sum([m.values[i] for m in ms]) for i in range(n)]

    def block(i, j, homs):
        sizes_i = [m.values[i].ngens for m in ms]
        sizes_j = [m.values[j].ngens for m in ms]
        return block_hom(values[i], values[j], {(k, k): h.matrix for k, h in enumerate(homs)}, sizes_i, sizes_j)

    R = {k: block(k[0], k[1], [m.R(k) for m in ms]) for k in orbit_maps(g)}
    T = {k: block(k[1], k[0], [m.T(k) for m in ms]) for k in orbit_maps(g)}
    return make_mackey(g, values, R, T)


def burnside_mackey(x: GSet) -> MackeyFunctor:
    """``G/H -> B_G(G/H, X)`` with structure maps given by precomposition with orbit spans."""
    g = x.group
    n = len(conjugacy_classes_of_subgroups(g))
    orbits = [class_orbit(g, i) for i in range(n)]
    bases = [transitive_span_basis(o, x) for o in orbits]
    values = [AbGroup.free(len(b)) for b in bases]

    def matrix(src: int, tgt: int, along: BurnsideElement) -> np.ndarray:
        mat = np.zeros((len(bases[src]), len(bases[tgt])), dtype=np.int64)
        for a in range(len(bases[src])):
            y = BurnsideElement(orbits[src], x, tuple(int(a == k) for k in range(len(bases[src]))))
            mat[a] = compose_elements(y, along).coefficients
        return mat

    R, T = {}, {}
    for key in orbit_maps(g):
        i, j, _ = key
        R[key] = AbHom(values[i], values[j], matrix(i, j, span_to_element(restriction_span(g, key))), check=False)
        T[key] = AbHom(values[j], values[i], matrix(j, i, span_to_element(transfer_span(g, key))), check=False)
    return make_mackey(g, values, R, T)


# evaluation on G-sets and the action of spans ------------------------------------------

def evaluate(m: MackeyFunctor, a: GSet) -> AbGroup:
    """``M(A)``: the direct sum of the values on the orbits of ``A`` in chart order."""
    return direct_sum([m.values[c] for c in a.chart.classes])


def _leg_key(f: GMap, base: int, cls: int) -> tuple[int, OrbitKey]:
    """Orbit of the target containing ``f(base)`` and the orbit map from ``G/H_cls``."""
    orbit, coset = f.target.chart.locate(f(base))
    return orbit, (f.target.chart.classes[orbit], cls, coset)


def span_action(m: MackeyFunctor, s: Span | BurnsideElement) -> AbHom:
    """The homomorphism ``M(B) -> M(A)`` of a span or Burnside element ``A -> B``."""
    if isinstance(s, BurnsideElement):
        a, b = s.source, s.target
        out = AbHom.zero(evaluate(m, b), evaluate(m, a))
        for coeff, key in s.terms():
            out = out + span_action(m, representative_span(a, b, key)) * coeff
        return out
    if s.group != m.group:
        raise InvalidInputError("span and Mackey functor are over different groups")
    a, b = s.source, s.target
    ma, mb = evaluate(m, a), evaluate(m, b)
    sizes_a = [m.values[c].ngens for c in a.chart.classes]
    sizes_b = [m.values[c].ngens for c in b.chart.classes]
    blocks: dict[tuple[int, int], np.ndarray] = {}
    for cls, base in zip(s.middle.chart.classes, s.middle.chart.bases):
        ob, rkey = _leg_key(s.right, base, cls)
        oa, tkey = _leg_key(s.left, base, cls)
        contrib = np.asarray(m.R(rkey).matrix, dtype=object).reshape(sizes_b[ob], -1).dot(
            np.asarray(m.T(tkey).matrix, dtype=object).reshape(-1, sizes_a[oa])) \
            if m.values[cls].ngens else np.zeros((sizes_b[ob], sizes_a[oa]), dtype=object)
        blocks[(ob, oa)] = blocks.get((ob, oa), 0) + contrib
    return block_hom(mb, ma, blocks, sizes_b, sizes_a)


# isomorphisms ----------------------------------------------------------------------------

ISO_CANDIDATE_CAP = 20_000


def _torsion_automorphisms(diag: Sequence[int], cap: int) -> list[np.ndarray]:
    """Automorphisms of ``Z/d_1 + ... + Z/d_t`` as integer matrices (rows are images of generators)."""
    t = len(diag)
    if t == 0:
        return [np.zeros((0, 0), dtype=np.int64)]
    elems = np.array(list(itertools.product(*[range(d) for d in diag])), dtype=np.int64)
    mods = np.array(diag, dtype=np.int64)
    options = [[e for e in elems if not np.any((d * e) % mods)] for d in diag]
    total = int(np.prod([len(o) for o in options], dtype=object))
    if total > cap:
        raise ResourceCapError("iso-candidates", cap)
    out = []
    for rows in itertools.product(*options):
        mat = np.array(rows, dtype=np.int64)
        images = (elems @ mat) % mods
        if len({tuple(r) for r in images}) == len(elems):
            out.append(mat)
    return out


def _free_automorphisms(r: int, bound: int) -> Iterator[np.ndarray]:
    """Elements of GL_r(Z): signed permutation matrices first, then other entries in ``[-bound, bound]``."""
    if r == 0:
        yield np.zeros((0, 0), dtype=np.int64)
        return
    for perm in itertools.permutations(range(r)):
        for signs in itertools.product((1, -1), repeat=r):
            mat = np.zeros((r, r), dtype=np.int64)
            mat[np.arange(r), perm] = signs
            yield mat
    for flat in itertools.product(range(-bound, bound + 1), repeat=r * r):
        mat = np.array(flat, dtype=np.int64).reshape(r, r)
        if np.count_nonzero(mat) == r and np.all(np.count_nonzero(mat, axis=0) == 1) \
                and np.all(np.count_nonzero(mat, axis=1) == 1):
            continue  # signed permutation, already produced
        if round(abs(np.linalg.det(mat))) == 1:
            yield mat


class _Lazy:
    """A memoised view of an iterator, so backtracking can walk it repeatedly."""

    def __init__(self, it: Iterator):
        self._it = it
        self._items: list = []

    def __iter__(self):
        k = 0
        while True:
            if k < len(self._items):
                yield self._items[k]
            else:
                try:
                    item = next(self._it)
                except StopIteration:
                    return
                self._items.append(item)
                yield item
            k += 1

    def empty(self) -> bool:
        return next(iter(self), None) is None


def _level_isomorphisms(a: AbGroup, b: AbGroup, cap: int, bound: int = 1) -> Iterator[AbHom]:
    """Candidate isomorphisms ``a -> b`` through the common Smith form, easiest first."""
    if a.invariants() != b.invariants():
        return
    if a == b:
        yield AbHom.identity(a)

    def split(grp):
        tors_idx = [i for i in grp.nontrivial if grp.diagonal[i]]
        return tors_idx + [i for i in grp.nontrivial if not grp.diagonal[i]]
    ia, ib = split(a), split(b)
    tors = [a.diagonal[i] for i in ia if a.diagonal[i]]
    t, r = len(tors), len(ia) - len(tors)
    to_snf = a._snf[1][:, ia]          # a -> Smith coordinates, torsion first
    from_snf = b._snf[2][ib, :]        # Smith coordinates -> b
    taut = _torsion_automorphisms(tors, cap)
    tors_elems = list(itertools.product(*[range(d) for d in tors]))
    mixes = list(itertools.product(tors_elems, repeat=r))
    if len(taut) * len(mixes) > cap:
        raise ResourceCapError("iso-candidates", cap)
    for fa in _free_automorphisms(r, bound):
        for mix in mixes:
            for ta in taut:
                alpha = np.zeros((t + r, t + r), dtype=object)
                alpha[:t, :t] = ta
                alpha[t:, t:] = fa
                if r and t:
                    alpha[t:, :t] = np.array(mix, dtype=object).reshape(r, t)
                mat = to_snf.dot(alpha).dot(from_snf) if a.ngens and b.ngens else \
                    np.zeros((a.ngens, b.ngens), dtype=object)
                yield AbHom(a, b, mat, check=False)


@dataclass
class MackeyIso:
    maps: list[AbHom]

    def __getitem__(self, i: int) -> AbHom:
        return self.maps[i]


def iso_commutes(m1: MackeyFunctor, m2: MackeyFunctor, maps: Mapping[int, AbHom], key: OrbitKey) -> bool:
    i, j, _ = key
    return (m1.R(key).then(maps[j]).equals(maps[i].then(m2.R(key)))
            and m1.T(key).then(maps[i]).equals(maps[j].then(m2.T(key))))


def mackey_iso(m1: MackeyFunctor, m2: MackeyFunctor, cap: int = ISO_CANDIDATE_CAP) -> Optional[MackeyIso]:
    """Levelwise isomorphisms commuting with every restriction and transfer, or None."""
    if m1.group != m2.group:
        raise InvalidInputError("Mackey functors over different groups")
    n = m1.nlevels
    cands = []
    for i in range(n):
        c = _Lazy(_level_isomorphisms(m1.values[i], m2.values[i], cap))
        if c.empty():
            return None
        cands.append(c)
    # small levels first: their candidate lists are short and prune the rest
    order = sorted(range(n), key=lambda i: (m1.values[i].ngens, -i))
    keys = orbit_maps(m1.group)
    checks: dict[int, list[OrbitKey]] = {i: [] for i in range(n)}
    pos = {lvl: k for k, lvl in enumerate(order)}
    for key in keys:
        last = max(pos[key[0]], pos[key[1]])
        checks[order[last]].append(key)
    chosen: dict[int, AbHom] = {}
    steps = 0

    def rec(k: int) -> bool:
        nonlocal steps
        if k == n:
            return True
        lvl = order[k]
        for phi in cands[lvl]:
            steps += 1
            if steps > cap:
                raise ResourceCapError("iso-search", cap)
            chosen[lvl] = phi
            if all(iso_commutes(m1, m2, chosen, key) for key in checks[lvl]) and rec(k + 1):
                return True
        chosen.pop(lvl, None)
        return False

    if rec(0):
        return MackeyIso([chosen[i] for i in range(n)])
    return None
