"""Finite permutative categories, lax symmetric monoidal functors and multilinear functors.

A ``FinPermCat`` is stored as plain tables.  Objects are ``0..m-1`` with 0
the strict unit; morphisms carry global indices with source and target
arrays, a composition dictionary on composable pairs, an ``M x M`` table for
the sum of morphisms, and the symmetry ``gamma[a][b]: a+b -> b+a``.  The
validators never raise on a broken axiom; they return a ``Report`` whose
failures name the axiom and the offending tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidInputError


# reports ------------------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    axiom: str
    witness: tuple

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "witness": _jsonable(self.witness)}


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    return x


@dataclass
class Report:
    subject: str = ""
    failures: list[Failure] = field(default_factory=list)
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def axioms_failed(self) -> set[str]:
        return {f.axiom for f in self.failures}

    def to_json(self) -> dict:
        return {"subject": self.subject, "ok": self.ok, "checks": self.checks,
                "failures": [f.to_json() for f in self.failures]}


class _Stop(Exception):
    pass


class _Collector:
    def __init__(self, subject: str, limit: int):
        self.report = Report(subject)
        self.limit = limit

    def check(self, cond: bool, axiom: str, *witness) -> bool:
        self.report.checks += 1
        if not cond:
            self.report.failures.append(Failure(axiom, tuple(witness)))
            if len(self.report.failures) >= self.limit:
                raise _Stop
        return cond


def _run(subject: str, limit: int, body: Callable[[_Collector], None]) -> Report:
    col = _Collector(subject, limit)
    try:
        body(col)
    except _Stop:
        pass
    return col.report


# commutative monoids --------------------------------------------------------

class CommMonoid:
    """A finite commutative monoid on ``0..n-1`` with unit 0, given by its table."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Optional[Sequence] = None):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise InvalidInputError("monoid table must be a nonempty square matrix")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise InvalidInputError("monoid table entries out of range")
        self.table = t
        self.labels = list(labels) if labels is not None else list(range(n))
        problems = self.problems()
        if problems:
            raise InvalidInputError(f"not a commutative monoid with unit 0: {problems[0]}")

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def add(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def problems(self) -> list[tuple]:
        t, n = self.table, self.n
        out = []
        for a in range(n):
            if t[0, a] != a or t[a, 0] != a:
                out.append(("unit", a))
        if not np.array_equal(t, t.T):
            out.append(("commutativity",))
        assoc = t[t, :]  # assoc[a, b, c] = (a+b)+c
        right = t[:, t]  # right[a, b, c] = a+(b+c)
        bad = np.argwhere(assoc != right)
        if len(bad):
            out.append(("associativity", *map(int, bad[0])))
        return out

    @classmethod
    def cyclic(cls, n: int) -> "CommMonoid":
        r = np.arange(n)
        return cls((r[:, None] + r[None, :]) % n)

    @classmethod
    def trivial(cls) -> "CommMonoid":
        return cls([[0]])

    def __eq__(self, other):
        return isinstance(other, CommMonoid) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"CommMonoid(n={self.n})"


def monoid_homomorphisms(m: CommMonoid, n: CommMonoid) -> list[tuple[int, ...]]:
    """All unital additive maps m -> n, by brute force over all functions."""
    out = []
    for rest in itertools.product(range(n.n), repeat=m.n - 1):
        f = (0,) + rest
        if all(f[m.add(a, b)] == n.add(f[a], f[b]) for a in range(m.n) for b in range(m.n)):
            out.append(f)
    return out


# permutative categories -----------------------------------------------------

class FinPermCat:
    def __init__(self, add, src, tgt, ident, comp: dict, msum, gamma, name: str = ""):
        self.add = np.asarray(add, dtype=np.int64)
        self.src = np.asarray(src, dtype=np.int64)
        self.tgt = np.asarray(tgt, dtype=np.int64)
        self.ident = np.asarray(ident, dtype=np.int64)
        self.comp = {(int(g), int(f)): int(h) for (g, f), h in comp.items()}
        self.msum = np.asarray(msum, dtype=np.int64)
        self.gamma = np.asarray(gamma, dtype=np.int64)
        self.name = name
        m, mm = self.nobj, self.nmor
        if m < 1:
            raise InvalidInputError("a permutative category needs the unit object")
        shapes = {"sum table": (self.add.shape, (m, m)), "sources": (self.src.shape, (mm,)),
                  "targets": (self.tgt.shape, (mm,)), "identities": (self.ident.shape, (m,)),
                  "morphism sums": (self.msum.shape, (mm, mm)), "symmetry": (self.gamma.shape, (m, m))}
        for what, (got, want) in shapes.items():
            if got != want:
                raise InvalidInputError(f"{what} has shape {got}, expected {want}")
        for arr, bound, what in ((self.add, m, "object"), (self.src, m, "object"), (self.tgt, m, "object"),
                                 (self.ident, mm, "morphism"), (self.msum, mm, "morphism"),
                                 (self.gamma, mm, "morphism")):
            if arr.size and (arr.min() < 0 or arr.max() >= bound):
                raise InvalidInputError(f"{what} index out of range")

    @property
    def nobj(self) -> int:
        return self.add.shape[0] if self.add.ndim == 2 else 0

    @property
    def nmor(self) -> int:
        return self.src.shape[0]

    @cached_property
    def _hom(self) -> dict[tuple[int, int], list[int]]:
        out: dict[tuple[int, int], list[int]] = {}
        for u in range(self.nmor):
            out.setdefault((int(self.src[u]), int(self.tgt[u])), []).append(u)
        return out

    def hom(self, a: int, b: int) -> list[int]:
        return self._hom.get((a, b), [])

    def compose(self, g: int, f: int) -> int:
        """``g o f``."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise InvalidInputError(f"morphisms {g} and {f} are not composable") from None

    def compose_all(self, *ms: int) -> int:
        """``ms[0] o ms[1] o ...``."""
        out = ms[-1]
        for g in reversed(ms[:-1]):
            out = self.compose(g, out)
        return out

    def oplus(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = int(self.add[out, x])
        return out

    def mplus(self, *us: int) -> int:
        out = int(self.ident[0])
        for u in us:
            out = int(self.msum[out, u])
        return out

    @cached_property
    def _key(self) -> tuple:
        return (self.add.tobytes(), self.src.tobytes(), self.tgt.tobytes(), self.ident.tobytes(),
                tuple(sorted(self.comp.items())), self.msum.tobytes(), self.gamma.tobytes())

    def __eq__(self, other):
        return isinstance(other, FinPermCat) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"FinPermCat({label}objects={self.nobj}, morphisms={self.nmor})"

    def is_discrete(self) -> bool:
        return self.nmor == self.nobj


def validate_permcat(c: FinPermCat, limit: int = 20) -> Report:
    def body(col: _Collector):
        m, mm = c.nobj, c.nmor
        A, src, tgt, idn = c.add, c.src, c.tgt, c.ident
        for a in range(m):
            col.check(A[0, a] == a and A[a, 0] == a, "object unit", a)
        assoc = A[A, :] != A[:, A]
        for a, b, d in np.argwhere(assoc):
            col.check(False, "object associativity", int(a), int(b), int(d))
        # underlying category
        for a in range(m):
            col.check(src[idn[a]] == a and tgt[idn[a]] == a, "identity typing", a)
        composable = {(g, f) for g in range(mm) for f in range(mm) if src[g] == tgt[f]}
        for pair in composable - set(c.comp):
            col.check(False, "composition defined", *pair)
        for pair in set(c.comp) - composable:
            col.check(False, "composition typing", *pair)
        for (g, f), h in c.comp.items():
            col.check(src[h] == src[f] and tgt[h] == tgt[g], "composition typing", g, f)
        for u in range(mm):
            col.check(c.comp.get((idn[tgt[u]], u)) == u and c.comp.get((u, idn[src[u]])) == u,
                      "identity law", u)
        pairs = sorted(composable & set(c.comp))
        out_of: dict[int, list[int]] = {}
        for h in range(mm):
            out_of.setdefault(int(src[h]), []).append(h)
        for (g, f) in pairs:
            gf = c.comp[(g, f)]
            for h in out_of.get(int(tgt[g]), []):
                col.check(c.comp.get((h, gf)) == c.comp.get((c.comp[(h, g)], f)),
                          "composition associativity", h, g, f)
        # sum of morphisms
        S = c.msum
        for u in range(mm):
            for v in range(mm):
                w = S[u, v]
                col.check(src[w] == A[src[u], src[v]] and tgt[w] == A[tgt[u], tgt[v]], "sum typing", u, v)
        for a in range(m):
            for b in range(m):
                col.check(S[idn[a], idn[b]] == idn[A[a, b]], "sum of identities", a, b)
        for u in range(mm):
            col.check(S[idn[0], u] == u and S[u, idn[0]] == u, "morphism unit", u)
        for u, v, w in np.argwhere(S[S, :] != S[:, S]):
            col.check(False, "morphism associativity", int(u), int(v), int(w))
        for (g, f) in pairs:
            for (g2, f2) in pairs:
                left = S[c.comp[(g, f)], c.comp[(g2, f2)]]
                right = c.comp.get((int(S[g, g2]), int(S[f, f2])))
                col.check(left == right, "sum functoriality", g, f, g2, f2)
        # symmetry
        G = c.gamma
        for a in range(m):
            for b in range(m):
                gab = G[a, b]
                if not col.check(src[gab] == A[a, b] and tgt[gab] == A[b, a], "symmetry typing", a, b):
                    continue
                col.check(c.comp.get((int(G[b, a]), int(gab))) == idn[A[a, b]], "symmetry involution", a, b)
            col.check(G[a, 0] == idn[a], "symmetry unit", a)
        for a in range(m):
            for b in range(m):
                for d in range(m):
                    left = G[A[a, b], d]
                    right = c.comp.get((int(S[G[a, d], idn[b]]), int(S[idn[a], G[b, d]])))
                    col.check(left == right, "symmetry hexagon", a, b, d)
        for u in range(mm):
            for v in range(mm):
                left = c.comp.get((int(G[tgt[u], tgt[v]]), int(S[u, v])))
                right = c.comp.get((int(S[v, u]), int(G[src[u], src[v]])))
                col.check(left is not None and left == right, "symmetry naturality", u, v)
    return _run(repr(c), limit, body)


def discrete_permcat(m: CommMonoid, name: str = "") -> FinPermCat:
    n = m.n
    ident = np.arange(n)
    comp = {(a, a): a for a in range(n)}
    gamma = m.table.copy()  # gamma[a][b] is the identity of a+b
    return FinPermCat(m.table, ident, ident, ident, comp, m.table, gamma, name=name or f"discrete({n})")


def group_morphism_permcat(m: CommMonoid, h: Sequence[int] | int,
                           twist: Optional[Callable[[int, int], Sequence[int]]] = None,
                           name: str = "") -> FinPermCat:
    """Objects the monoid ``m``; ``Hom(a, a)`` the finite abelian group ``h``, no other morphisms.

    ``h`` is a list of cyclic orders (``Z/h1 + Z/h2 + ...``).  Composition and
    the sum of morphisms are addition in ``h``.  The symmetry is zero unless a
    ``twist(a, b)`` in ``h`` is supplied; whether the twist satisfies the
    permutative axioms is left to ``validate_permcat``.
    """
    moduli = [int(h)] if isinstance(h, (int, np.integer)) else [int(x) for x in h]
    if any(d < 1 for d in moduli):
        raise InvalidInputError("cyclic orders must be positive")
    elems = list(itertools.product(*[range(d) for d in moduli]))
    k = len(elems)
    pos = {e: i for i, e in enumerate(elems)}

    def plus(x, y):
        return pos[tuple((a + b) % d for a, b, d in zip(elems[x], elems[y], moduli))]

    n = m.n
    src = np.repeat(np.arange(n), k)
    ident = np.arange(n) * k
    comp = {(a * k + x, a * k + y): a * k + plus(x, y) for a in range(n) for x in range(k) for y in range(k)}
    msum = np.empty((n * k, n * k), dtype=np.int64)
    for u in range(n * k):
        for v in range(n * k):
            msum[u, v] = m.add(u // k, v // k) * k + plus(u % k, v % k)
    gamma = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            t = pos[tuple(int(x) % d for x, d in zip(twist(a, b), moduli))] if twist else 0
            gamma[a, b] = m.add(a, b) * k + t
    label = name or f"group_morphism({n}, {'x'.join(map(str, moduli)) or '1'}{', twisted' if twist else ''})"
    return FinPermCat(m.table, src, src, ident, comp, msum, gamma, name=label)


# lax functors -----------------------------------------------------------------

class LaxFunctor:
    """Strictly unital lax symmetric monoidal functor with structure morphisms ``delta[a][b]``."""

    def __init__(self, source: FinPermCat, target: FinPermCat, obj, mor, delta):
        self.source = source
        self.target = target
        self.obj = tuple(int(x) for x in obj)
        self.mor = tuple(int(x) for x in mor)
        self.delta = tuple(tuple(int(x) for x in row) for row in delta)
        if len(self.obj) != source.nobj or len(self.mor) != source.nmor:
            raise InvalidInputError("functor data has the wrong length")
        if len(self.delta) != source.nobj or any(len(r) != source.nobj for r in self.delta):
            raise InvalidInputError("structure morphisms must form an objects x objects table")
        if any(not 0 <= x < target.nobj for x in self.obj) or \
                any(not 0 <= x < target.nmor for x in self.mor + sum(self.delta, ())):
            raise InvalidInputError("functor data out of range")

    @property
    def key(self) -> tuple:
        return (self.obj, self.mor, self.delta)

    def __eq__(self, other):
        return (isinstance(other, LaxFunctor) and self.key == other.key
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"LaxFunctor(obj={list(self.obj)})"

    def as_multilinear(self) -> "MultilinearFunctor":
        s = self.source
        return MultilinearFunctor(
            (s,), self.target,
            {(x,): y for x, y in enumerate(self.obj)},
            {(u,): v for u, v in enumerate(self.mor)},
            [{((x,), y): self.delta[x][y] for x in range(s.nobj) for y in range(s.nobj)}])


def identity_lax(c: FinPermCat) -> LaxFunctor:
    return LaxFunctor(c, c, range(c.nobj), range(c.nmor),
                      [[c.ident[c.add[a, b]] for b in range(c.nobj)] for a in range(c.nobj)])


def zero_lax(a: FinPermCat, b: FinPermCat) -> LaxFunctor:
    z = int(b.ident[0])
    return LaxFunctor(a, b, [0] * a.nobj, [z] * a.nmor, [[z] * a.nobj for _ in range(a.nobj)])


def validate_lax(f: LaxFunctor, limit: int = 20) -> Report:
    a, b = f.source, f.target
    F, Fm, D = f.obj, f.mor, f.delta

    def body(col: _Collector):
        for u in range(a.nmor):
            col.check(b.src[Fm[u]] == F[a.src[u]] and b.tgt[Fm[u]] == F[a.tgt[u]], "functor typing", u)
        for x in range(a.nobj):
            col.check(Fm[a.ident[x]] == b.ident[F[x]], "functor identities", x)
        for (g, h), gh in a.comp.items():
            col.check(b.comp.get((Fm[g], Fm[h])) == Fm[gh], "functor composition", g, h)
        col.check(F[0] == 0, "strict unit", 0)
        for x in range(a.nobj):
            for y in range(a.nobj):
                d = D[x][y]
                if not col.check(b.src[d] == b.add[F[x], F[y]] and b.tgt[d] == F[a.add[x, y]],
                                 "structure morphism typing", x, y):
                    continue
                if x == 0 or y == 0:
                    col.check(d == b.ident[F[a.add[x, y]]], "structure morphism unit", x, y)
        # naturality of delta in both variables
        for u in range(a.nmor):
            for v in range(a.nmor):
                x, y, x2, y2 = a.src[u], a.src[v], a.tgt[u], a.tgt[v]
                left = b.comp.get((D[x2][y2], int(b.msum[Fm[u], Fm[v]])))
                right = b.comp.get((Fm[a.msum[u, v]], D[x][y]))
                col.check(left is not None and left == right, "structure morphism naturality", u, v)
        A = a.add
        for x in range(a.nobj):
            for y in range(a.nobj):
                for z in range(a.nobj):
                    left = b.comp.get((D[A[x, y]][z], int(b.msum[D[x][y], b.ident[F[z]]])))
                    right = b.comp.get((D[x][A[y, z]], int(b.msum[b.ident[F[x]], D[y][z]])))
                    col.check(left is not None and left == right, "associativity", x, y, z)
        for x in range(a.nobj):
            for y in range(a.nobj):
                left = b.comp.get((Fm[a.gamma[x, y]], D[x][y]))
                right = b.comp.get((D[y][x], int(b.gamma[F[x], F[y]])))
                col.check(left is not None and left == right, "symmetry", x, y)
    return _run(repr(f), limit, body)


def compose_lax(g: LaxFunctor, f: LaxFunctor) -> LaxFunctor:
    """``g o f`` with structure morphism ``g(delta^f) o delta^g``."""
    if f.target != g.source:
        raise InvalidInputError("lax functors are not composable")
    a, c = f.source, g.target
    obj = [g.obj[y] for y in f.obj]
    mor = [g.mor[v] for v in f.mor]
    delta = [[c.compose(g.mor[f.delta[x][y]], g.delta[f.obj[x]][f.obj[y]]) for y in range(a.nobj)]
             for x in range(a.nobj)]
    return LaxFunctor(a, c, obj, mor, delta)


# multilinear functors ------------------------------------------------------------

def _replace(t: tuple, i: int, v) -> tuple:
    return t[:i] + (v,) + t[i + 1:]


class MultilinearFunctor:
    """A functor on a product of permutative categories with linearity constraints per slot.

    ``deltas[i][(objs, x)]`` is the constraint
    ``f(objs) + f(objs[i -> x]) -> f(objs[i -> objs[i] + x])``.
    """

    def __init__(self, sources: Sequence[FinPermCat], target: FinPermCat, obj: dict, mor: dict,
                 deltas: Sequence[dict]):
        self.sources = tuple(sources)
        self.target = target
        self.obj = {tuple(k): int(v) for k, v in obj.items()}
        self.mor = {tuple(k): int(v) for k, v in mor.items()}
        self.deltas = [{(tuple(k[0]), int(k[1])): int(v) for k, v in d.items()} for d in deltas]
        if len(self.deltas) != len(self.sources):
            raise InvalidInputError("one family of linearity constraints per slot is required")

    @property
    def arity(self) -> int:
        return len(self.sources)

    def object_tuples(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*[range(s.nobj) for s in self.sources])

    def morphism_tuples(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*[range(s.nmor) for s in self.sources])

    def as_lax(self) -> LaxFunctor:
        if self.arity != 1:
            raise InvalidInputError("only unary multilinear functors are lax functors")
        s = self.sources[0]
        d = self.deltas[0]
        return LaxFunctor(s, self.target, [self.obj[(x,)] for x in range(s.nobj)],
                          [self.mor[(u,)] for u in range(s.nmor)],
                          [[d[((x,), y)] for y in range(s.nobj)] for x in range(s.nobj)])

    def data(self) -> tuple:
        return (self.obj, self.mor, self.deltas)

    def __eq__(self, other):
        return (isinstance(other, MultilinearFunctor) and self.sources == other.sources
                and self.target == other.target and self.data() == other.data())

    def __hash__(self):
        return hash((self.arity, len(self.obj)))

    def differences(self, other: "MultilinearFunctor") -> list[Failure]:
        """Entries where two functors with the same shape disagree."""
        out = []
        for name, mine, theirs in (("objects", self.obj, other.obj), ("morphisms", self.mor, other.mor)):
            for k in sorted(set(mine) | set(theirs)):
                if mine.get(k) != theirs.get(k):
                    out.append(Failure(f"{name} differ", (k, mine.get(k), theirs.get(k))))
        for i, (d1, d2) in enumerate(zip(self.deltas, other.deltas)):
            for k in sorted(set(d1) | set(d2)):
                if d1.get(k) != d2.get(k):
                    out.append(Failure(f"linearity constraint {i + 1} differs", (k, d1.get(k), d2.get(k))))
        return out

    def __repr__(self):
        return f"MultilinearFunctor(arity={self.arity})"


def validate_multilinear(f: MultilinearFunctor, limit: int = 20) -> Report:
    srcs, b = f.sources, f.target
    k = f.arity

    def body(col: _Collector):
        objs = list(f.object_tuples())
        mors = list(f.morphism_tuples())
        for x in objs:
            if not col.check(x in f.obj, "object map defined", x):
                raise _Stop
        for u in mors:
            if not col.check(u in f.mor, "morphism map defined", u):
                raise _Stop
        for i in range(k):
            for x in objs:
                for y in range(srcs[i].nobj):
                    if not col.check((x, y) in f.deltas[i], "linearity constraint defined", i + 1, x, y):
                        raise _Stop
        F, Fm = f.obj, f.mor
        # functor on the product
        for u in mors:
            s = tuple(int(c.src[v]) for c, v in zip(srcs, u))
            t = tuple(int(c.tgt[v]) for c, v in zip(srcs, u))
            col.check(b.src[Fm[u]] == F[s] and b.tgt[Fm[u]] == F[t], "functor typing", u)
        for x in objs:
            col.check(Fm[tuple(int(c.ident[v]) for c, v in zip(srcs, x))] == b.ident[F[x]],
                      "functor identities", x)
        comps = [sorted(c.comp.items()) for c in srcs]
        for pairs in itertools.product(*comps):
            g = tuple(p[0][0] for p in pairs)
            h = tuple(p[0][1] for p in pairs)
            gh = tuple(p[1] for p in pairs)
            col.check(b.comp.get((Fm[g], Fm[h])) == Fm[gh], "functor composition", g, h)
        for x in objs:
            if 0 in x:
                col.check(F[x] == 0, "zero in a slot", x)
        for i in range(k):
            ci = srcs[i]
            D = f.deltas[i]
            for x in objs:
                for y in range(ci.nobj):
                    d = D[(x, y)]
                    xs = _replace(x, i, int(ci.add[x[i], y]))
                    if not col.check(b.src[d] == b.add[F[x], F[_replace(x, i, y)]] and b.tgt[d] == F[xs],
                                     "linearity constraint typing", i + 1, x, y):
                        continue
                    if 0 in x or y == 0:
                        col.check(d == b.ident[F[xs]], "linearity constraint unit", i + 1, x, y)
            # naturality in every variable
            for u in mors:
                s = tuple(int(c.src[v]) for c, v in zip(srcs, u))
                t = tuple(int(c.tgt[v]) for c, v in zip(srcs, u))
                for v in range(ci.nmor):
                    left = b.comp.get((D[(t, int(ci.tgt[v]))], int(b.msum[Fm[u], Fm[_replace(u, i, v)]])))
                    right = b.comp.get((Fm[_replace(u, i, int(ci.msum[u[i], v]))], D[(s, int(ci.src[v]))]))
                    col.check(left is not None and left == right, "linearity constraint naturality",
                              i + 1, u, v)
            A = ci.add
            for x in objs:
                for y in range(ci.nobj):
                    for z in range(ci.nobj):
                        xy = _replace(x, i, int(A[x[i], y]))
                        left = b.comp.get((D[(xy, z)], int(b.msum[D[(x, y)], b.ident[F[_replace(x, i, z)]]])))
                        right = b.comp.get((D[(x, int(A[y, z]))],
                                            int(b.msum[b.ident[F[x]], D[(_replace(x, i, y), z)]])))
                        col.check(left is not None and left == right, "slot associativity", i + 1, x, y, z)
                for y in range(ci.nobj):
                    tw = Fm[tuple(int(c.ident[v]) if j != i else int(ci.gamma[x[i], y])
                                  for j, (c, v) in enumerate(zip(srcs, x)))]
                    left = b.comp.get((tw, D[(x, y)]))
                    right = b.comp.get((D[(_replace(x, i, y), x[i])], int(b.gamma[F[x], F[_replace(x, i, y)]])))
                    col.check(left is not None and left == right, "slot symmetry", i + 1, x, y)
        for i in range(k):
            for j in range(i + 1, k):
                ci, cj = srcs[i], srcs[j]
                Di, Dj = f.deltas[i], f.deltas[j]
                for x in objs:
                    for y in range(ci.nobj):
                        for z in range(cj.nobj):
                            xi = _replace(x, i, y)
                            xj = _replace(x, j, z)
                            xij = _replace(xi, j, z)
                            si = _replace(x, i, int(ci.add[x[i], y]))
                            sj = _replace(x, j, int(cj.add[x[j], z]))
                            r1 = b.comp.get((Dj[(si, z)], int(b.msum[Di[(x, y)], Di[(xj, y)]])))
                            twist = b.mplus(int(b.ident[F[x]]), int(b.gamma[F[xi], F[xj]]), int(b.ident[F[xij]]))
                            mid = b.comp.get((int(b.msum[Dj[(x, z)], Dj[(xi, z)]]), twist))
                            r2 = None if mid is None else b.comp.get((Di[(sj, y)], mid))
                            col.check(r1 is not None and r1 == r2, "interchange", i + 1, j + 1, x, y, z)
    return _run(repr(f), limit, body)


def compose_multilinear(g: MultilinearFunctor | LaxFunctor,
                        fs: Sequence[MultilinearFunctor | LaxFunctor]) -> MultilinearFunctor:
    """``g o (f_1 x ... x f_n)``; slot ``s`` of the composite uses ``g(.., delta^{f_j}, ..) o delta^g_j``."""
    if isinstance(g, LaxFunctor):
        g = g.as_multilinear()
    fs = [f.as_multilinear() if isinstance(f, LaxFunctor) else f for f in fs]
    if len(fs) != g.arity:
        raise InvalidInputError(f"expected {g.arity} inner functors, got {len(fs)}")
    for f, s in zip(fs, g.sources):
        if f.target != s:
            raise InvalidInputError("inner functor lands in the wrong category")
    c = g.target
    sources = [s for f in fs for s in f.sources]
    cuts = np.cumsum([0] + [f.arity for f in fs]).tolist()

    def split(t):
        return [tuple(t[cuts[j]:cuts[j + 1]]) for j in range(len(fs))]

    obj, mor = {}, {}
    for x in itertools.product(*[range(s.nobj) for s in sources]):
        obj[x] = g.obj[tuple(f.obj[p] for f, p in zip(fs, split(x)))]
    for u in itertools.product(*[range(s.nmor) for s in sources]):
        mor[u] = g.mor[tuple(f.mor[p] for f, p in zip(fs, split(u)))]
    deltas = []
    for j, f in enumerate(fs):
        for i in range(f.arity):
            d = {}
            s = cuts[j] + i
            for x in obj:
                parts = split(x)
                ys = tuple(h.obj[p] for h, p in zip(fs, parts))
                for y in range(sources[s].nobj):
                    outer = g.deltas[j][(ys, f.obj[_replace(parts[j], i, y)])]
                    inner = f.deltas[i][(parts[j], y)]
                    lift = g.mor[tuple(inner if jj == j else int(g.sources[jj].ident[yy])
                                       for jj, yy in enumerate(ys))]
                    d[(x, y)] = c.compose(lift, outer)
            deltas.append(d)
    return MultilinearFunctor(sources, c, obj, mor, deltas)
