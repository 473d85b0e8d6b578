"""Finitely generated abelian groups given by generators and integer relations.

Elements are integer row vectors in the generators and homomorphisms are
integer matrices acting on the right (``x -> x @ M``).  Equality is decided
modulo the relation lattice through a Smith normal form ``D = U R V``: a vector
``x`` lies in the row span of ``R`` exactly when ``x V`` is divisible by the
diagonal of ``D`` coordinatewise.
"""

from __future__ import annotations

import itertools
import math
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .errors import InvalidInputError, ResourceCapError


def _int_matrix(rows, ncols: int) -> np.ndarray:
    arr = np.array(rows, dtype=object)
    if arr.size == 0:
        return np.zeros((0, ncols), dtype=object)
    arr = arr.reshape(-1, ncols)
    return np.vectorize(int, otypes=[object])(arr)


def smith(m: np.ndarray) -> tuple[list[int], np.ndarray, np.ndarray]:
    """Smith normal form of an r x n integer matrix.

    Returns the n diagonal entries (zero-padded) and unimodular ``V``, ``Vinv``
    (n x n) with the row span of ``m @ V`` equal to the diagonal lattice.
    """
    r, n = m.shape
    if r == 0 or not np.any(m != 0):
        eye = np.identity(n, dtype=np.int64).astype(object)
        return [0] * n, eye, eye.copy()
    s, _, v = smith_normal_decomp(Matrix(m.tolist()), domain=ZZ)
    diag = [abs(int(s[i, i])) for i in range(min(r, n))] + [0] * max(0, n - r)
    V = np.array(v.tolist(), dtype=object)
    Vinv = np.array(v.inv().tolist(), dtype=object)
    return diag, V, Vinv


class AbGroup:
    """``Z^ngens / rowspan(relations)``."""

    def __init__(self, ngens: int, relations: Sequence[Sequence[int]] | np.ndarray = ()):
        self.ngens = int(ngens)
        self.relations = _int_matrix(relations, self.ngens)

    @classmethod
    def free(cls, rank: int) -> "AbGroup":
        return cls(rank)

    @classmethod
    def cyclic(cls, d: int) -> "AbGroup":
        return cls(1, [[d]])

    @classmethod
    def from_invariants(cls, torsion: Sequence[int], free_rank: int = 0) -> "AbGroup":
        n = len(torsion) + free_rank
        rows = []
        for i, d in enumerate(torsion):
            row = [0] * n
            row[i] = d
            rows.append(row)
        return cls(n, rows)

    @classmethod
    def zero(cls) -> "AbGroup":
        return cls(0)

    def __repr__(self):
        return f"AbGroup({self.describe()})"

    def __eq__(self, other):
        return (isinstance(other, AbGroup) and self.ngens == other.ngens
                and self.relations.shape == other.relations.shape
                and bool(np.all(self.relations == other.relations)))

    def __hash__(self):
        return hash((self.ngens, tuple(map(tuple, self.relations.tolist()))))

    @cached_property
    def _snf(self):
        return smith(self.relations)

    @property
    def diagonal(self) -> list[int]:
        return self._snf[0]

    @cached_property
    def nontrivial(self) -> list[int]:
        """Indices of Smith coordinates that are not forced to zero (diagonal entry != 1)."""
        return [i for i, d in enumerate(self.diagonal) if d != 1]

    def invariants(self) -> tuple[tuple[int, ...], int]:
        """(torsion coefficients > 1 in divisibility order, free rank)."""
        tors = tuple(sorted(d for d in self.diagonal if d > 1))
        return tors, sum(1 for d in self.diagonal if d == 0)

    def describe(self) -> str:
        tors, rank = self.invariants()
        parts = [f"Z/{d}" for d in tors] + ["Z"] * rank
        return " + ".join(parts) if parts else "0"

    @property
    def is_finite(self) -> bool:
        return self.invariants()[1] == 0

    @property
    def order(self) -> float | int:
        tors, rank = self.invariants()
        return math.inf if rank else math.prod(tors)

    def vector(self, x) -> np.ndarray:
        v = np.array(x, dtype=object).reshape(self.ngens)
        return v

    def coordinates(self, x) -> tuple[int, ...]:
        """Canonical Smith coordinates of ``x`` (nontrivial coordinates only)."""
        y = self.vector(x).dot(self._snf[1]) if self.ngens else np.zeros(0, dtype=object)
        out = []
        for i in self.nontrivial:
            d = self.diagonal[i]
            out.append(int(y[i]) % d if d else int(y[i]))
        return tuple(out)

    def from_coordinates(self, coords: Sequence[int]) -> np.ndarray:
        vinv = self._snf[2]
        x = np.zeros(self.ngens, dtype=object)
        for c, i in zip(coords, self.nontrivial):
            x = x + int(c) * vinv[i]
        return x

    def is_zero(self, x) -> bool:
        return all(c == 0 for c in self.coordinates(x))

    def equal(self, x, y) -> bool:
        return self.is_zero(self.vector(x) - self.vector(y))

    def generator(self, i: int) -> np.ndarray:
        v = np.zeros(self.ngens, dtype=object)
        v[i] = 1
        return v

    def elements(self, limit: int = 4096) -> Iterator[np.ndarray]:
        """All elements (finite groups only), in lexicographic order of Smith coordinates."""
        if not self.is_finite:
            raise InvalidInputError("cannot enumerate an infinite group")
        if self.order > limit:
            raise ResourceCapError("group-elements", limit)
        ranges = [range(self.diagonal[i]) for i in self.nontrivial]
        for coords in itertools.product(*ranges):
            yield self.from_coordinates(coords)

    def element_order(self, x) -> int | float:
        coords = self.coordinates(x)
        out = 1
        for c, i in zip(coords, self.nontrivial):
            d = self.diagonal[i]
            if d == 0:
                if c != 0:
                    return math.inf
            else:
                out = math.lcm(out, d // math.gcd(d, c))
        return out


def direct_sum(groups: Sequence[AbGroup]) -> AbGroup:
    n = sum(g.ngens for g in groups)
    rows = []
    offset = 0
    for g in groups:
        for r in g.relations:
            row = [0] * n
            row[offset:offset + g.ngens] = [int(v) for v in r]
            rows.append(row)
        offset += g.ngens
    return AbGroup(n, rows)


class AbHom:
    """Homomorphism ``source -> target`` given by a ``source.ngens x target.ngens`` matrix."""

    def __init__(self, source: AbGroup, target: AbGroup, matrix, check: bool = True):
        self.source = source
        self.target = target
        m = np.array(matrix, dtype=object)
        if m.size == 0:
            m = np.zeros((source.ngens, target.ngens), dtype=object)
        m = m.reshape(source.ngens, target.ngens)
        self.matrix = np.vectorize(int, otypes=[object])(m) if m.size else m
        if check:
            for r in source.relations:
                if not target.is_zero(np.asarray(r, dtype=object).dot(self.matrix)):
                    raise InvalidInputError("matrix does not respect the source relations")

    @classmethod
    def identity(cls, g: AbGroup) -> "AbHom":
        return cls(g, g, np.identity(g.ngens, dtype=np.int64), check=False)

    @classmethod
    def zero(cls, source: AbGroup, target: AbGroup) -> "AbHom":
        return cls(source, target, np.zeros((source.ngens, target.ngens), dtype=np.int64), check=False)

    def __call__(self, x) -> np.ndarray:
        return self.source.vector(x).dot(self.matrix) if self.source.ngens else np.zeros(self.target.ngens, dtype=object)

    def then(self, other: "AbHom") -> "AbHom":
        """``other o self``."""
        return AbHom(self.source, other.target, _mm(self.matrix, other.matrix), check=False)

    def __add__(self, other: "AbHom") -> "AbHom":
        return AbHom(self.source, self.target, self.matrix + other.matrix, check=False)

    def __sub__(self, other: "AbHom") -> "AbHom":
        return AbHom(self.source, self.target, self.matrix - other.matrix, check=False)

    def __mul__(self, k: int) -> "AbHom":
        return AbHom(self.source, self.target, self.matrix * int(k), check=False)

    __rmul__ = __mul__

    def equals(self, other: "AbHom") -> bool:
        """Equality as homomorphisms, i.e. modulo the target relations."""
        diff = self.matrix - other.matrix
        return all(self.target.is_zero(row) for row in diff)

    def is_surjective(self) -> bool:
        t = self.target
        stacked = np.vstack([self.matrix.reshape(-1, t.ngens), t.relations.reshape(-1, t.ngens)])
        if t.ngens == 0:
            return True
        diag, _, _ = smith(stacked)
        return all(d == 1 for d in diag)

    def is_isomorphism(self) -> bool:
        # surjections between isomorphic finitely generated abelian groups are isomorphisms
        return self.source.invariants() == self.target.invariants() and self.is_surjective()

    def __repr__(self):
        return f"AbHom({self.source.describe()} -> {self.target.describe()}, {self.matrix.tolist()})"


def _mm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    return a.dot(b)


def block_hom(source: AbGroup, target: AbGroup, blocks: dict[tuple[int, int], np.ndarray],
              source_sizes: Sequence[int], target_sizes: Sequence[int]) -> AbHom:
    """Assemble a homomorphism between direct sums from blocks keyed (source part, target part)."""
    m = np.zeros((sum(source_sizes), sum(target_sizes)), dtype=object)
    so = np.concatenate([[0], np.cumsum(source_sizes)]).astype(int)
    to = np.concatenate([[0], np.cumsum(target_sizes)]).astype(int)
    for (i, j), blk in blocks.items():
        m[so[i]:so[i + 1], to[j]:to[j + 1]] += blk
    return AbHom(source, target, m, check=False)


AbGroupPresentation = AbGroup
