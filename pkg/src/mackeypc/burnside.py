"""The Burnside category: group-completed iso classes of spans, the Burnside ring and marks.

The monoid of iso classes of spans ``A -> B`` is free commutative on the
transitive classes, so its group completion is the free abelian group on
``transitive_span_basis(A, B)`` and morphisms are plain integer vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .abgroups import AbGroup
from .errors import InvalidInputError
from .groups import Group, conjugacy_classes_of_subgroups
from .gsets import GSet, class_orbit, fixed_points, point_gset
from .spans import (Span, TransitiveSpanKey, canonicalize_span, compose_spans, identity_span,
                    representative_span, transitive_span_basis)


@dataclass(frozen=True)
class BurnsideElement:
    source: GSet
    target: GSet
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) != len(self.basis):
            raise InvalidInputError(
                f"expected {len(self.basis)} coefficients, got {len(coeffs)}")

    @property
    def basis(self) -> list[TransitiveSpanKey]:
        return transitive_span_basis(self.source, self.target)

    def _check(self, other: "BurnsideElement"):
        if self.source != other.source or self.target != other.target:
            raise InvalidInputError("Burnside elements between different objects")

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._check(other)
        return BurnsideElement(self.source, self.target,
                               tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "BurnsideElement":
        return BurnsideElement(self.source, self.target, tuple(-a for a in self.coefficients))

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "BurnsideElement":
        return BurnsideElement(self.source, self.target, tuple(int(k) * a for a in self.coefficients))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def terms(self) -> list[tuple[int, TransitiveSpanKey]]:
        return [(c, k) for c, k in zip(self.coefficients, self.basis) if c]


def zero_element(a: GSet, b: GSet) -> BurnsideElement:
    return BurnsideElement(a, b, (0,) * len(transitive_span_basis(a, b)))


def basis_element(a: GSet, b: GSet, k: int) -> BurnsideElement:
    n = len(transitive_span_basis(a, b))
    return BurnsideElement(a, b, tuple(int(i == k) for i in range(n)))


def span_to_element(s: Span) -> BurnsideElement:
    basis = transitive_span_basis(s.source, s.target)
    pos = {k: i for i, k in enumerate(basis)}
    coeffs = [0] * len(basis)
    for key in canonicalize_span(s).keys:
        coeffs[pos[key]] += 1
    return BurnsideElement(s.source, s.target, tuple(coeffs))


def identity_element(a: GSet) -> BurnsideElement:
    return span_to_element(identity_span(a))


@lru_cache(maxsize=1024)
def _structure_constants(a: GSet, b: GSet, e: GSet) -> np.ndarray:
    """``C[i, j]`` = coefficients of ``x_i o y_j`` for basis spans ``y_j: a -> b``, ``x_i: b -> e``."""
    left = transitive_span_basis(b, e)
    right = transitive_span_basis(a, b)
    out = np.zeros((len(left), len(right), len(transitive_span_basis(a, e))), dtype=np.int64)
    for j, ky in enumerate(right):
        sy = representative_span(a, b, ky)
        for i, kx in enumerate(left):
            sx = representative_span(b, e, kx)
            out[i, j] = span_to_element(compose_spans(sy, sx)).coefficients
    out.setflags(write=False)
    return out


def compose_elements(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """``x o y`` for ``y: A -> B`` and ``x: B -> E``, extended bilinearly."""
    if y.target != x.source:
        raise InvalidInputError("Burnside elements are not composable")
    c = _structure_constants(y.source, y.target, x.target)
    coeffs = np.einsum("i,j,ijk->k", np.array(x.coefficients, dtype=np.int64),
                       np.array(y.coefficients, dtype=np.int64), c) if c.size else \
        np.zeros(len(transitive_span_basis(y.source, x.target)), dtype=np.int64)
    return BurnsideElement(y.source, x.target, tuple(int(v) for v in coeffs))


# Burnside ring and table of marks ------------------------------------------------

@dataclass(frozen=True)
class BurnsideRing:
    """A(G) on the basis [G/H_i] in the global subgroup-class order."""

    group: Group
    structure: np.ndarray  # structure[i, j, k]: coefficient of [G/H_k] in [G/H_i][G/H_j]

    @property
    def rank(self) -> int:
        return self.structure.shape[0]

    @property
    def unit(self) -> np.ndarray:
        v = np.zeros(self.rank, dtype=np.int64)
        v[-1] = 1
        return v

    def multiply(self, x: Sequence[int], y: Sequence[int]) -> np.ndarray:
        return np.einsum("i,j,ijk->k", np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64),
                         self.structure)


def _point_key_order(g: Group) -> list[int]:
    """Position in ``transitive_span_basis(pt, pt)`` of each subgroup class."""
    pt = point_gset(g)
    basis = transitive_span_basis(pt, pt)
    return [next(i for i, k in enumerate(basis) if k.L == c.index)
            for c in conjugacy_classes_of_subgroups(g)]


def burnside_ring(g: Group) -> BurnsideRing:
    pt = point_gset(g)
    order = _point_key_order(g)
    c = _structure_constants(pt, pt, pt)
    # basis of A(G) = B(pt, pt) is indexed by classes; reorder to the class order
    s = c[np.ix_(order, order, order)]
    return BurnsideRing(g, s)


def ring_element(g: Group, coefficients: Sequence[int]) -> BurnsideElement:
    """Element of B(pt, pt) from coefficients over the subgroup classes."""
    pt = point_gset(g)
    order = _point_key_order(g)
    coeffs = [0] * len(order)
    for ci, c in enumerate(coefficients):
        coeffs[order[ci]] = int(c)
    return BurnsideElement(pt, pt, tuple(coeffs))


def ring_coefficients(x: BurnsideElement) -> list[int]:
    order = _point_key_order(x.source.group)
    return [x.coefficients[order[ci]] for ci in range(len(order))]


def table_of_marks(g: Group) -> np.ndarray:
    """``M[i, j] = |(G/H_i)^{H_j}|`` over the class order (increasing subgroup order)."""
    classes = conjugacy_classes_of_subgroups(g)
    m = np.zeros((len(classes), len(classes)), dtype=np.int64)
    for i, ci in enumerate(classes):
        orbit = class_orbit(g, ci.index)
        for j, cj in enumerate(classes):
            m[i, j] = fixed_points(orbit, cj.representative)
    return m


def mark_hom(x) -> np.ndarray:
    """Mark vector of an element of A(G) (a ``BurnsideElement`` on the point)."""
    g = x.source.group
    pt = point_gset(g)
    if x.source != pt or x.target != pt:
        raise InvalidInputError("marks are defined on B(pt, pt)")
    return np.asarray(ring_coefficients(x), dtype=np.int64) @ table_of_marks(g)


# pi_0 change of enrichment ---------------------------------------------------------

@dataclass(frozen=True)
class HomGroup:
    """The abelian group B_G(A, B) with its basis and the quotient from spans."""

    source: GSet
    target: GSet
    basis: tuple[TransitiveSpanKey, ...]
    group: AbGroup

    @property
    def rank(self) -> int:
        return len(self.basis)

    def project(self, s: Span) -> BurnsideElement:
        if s.source != self.source or s.target != self.target:
            raise InvalidInputError("span has the wrong end objects")
        return span_to_element(s)

    def representative(self, k: int) -> Span:
        return representative_span(self.source, self.target, self.basis[k])


def pi0_enrichment(a: GSet, b: GSet) -> HomGroup:
    basis = tuple(transitive_span_basis(a, b))
    return HomGroup(a, b, basis, AbGroup.free(len(basis)))
