import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from builders import random_gset, random_span
from mackeypc.burnside import (BurnsideElement, basis_element, burnside_ring, compose_elements, identity_element,
                               mark_hom, pi0_enrichment, ring_element, span_to_element, table_of_marks,
                               zero_element)
from mackeypc.catalog import group
from mackeypc.errors import InvalidInputError
from mackeypc.groups import conjugacy_classes_of_subgroups
from mackeypc.gsets import GMap, class_orbit, disjoint_union, empty_gset, point_gset
from mackeypc.spans import compose_spans, disjoint_union_spans, identity_span, make_span, zero_span

GROUP_NAMES = st.sampled_from(["C2", "C3", "S3", "D4"])


def test_span_to_element_examples():
    c2 = group("C2")
    reg, pt = class_orbit(c2, 0), point_gset(c2)
    assert span_to_element(zero_span(pt, pt)).is_zero()
    assert span_to_element(identity_span(pt)).coefficients == (0, 1)
    mid = disjoint_union(reg, reg)
    s = make_span(GMap(mid, pt, (1,) * 4), GMap(mid, pt, (1,) * 4))
    assert span_to_element(s).coefficients == (2, 0)


def test_arithmetic():
    c2 = group("C2")
    pt = point_gset(c2)
    x = basis_element(pt, pt, 0)
    y = basis_element(pt, pt, 1)
    assert (x + zero_element(pt, pt)) == x
    assert (x - x).is_zero()
    assert (x + y).coefficients == (1, 1)
    assert (-x).coefficients == (-1, 0)
    with pytest.raises(InvalidInputError):
        x + basis_element(pt, class_orbit(c2, 0), 0)


def test_burnside_ring_examples():
    assert burnside_ring(group("C1")).structure.tolist() == [[[1]]]
    r = burnside_ring(group("C2"))
    assert r.unit.tolist() == [0, 1]
    assert r.multiply([1, 0], [1, 0]).tolist() == [2, 0]
    assert r.multiply([0, 1], [1, 0]).tolist() == [1, 0]
    s3 = burnside_ring(group("S3"))
    assert s3.multiply([1, 0, 0, 0], [0, 0, 1, 0]).tolist() == [2, 0, 0, 0]


def test_ring_products_match_orbit_oracle(any_group):
    g = any_group
    classes = conjugacy_classes_of_subgroups(g)
    members = [{frozenset(m.perms) for m in c.members} for c in classes]
    reps = [c.representative.perms for c in classes]
    ring = burnside_ring(g)
    for i in range(len(classes)):
        for j in range(len(classes)):
            # marks of G/H_i x G/H_j are products of marks
            marks = [oracles.mark(g.elements, reps[i], reps[k]) * oracles.mark(g.elements, reps[j], reps[k])
                     for k in range(len(classes))]
            expected = oracles.orbit_decomposition_marks(g.elements, members, marks)
            assert ring.structure[i, j].tolist() == expected


def test_ring_commutative_unital(any_group):
    r = burnside_ring(any_group)
    n = r.rank
    assert np.array_equal(r.structure, r.structure.transpose(1, 0, 2))
    for i in range(n):
        e = np.eye(n, dtype=np.int64)[i]
        assert r.multiply(r.unit, e).tolist() == e.tolist()


def test_table_of_marks_examples():
    assert table_of_marks(group("C1")).tolist() == [[1]]
    assert table_of_marks(group("C2")).tolist() == [[2, 0], [1, 1]]
    m = table_of_marks(group("S3"))
    assert m[:, 0].tolist() == [6, 3, 2, 1]
    assert m.tolist() == [[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]]


def test_marks_lower_triangular(any_group):
    m = table_of_marks(any_group)
    assert np.array_equal(m, np.tril(m))
    assert all(m[i, i] > 0 for i in range(len(m)))


def test_mark_hom_examples():
    c2 = group("C2")
    assert mark_hom(ring_element(c2, [0, 1])).tolist() == [1, 1]
    assert mark_hom(ring_element(c2, [0, 0])).tolist() == [0, 0]
    assert mark_hom(ring_element(c2, [2, -1])).tolist() == [3, -1]


@given(st.sampled_from(["C2", "C3", "K4", "S3", "D4", "Q8"]), st.data())
def test_mark_hom_multiplicative(name, data):
    g = group(name)
    n = len(conjugacy_classes_of_subgroups(g))
    coeff = st.lists(st.integers(-3, 3), min_size=n, max_size=n)
    x, y = data.draw(coeff), data.draw(coeff)
    prod = burnside_ring(g).multiply(x, y)
    assert mark_hom(ring_element(g, prod)).tolist() == \
        (mark_hom(ring_element(g, x)) * mark_hom(ring_element(g, y))).tolist()


def test_compose_elements_examples():
    c2 = group("C2")
    pt = point_gset(c2)
    e = basis_element(pt, pt, 0)  # [C2/e]
    assert compose_elements(e, e).coefficients == (2, 0)
    assert compose_elements(e, identity_element(pt)) == e
    assert compose_elements(zero_element(pt, pt), e).is_zero()


@given(GROUP_NAMES, st.randoms(use_true_random=False))
def test_compose_elements_matches_span_composition(name, rng):
    g = group(name)
    a, b, e = (random_gset(g, rng) for _ in range(3))
    s, t = random_span(a, b, rng), random_span(b, e, rng)
    assert compose_elements(span_to_element(t), span_to_element(s)) == span_to_element(compose_spans(s, t))


@given(GROUP_NAMES, st.randoms(use_true_random=False))
def test_compose_elements_bilinear_associative(name, rng):
    g = group(name)
    a, b, c, d = (random_gset(g, rng) for _ in range(4))
    x1, x2 = (span_to_element(random_span(a, b, rng)) for _ in range(2))
    y = span_to_element(random_span(b, c, rng))
    z = span_to_element(random_span(c, d, rng))
    assert compose_elements(y, x1 + x2) == compose_elements(y, x1) + compose_elements(y, x2)
    assert compose_elements(z, compose_elements(y, x1)) == compose_elements(compose_elements(z, y), x1)
    assert compose_elements(identity_element(b), x1) == x1 == compose_elements(x1, identity_element(a))


@given(GROUP_NAMES, st.randoms(use_true_random=False))
def test_group_completion_respects_sum(name, rng):
    g = group(name)
    a, b = random_gset(g, rng), random_gset(g, rng)
    s, t = random_span(a, b, rng), random_span(a, b, rng)
    assert span_to_element(disjoint_union_spans(s, t)) == span_to_element(s) + span_to_element(t)


def test_pi0_enrichment_examples():
    c2, s3 = group("C2"), group("S3")
    pt = point_gset(c2)
    assert pi0_enrichment(empty_gset(c2), pt).group.describe() == "0"
    assert pi0_enrichment(pt, pt).group.describe() == "Z + Z"
    o = class_orbit(s3, 1)
    h = pi0_enrichment(o, o)
    assert h.rank == 3  # two double cosets, with stabilizers C2 and e, give 2 + 1 classes
    assert isinstance(h.project(identity_span(o)), BurnsideElement)
