import pytest
from hypothesis import given, strategies as st

import oracles
from builders import random_gset, relabel
from mackeypc.catalog import group
from mackeypc.errors import InvalidInputError
from mackeypc.groups import class_index, conjugacy_classes_of_subgroups, subgroups
from mackeypc.gsets import (GMap, GSet, canonical_form, class_orbit, disjoint_union, empty_gset, fixed_points,
                            identity_map, is_bijective, iso_gsets, orbit_gset, orbits, point_gset, product,
                            stabilizer, trivial_gset)

GROUP_NAMES = st.sampled_from(["C2", "C3", "K4", "S3", "D4", "Q8"])


def _classes(g):
    return conjugacy_classes_of_subgroups(g)


def test_orbit_gset_examples():
    s3 = group("S3")
    assert orbit_gset(s3, s3.whole).n == 1
    assert orbit_gset(s3, s3.trivial).n == 6
    assert orbit_gset(s3, _classes(s3)[1].representative).n == 3


def test_orbit_gset_is_translation_on_cosets(any_group):
    g = any_group
    for h in subgroups(g):
        a = orbit_gset(g, h)
        cos = sorted(oracles.left_cosets(g.elements, h.perms), key=min)
        assert a.n == len(cos)
        # coset number p is the p-th coset in order of least representative
        for x in range(g.order):
            p = g.elements[x]
            for i, c in enumerate(cos):
                image = frozenset(oracles.pmul(p, z) for z in c)
                assert a.act(x, i + 1) == cos.index(image) + 1


def test_invalid_action_rejected():
    s3 = group("S3")
    with pytest.raises(InvalidInputError):
        GSet(s3, 2, ((2, 1), (1, 2)))  # order-3 generator acting with order 2
    with pytest.raises(InvalidInputError):
        GSet(s3, 2, ((1, 1), (1, 2)))
    with pytest.raises(InvalidInputError):
        GSet(s3, 1, ((1,),))


def test_disjoint_union_examples():
    c2 = group("C2")
    reg = class_orbit(c2, 0)
    pt = point_gset(c2)
    a = disjoint_union(reg, pt)
    assert a.n == 3 and orbits(a) == [[1, 2], [3]]
    assert disjoint_union(reg, empty_gset(c2)) == reg
    assert disjoint_union(empty_gset(c2), reg) == reg


@given(GROUP_NAMES, st.randoms(use_true_random=False))
def test_disjoint_union_strictly_associative(name, rng):
    g = group(name)
    a, b, c = (random_gset(g, rng) for _ in range(3))
    assert disjoint_union(disjoint_union(a, b), c) == disjoint_union(a, disjoint_union(b, c))


def test_product_examples():
    c2 = group("C2")
    reg, pt = class_orbit(c2, 0), point_gset(c2)
    assert product(reg, pt) == reg
    assert product(pt, pt) == pt
    p = product(reg, reg)
    assert p.n == 4 and [len(o) for o in orbits(p)] == [2, 2]


@given(GROUP_NAMES, st.randoms(use_true_random=False))
def test_product_indexing(name, rng):
    g = group(name)
    a, b = random_gset(g, rng), random_gset(g, rng)
    p = product(a, b)
    for x in range(g.order):
        for i in range(1, a.n + 1):
            for j in range(1, b.n + 1):
                assert p.act(x, (i - 1) * b.n + j) == (a.act(x, i) - 1) * b.n + b.act(x, j)


def test_orbits_examples():
    s3 = group("S3")
    assert orbits(trivial_gset(s3, 3)) == [[1], [2], [3]]
    assert orbits(class_orbit(s3, 0)) == [list(range(1, 7))]
    a = disjoint_union(class_orbit(s3, 1), point_gset(s3))
    assert [len(o) for o in orbits(a)] == [3, 1]


def test_stabilizer_examples():
    s3 = group("S3")
    assert stabilizer(point_gset(s3), 1).elements == s3.whole.elements
    assert stabilizer(class_orbit(s3, 0), 4).order == 1
    c2_class = _classes(s3)[1]
    for p in range(1, 4):
        st_ = stabilizer(class_orbit(s3, 1), p)
        assert any(st_.elements == m.elements for m in c2_class.members)
    with pytest.raises(InvalidInputError):
        stabilizer(point_gset(s3), 2)


def test_fixed_points_match_marks_oracle(any_group):
    g = any_group
    subs = subgroups(g)
    for h in subs:
        a = orbit_gset(g, h)
        for k in subs:
            assert fixed_points(a, k) == oracles.mark(g.elements, h.perms, k.perms)


def test_fixed_point_examples():
    s3 = group("S3")
    cl = _classes(s3)
    assert fixed_points(class_orbit(s3, 1), s3.trivial) == 3
    assert fixed_points(class_orbit(s3, 0), cl[1].representative) == 0
    assert fixed_points(class_orbit(s3, 2), cl[1].representative) == 0


@given(GROUP_NAMES, st.randoms(use_true_random=False))
def test_burnside_orbit_counting(name, rng):
    g = group(name)
    a = random_gset(g, rng, max_orbits=3)
    fix = sum(sum(1 for p in range(1, a.n + 1) if a.act(x, p) == p) for x in range(g.order))
    assert len(orbits(a)) * g.order == fix


def test_canonical_form_examples():
    s3 = group("S3")
    assert canonical_form(empty_gset(s3)) == ()
    assert canonical_form(class_orbit(s3, 0)) == (0,)
    assert canonical_form(disjoint_union(class_orbit(s3, 1), class_orbit(s3, 1))) == (1, 1)


@given(GROUP_NAMES, st.randoms(use_true_random=False))
def test_iso_decision_matches_canonical_form(name, rng):
    g = group(name)
    a, b = random_gset(g, rng, 3), random_gset(g, rng, 3)
    if rng.random() < 0.5:
        b = relabel(a, rng)[0]
    f = iso_gsets(a, b)
    assert (f is not None) == (canonical_form(a) == canonical_form(b))
    if f is not None:
        assert is_bijective(f)
        GMap(f.source, f.target, f.images)  # equivariance re-checked by the constructor


def test_iso_examples():
    s3 = group("S3")
    a = class_orbit(s3, 1)
    assert iso_gsets(a, a) is not None
    assert iso_gsets(a, class_orbit(s3, 2)) is None
    # G/C2 built from a different conjugate of C2
    other = [m for m in _classes(s3)[1].members if m.elements != _classes(s3)[1].representative.elements][0]
    assert class_index(other) == 1
    assert iso_gsets(a, orbit_gset(s3, other)) is not None


def test_gmap_equivariance_enforced():
    c2 = group("C2")
    reg = class_orbit(c2, 0)
    with pytest.raises(InvalidInputError):
        GMap(point_gset(c2), reg, (1,))
    assert GMap(reg, point_gset(c2), (1, 1)).images == (1, 1)
    assert identity_map(reg).is_identity
