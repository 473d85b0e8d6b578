import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mackeypc.catalog import PERMCATS, permcat, saturating_monoid
from mackeypc.closed import enumerate_lax_functors
from mackeypc.errors import InvalidInputError
from mackeypc.permcat import (CommMonoid, FinPermCat, LaxFunctor, compose_lax, discrete_permcat,
                              group_morphism_permcat, identity_lax, monoid_homomorphisms, validate_lax,
                              validate_permcat, zero_lax)

SMALL = ["discrete(0)", "discrete(Z/2)", "discrete(Z/3)", "discrete(N<=2)", "group_morphism(0,Z/2)",
         "group_morphism(Z/2,Z/2)", "twisted(Z/2,Z/2)"]


def _brute_monoid_homs(m: CommMonoid, n: CommMonoid) -> int:
    count = 0
    for f in itertools.product(range(n.n), repeat=m.n):
        if f[0] == 0 and all(f[m.add(a, b)] == n.add(f[a], f[b]) for a in range(m.n) for b in range(m.n)):
            count += 1
    return count


def test_monoid_rejects_bad_tables():
    with pytest.raises(InvalidInputError):
        CommMonoid([[0, 1], [1, 1], [0, 0]])
    with pytest.raises(InvalidInputError):
        CommMonoid([[1, 0], [0, 1]])  # unit is not 0
    with pytest.raises(InvalidInputError):
        CommMonoid([[0, 1, 2], [1, 2, 0], [2, 1, 0]])  # not commutative


def test_monoid_examples():
    assert CommMonoid.cyclic(3).add(2, 2) == 1
    assert saturating_monoid(3).add(2, 1) == 2
    assert CommMonoid.trivial().n == 1


@pytest.mark.parametrize("name", list(PERMCATS))
def test_catalog_is_valid(name):
    report = validate_permcat(permcat(name))
    assert report.ok, report.failures[:3]
    assert report.checks > 0


def test_broken_twist_is_reported():
    # a constant twist breaks the unit law of the symmetry
    c = group_morphism_permcat(CommMonoid.cyclic(2), 2, twist=lambda a, b: (1,))
    report = validate_permcat(c)
    assert not report.ok
    assert "symmetry unit" in report.axioms_failed()


def test_broken_sum_is_reported():
    c = permcat("group_morphism(Z/2,Z/2)")
    msum = c.msum.copy()
    msum[1, 1] = 1  # the nonzero endomorphism of 0 added to itself should be the identity
    bad = FinPermCat(c.add, c.src, c.tgt, c.ident, dict(c.comp), msum, c.gamma)
    assert not validate_permcat(bad).ok


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (2, 3), (3, 3), (4, 2), (6, 4)])
def test_monoid_homs_match_brute_force(m, n):
    a, b = CommMonoid.cyclic(m), CommMonoid.cyclic(n)
    assert len(monoid_homomorphisms(a, b)) == _brute_monoid_homs(a, b) == math.gcd(m, n)


def test_saturating_monoid_homs():
    a = saturating_monoid(3)
    for b in (CommMonoid.cyclic(2), saturating_monoid(3), CommMonoid.cyclic(3)):
        assert len(monoid_homomorphisms(a, b)) == _brute_monoid_homs(a, b)


@pytest.mark.parametrize("src,tgt", [("discrete(Z/2)", "discrete(Z/2)"), ("discrete(N<=2)", "discrete(Z/2)"),
                                     ("discrete(Z/3)", "discrete(Z/3)"), ("discrete(Z/2)", "discrete(Z/3)")])
def test_lax_functors_between_discrete_are_monoid_homs(src, tgt):
    a, b = permcat(src), permcat(tgt)
    monoid = lambda c: CommMonoid(c.add)  # noqa: E731
    assert len(enumerate_lax_functors(a, b)) == _brute_monoid_homs(monoid(a), monoid(b))


def test_lax_functors_between_morphism_groups():
    # endomorphisms of the unit: group homomorphisms Z/2 -> Z/2
    c = permcat("group_morphism(0,Z/2)")
    fs = enumerate_lax_functors(c, c)
    assert len(fs) == 2
    assert fs[0] == zero_lax(c, c)
    assert identity_lax(c) in fs


@pytest.mark.parametrize("name", SMALL)
def test_enumerated_functors_validate(name):
    c = permcat(name)
    for f in enumerate_lax_functors(c, c):
        assert validate_lax(f).ok
    assert validate_lax(identity_lax(c)).ok
    assert validate_lax(zero_lax(c, c)).ok


def test_invalid_functor_is_reported():
    c = permcat("discrete(Z/3)")
    f = LaxFunctor(c, c, [0, 1, 1], [0, 1, 1], [[0, 1, 1], [1, 1, 0], [1, 0, 1]])
    report = validate_lax(f)
    assert not report.ok
    assert report.failures[0].to_json()["axiom"]
    with pytest.raises(InvalidInputError):
        LaxFunctor(c, c, [0, 1], [0, 1, 2], [[0] * 3] * 3)


@given(st.sampled_from(SMALL), st.data())
def test_composition_of_lax_functors(name, data):
    c = permcat(name)
    fs = enumerate_lax_functors(c, c)
    f, g, h = (data.draw(st.sampled_from(fs)) for _ in range(3))
    gf = compose_lax(g, f)
    assert validate_lax(gf).ok
    assert compose_lax(h, gf) == compose_lax(compose_lax(h, g), f)
    assert compose_lax(identity_lax(c), f) == f == compose_lax(f, identity_lax(c))


def test_compose_rejects_mismatch():
    a, b = permcat("discrete(Z/2)"), permcat("discrete(Z/3)")
    with pytest.raises(InvalidInputError):
        compose_lax(identity_lax(a), identity_lax(b))


def test_discrete_tables():
    c = discrete_permcat(CommMonoid.cyclic(2))
    assert c.is_discrete and c.nobj == c.nmor == 2
    g = permcat("group_morphism(Z/2,Z/3)")
    assert g.nobj == 2 and g.nmor == 6
    assert sorted(g.hom(1, 1)) == [3, 4, 5]
    assert np.array_equal(g.src, g.tgt)
