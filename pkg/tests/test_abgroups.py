import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mackeypc.abgroups import AbGroup, AbHom, direct_sum
from mackeypc.errors import InvalidInputError, ResourceCapError


def _det(m):
    # Bareiss fraction-free elimination
    a = [list(map(int, r)) for r in m]
    n, sign, prev = len(a), 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


square = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n))


def test_describe_examples():
    assert AbGroup.zero().describe() == "0"
    assert AbGroup.free(2).describe() == "Z + Z"
    assert AbGroup.cyclic(6).describe() == "Z/6"
    assert AbGroup(2, [[2, 0], [0, 3]]).describe() == "Z/6"
    assert AbGroup(2, [[2, 0], [0, 4]]).describe() == "Z/2 + Z/4"
    assert AbGroup(2, [[1, 1]]).describe() == "Z"
    assert AbGroup.cyclic(1).describe() == "0"


@given(square)
def test_order_matches_determinant(rows):
    g = AbGroup(len(rows), rows)
    d = abs(_det(rows))
    if d == 0:
        assert not g.is_finite
    else:
        assert g.order == d
        tors, _ = g.invariants()
        assert all(b % a == 0 for a, b in zip(tors, tors[1:]))


@given(square)
def test_element_enumeration(rows):
    g = AbGroup(len(rows), rows)
    if not g.is_finite or g.order > 200:
        return
    els = list(g.elements())
    assert len(els) == g.order
    assert len({g.coordinates(x) for x in els}) == g.order
    # Lagrange: element orders divide the group order
    assert all(g.order % g.element_order(x) == 0 for x in els)


def test_equality_mod_relations():
    g = AbGroup(2, [[2, 0], [0, 3]])
    assert g.equal([2, 3], [0, 0])
    assert not g.equal([1, 0], [0, 0])
    assert g.element_order([1, 1]) == 6
    assert AbGroup.free(1).element_order([2]) == math.inf


def test_elements_cap():
    with pytest.raises(ResourceCapError):
        list(AbGroup.cyclic(100).elements(limit=10))
    with pytest.raises(InvalidInputError):
        list(AbGroup.free(1).elements())


def test_hom_checks_relations():
    z2, z4 = AbGroup.cyclic(2), AbGroup.cyclic(4)
    AbHom(z2, z4, [[2]])
    with pytest.raises(InvalidInputError):
        AbHom(z2, z4, [[1]])
    AbHom(z4, z2, [[1]])


def test_hom_composition_and_equality():
    z = AbGroup.free(1)
    z3 = AbGroup.cyclic(3)
    f = AbHom(z, z3, [[1]])
    g = AbHom(z3, z3, [[2]])
    h = f.then(g)
    assert h.equals(AbHom(z, z3, [[5]]))
    assert (f * 3).equals(AbHom.zero(z, z3))
    assert (f + f - f).equals(f)
    assert h(np.array([1]))[0] == 2


def test_isomorphism_decision():
    z6 = AbGroup.cyclic(6)
    z2z3 = AbGroup(2, [[2, 0], [0, 3]])
    assert AbHom(z6, z2z3, [[1, 1]]).is_isomorphism()
    assert not AbHom(z6, z2z3, [[1, 0]]).is_isomorphism()
    assert not AbHom(AbGroup.free(1), AbGroup.free(1), [[2]]).is_isomorphism()
    assert AbHom(AbGroup.free(1), AbGroup.free(1), [[-1]]).is_isomorphism()


@given(st.lists(st.integers(0, 6), min_size=0, max_size=3))
def test_direct_sum_invariants(ds):
    groups = [AbGroup.cyclic(d) if d else AbGroup.free(1) for d in ds]
    s = direct_sum(groups)
    assert s.ngens == len(ds)
    finite = [d for d in ds if d]
    if len(finite) == len(ds):
        assert s.order == math.prod(finite)
    else:
        assert s.invariants()[1] == ds.count(0)
