import pytest
from hypothesis import given, strategies as st

import oracles
from mackeypc.catalog import GROUPS, group
from mackeypc.errors import InvalidInputError, ResourceCapError
from mackeypc.groups import (class_index, conjugacy_classes_of_subgroups, conjugate_subgroup, double_cosets,
                             make_group, subgroups)


def test_make_group_examples():
    assert make_group(2, [[2, 1]]).order == 2
    assert make_group(3, [[2, 3, 1], [2, 1, 3]]).order == 6
    assert make_group(1, []).order == 1


def test_elements_match_closure_oracle(group_name, any_group):
    degree, gens = GROUPS[group_name]
    assert set(any_group.elements) == oracles.closure(degree, gens)
    assert list(any_group.elements) == sorted(any_group.elements)


def test_group_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        make_group(3, [[1, 1, 2]])
    with pytest.raises(InvalidInputError):
        make_group(3, [[2, 1]])
    with pytest.raises(ResourceCapError) as e:
        make_group(4, [[2, 3, 4, 1], [2, 1, 3, 4]], cap=10)
    assert e.value.cap == "group-order"


@pytest.mark.parametrize("name,count", [("C1", 1), ("C2", 2), ("S3", 6), ("K4", 5), ("D4", 10), ("Q8", 6)])
def test_subgroup_counts(name, count):
    g = group(name)
    subs = subgroups(g)
    assert len(subs) == count
    assert {frozenset(h.perms) for h in subs} == oracles.subgroups(g.elements)
    assert [h.sort_key for h in subs] == sorted(h.sort_key for h in subs)
    assert sum(h.order == g.order for h in subs) == 1 and sum(h.order == 1 for h in subs) == 1


def test_s3_subgroup_orders():
    assert sorted(h.order for h in subgroups(group("S3"))) == [1, 2, 2, 2, 3, 6]


def test_conjugacy_classes_match_oracle(any_group):
    ours = conjugacy_classes_of_subgroups(any_group)
    theirs = oracles.conjugacy_classes(any_group.elements)
    assert sorted(sorted(sorted(h.perms) for h in c.members) for c in ours) == \
        sorted(sorted(sorted(h) for h in c) for c in theirs)
    for c in ours:
        assert c.representative.elements == min(h.elements for h in c.members)
    keys = [(c.order, c.representative.elements) for c in ours]
    assert keys == sorted(keys)


def test_class_counts():
    assert len(conjugacy_classes_of_subgroups(group("S3"))) == 4
    assert len(conjugacy_classes_of_subgroups(group("K4"))) == 5  # abelian: each subgroup its own class
    assert len(conjugacy_classes_of_subgroups(group("C1"))) == 1


def test_conjugates_stay_in_class(any_group):
    for h in subgroups(any_group):
        for x in range(any_group.order):
            assert class_index(conjugate_subgroup(h, x)) == class_index(h)


def test_double_coset_examples():
    s3 = group("S3")
    c2 = conjugacy_classes_of_subgroups(s3)[1].representative
    assert len(double_cosets(s3, s3.whole, s3.whole)) == 1
    assert len(double_cosets(s3, s3.trivial, s3.trivial)) == 6
    assert len(double_cosets(s3, c2, c2)) == 2


@given(st.sampled_from(["C2", "C3", "K4", "S3", "D4", "Q8"]), st.data())
def test_double_cosets_partition(name, data):
    g = group(name)
    subs = subgroups(g)
    h = data.draw(st.sampled_from(subs))
    k = data.draw(st.sampled_from(subs))
    dcs = double_cosets(g, h, k)
    assert sum(len(d.elements) for d in dcs) == g.order
    assert sorted(x for d in dcs for x in d.elements) == list(range(g.order))
    assert len(dcs) == oracles.double_coset_count(g.elements, h.perms, k.perms)
    assert [d.representative for d in dcs] == sorted(d.representative for d in dcs)


def test_determinism():
    a, b = make_group(4, GROUPS["D4"][1]), make_group(4, GROUPS["D4"][1])
    assert [h.elements for h in subgroups(a)] == [h.elements for h in subgroups(b)]
