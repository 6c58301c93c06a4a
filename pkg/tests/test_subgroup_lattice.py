import pytest

from zmtool.exceptions import CapacityError
from zmtool.services.subgroup_lattice import (SubgroupTriple,
                                              conjugate_subgroups, enumerate_L,
                                              identify_subgroup, is_cyclic,
                                              is_normal, subgroup_count,
                                              subgroup_elements, subgroup_order)
from zmtool.services.zm_core import GroupElement, validate


def test_enumerate_dic3(dic3):
    assert enumerate_L(dic3) == [
        (1, 1, 0), (1, 2, 0), (1, 4, 0),
        (3, 1, 0), (3, 1, 1), (3, 1, 2),
        (3, 2, 0), (3, 4, 0),
    ]
    assert subgroup_count(dic3) == 8


@pytest.mark.parametrize("m,n,r,count", [(1, 1, 0, 1), (1, 4, 0, 3), (3, 2, 2, 6), (5, 2, 4, 8)])
def test_subgroup_counts(m, n, r, count):
    p = validate(m, n, r)
    assert len(enumerate_L(p)) == count == subgroup_count(p)


def test_subgroup_order(dic3):
    assert subgroup_order(dic3, SubgroupTriple(1, 1, 0)) == 12
    assert subgroup_order(dic3, SubgroupTriple(3, 1, 2)) == 4
    assert subgroup_order(dic3, SubgroupTriple(3, 4, 0)) == 1


def test_normality(dic3):
    assert is_normal(dic3, SubgroupTriple(1, 4, 0))
    assert is_normal(dic3, SubgroupTriple(3, 2, 0))
    assert not is_normal(dic3, SubgroupTriple(3, 1, 0))
    assert not is_normal(dic3, SubgroupTriple(3, 1, 1))


def test_cyclicity(dic3):
    assert not is_cyclic(dic3, SubgroupTriple(1, 1, 0))
    assert is_cyclic(dic3, SubgroupTriple(1, 2, 0))
    assert is_cyclic(dic3, SubgroupTriple(3, 1, 1))


def test_subgroup_elements(dic3):
    assert subgroup_elements(dic3, SubgroupTriple(3, 1, 1)) == [
        GroupElement(0, 0), GroupElement(1, 1), GroupElement(2, 0), GroupElement(3, 1)]
    assert subgroup_elements(dic3, SubgroupTriple(1, 4, 0)) == [
        GroupElement(0, 0), GroupElement(0, 1), GroupElement(0, 2)]
    assert subgroup_elements(dic3, SubgroupTriple(3, 4, 0)) == [GroupElement(0, 0)]


def test_subgroup_elements_budget(dic3):
    with pytest.raises(CapacityError):
        subgroup_elements(dic3, SubgroupTriple(1, 1, 0), budget=5)


def test_conjugacy_by_order(dic3):
    assert conjugate_subgroups(dic3, SubgroupTriple(3, 1, 0), SubgroupTriple(3, 1, 2))
    assert not conjugate_subgroups(dic3, SubgroupTriple(3, 1, 0), SubgroupTriple(1, 4, 0))


@pytest.mark.parametrize("m,n,r", [(3, 4, 2), (5, 4, 2), (7, 6, 3), (9, 2, 8), (1, 6, 0)])
def test_identify_inverts_elements(m, n, r):
    p = validate(m, n, r)
    for t in enumerate_L(p):
        assert identify_subgroup(p, subgroup_elements(p, t)) == t


def test_every_subgroup_contains_identity_and_has_its_order():
    p = validate(7, 6, 3)
    for t in enumerate_L(p):
        elements = subgroup_elements(p, t)
        assert GroupElement(0, 0) in elements
        assert len(elements) == subgroup_order(p, t)
