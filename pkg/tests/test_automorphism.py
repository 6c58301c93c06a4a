import pytest

from zmtool.exceptions import InvalidAutomorphismError
from zmtool.services.automorphism import (AutTriple, apply_aut, enumerate_aut,
                                          fix_bounds, fix_parameters, fix_size,
                                          identity_aut, inner_aut, make_aut,
                                          unit_y_values)
from zmtool.services.zm_core import (GroupElement, all_elements, conjugate,
                                     multiply, validate)


def test_make_aut_reduces(dic3):
    assert make_aut(dic3, 1, 0, 1) == identity_aut(dic3)
    assert make_aut(dic3, 5, 4, 7) == AutTriple(2, 1, 3)


@pytest.mark.parametrize("x1,x2,y,condition", [
    (0, 0, 1, "gcd(x1,m)!=1"),
    (1, 0, 2, "y!=1 mod d"),
])
def test_make_aut_rejects(dic3, x1, x2, y, condition):
    with pytest.raises(InvalidAutomorphismError) as excinfo:
        make_aut(dic3, x1, x2, y)
    assert excinfo.value.condition == condition


def test_make_aut_rejects_non_unit_y():
    # y = 4 is 1 mod d = 3 but b would map to an element of order 3
    p = validate(7, 6, 2)
    with pytest.raises(InvalidAutomorphismError) as excinfo:
        make_aut(p, 1, 0, 4)
    assert excinfo.value.condition == "gcd(y,n)!=1"


def test_enumerate_counts(dic3, c5, trivial):
    assert len(list(enumerate_aut(dic3))) == 12
    assert len(list(enumerate_aut(c5))) == 4
    assert list(enumerate_aut(trivial)) == [AutTriple(0, 0, 0)]
    assert len(list(enumerate_aut(validate(7, 6, 2)))) == 42


def test_enumerate_is_lexicographic(dic3):
    triples = list(enumerate_aut(dic3))
    assert triples == sorted(triples)
    assert len(set(triples)) == len(triples)


def test_unit_y_values():
    assert unit_y_values(validate(3, 4, 2)) == (1, 3)
    assert unit_y_values(validate(7, 6, 2)) == (1,)
    assert unit_y_values(validate(1, 5, 0)) == (1, 2, 3, 4)


def test_apply_aut_examples(dic3):
    b = GroupElement(1, 0)
    assert apply_aut(dic3, AutTriple(1, 1, 1), b) == GroupElement(1, 1)
    assert apply_aut(dic3, AutTriple(2, 0, 3), GroupElement(0, 1)) == GroupElement(0, 2)
    assert apply_aut(dic3, AutTriple(1, 0, 3), b) == GroupElement(3, 0)


@pytest.mark.parametrize("m,n,r", [(3, 4, 2), (5, 4, 2), (7, 6, 3), (9, 2, 8), (7, 3, 2)])
def test_every_triple_is_an_automorphism(m, n, r):
    p = validate(m, n, r)
    elements = all_elements(p)
    for phi in enumerate_aut(p):
        images = [apply_aut(p, phi, g) for g in elements]
        assert len(set(images)) == p.order
        for g in elements[::3]:
            for h in elements[::2]:
                assert apply_aut(p, phi, multiply(p, g, h)) == multiply(
                    p, apply_aut(p, phi, g), apply_aut(p, phi, h))


def test_inner_aut_is_conjugation(dic3):
    for alpha in range(dic3.d):
        for beta in range(dic3.m):
            phi = inner_aut(dic3, alpha, beta)
            x = GroupElement(alpha, beta)
            for g in all_elements(dic3):
                assert apply_aut(dic3, phi, g) == conjugate(dic3, g, x)


def test_inner_aut_examples(dic3):
    assert inner_aut(dic3, 0, 0) == identity_aut(dic3)
    assert inner_aut(dic3, 1, 0) == AutTriple(2, 0, 1)
    assert inner_aut(dic3, 0, 1) == AutTriple(1, 2, 1)


def test_fix_parameters(dic3):
    assert fix_parameters(dic3, identity_aut(dic3)) == (1, 1)
    assert fix_parameters(dic3, AutTriple(2, 0, 1)) == (3, 1)
    assert fix_parameters(dic3, AutTriple(1, 1, 1)) == (1, 2)
    assert fix_parameters(dic3, AutTriple(1, 0, 3)) == (1, 2)


def test_fix_sizes(dic3):
    assert fix_size(dic3, identity_aut(dic3)) == 12
    assert fix_size(dic3, AutTriple(2, 0, 1)) == 4
    assert fix_size(dic3, AutTriple(1, 1, 1)) == 6


@pytest.mark.parametrize("m,n,r", [(3, 4, 2), (5, 4, 2), (7, 6, 2), (9, 2, 8)])
def test_fix_size_counts_fixed_points(m, n, r):
    p = validate(m, n, r)
    elements = all_elements(p)
    for phi in enumerate_aut(p):
        fixed = sum(1 for g in elements if apply_aut(p, phi, g) == g)
        assert fix_size(p, phi) == fixed
        lower, upper = fix_bounds(p, phi)
        assert lower <= fixed <= upper
