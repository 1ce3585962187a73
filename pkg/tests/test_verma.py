"""
Test the spoverma.verma module.
"""

from itertools import product

import pytest

from spoverma.algebra import Shape, SpoException, Weight
from spoverma.tableaux import Tableau, enumerate_kn, highest_weight_tableau, tableau_weight
from spoverma.verma import (BVector, enumerate_b, kn_preimages, psi, satisfies_inequalities, tableau_of_b,
                            verma_weight)

Y1 = Tableau.from_rows([1, 0, -1], [2, 0])
SHAPES = [Shape(0, 0), Shape(1, 0), Shape(1, 1), Shape(2, 1), Shape(2, 2), Shape(3, 2), Shape(4, 2), Shape(3, 3)]


def test_bvector():
    b = BVector.parse("1,2,3,1")
    assert b == BVector(1, 2, 3, 1)
    assert tuple(b) == (1, 2, 3, 1)
    assert str(b) == "1,2,3,1"
    assert b.to_json() == [1, 2, 3, 1]
    assert BVector.from_json([1, 2, 3, 1]) == b
    assert BVector(0, 1, 2, 0) < BVector(0, 1, 2, 1) < BVector(1, 0, 0, 0)


def test_bvector_invalid():
    with pytest.raises(SpoException, match="non-negative"):
        BVector(0, -1, 0, 0)
    with pytest.raises(SpoException, match="expected 'b1,b2,b3,b4'"):
        BVector.parse("1,2,3")
    with pytest.raises(SpoException, match="four integers"):
        BVector.parse("1,2,x,4")
    with pytest.raises(SpoException, match="expected \\[b1, b2, b3, b4\\]"):
        BVector.from_json([1, 2])
    with pytest.raises(SpoException, match="non-negative integers"):
        BVector.from_json([1, 2, True, 0])
    with pytest.raises(SpoException, match="non-negative integers"):
        BVector.from_json([1, 2, 2.0, 0])


def test_satisfies_inequalities():
    for shape in SHAPES:
        assert satisfies_inequalities(BVector(), shape)
    assert satisfies_inequalities(BVector(1, 2, 3, 1), Shape(3, 2))
    assert not satisfies_inequalities(BVector(1, 0, 0, 0), Shape(1, 0))
    assert not satisfies_inequalities(BVector(0, 1, 1, 1), Shape(1, 0))
    assert not satisfies_inequalities(BVector(0, 0, 1, 0), Shape(1, 0))


@pytest.mark.parametrize("shape", [Shape(0, 0), Shape(3, 2), Shape(7, 3), Shape(20, 10)])
def test_inequalities_integer_form(shape):
    # b4 <= b3 / 2 with rational division agrees with 2·b4 <= b3
    for entries in product(range(21), repeat=4):
        b1, b2, b3, b4 = entries
        expected = (b1 <= 2 * shape.m2 and b2 <= shape.m1 + b1 and b3 <= min(b2 + shape.m1, 2 * b2)
                    and b4 <= min(shape.m1, b3 / 2))
        assert satisfies_inequalities(BVector(*entries), shape) == expected


def test_enumerate_b():
    assert enumerate_b(Shape(1, 0)) == [BVector(0, 0, 0, 0), BVector(0, 1, 0, 0), BVector(0, 1, 1, 0),
                                        BVector(0, 1, 2, 0), BVector(0, 1, 2, 1)]
    assert enumerate_b(Shape(0, 0)) == [BVector()]
    assert len(enumerate_b(Shape(3, 2))) == 105


def test_enumerate_b_example_box():
    bvectors = enumerate_b(Shape.from_dynkin(1, 4))
    assert bvectors == sorted(bvectors)
    assert max(b.b1 for b in bvectors) == 4
    assert max(b.b2 for b in bvectors) == 5
    assert max(b.b3 for b in bvectors) == 6
    assert max(b.b4 for b in bvectors) == 1


def test_psi():
    assert psi(highest_weight_tableau(Shape(3, 2))) == BVector()
    assert psi(Y1) == BVector(1, 2, 3, 1)
    assert psi(Tableau.from_rows([-2])) == BVector(0, 1, 2, 0)
    assert psi(Tableau.from_rows([-1])) == BVector(0, 1, 2, 1)


def test_psi_not_kn():
    with pytest.raises(SpoException, match="only defined on KN tableaux"):
        psi(Tableau.from_rows([2, 1]))


def test_tableau_of_b():
    assert tableau_of_b(BVector(), Shape(3, 2)) == highest_weight_tableau(Shape(3, 2))
    assert tableau_of_b(BVector(0, 1, 2, 1), Shape(1, 0)) == Tableau.from_rows([-1])
    assert tableau_of_b(BVector(1, 2, 3, 1), Shape(3, 2)) == Y1


def test_tableau_of_b_invalid():
    with pytest.raises(SpoException, match="does not satisfy the inequalities"):
        tableau_of_b(BVector(1, 0, 0, 0), Shape(1, 0))


@pytest.mark.parametrize("shape", SHAPES)
def test_psi_bijective(shape):
    kn = enumerate_kn(shape)
    images = [psi(t) for t in kn]
    assert len(set(images)) == len(kn)
    assert sorted(images) == enumerate_b(shape)
    preimages = kn_preimages(shape)
    assert all(len(ts) == 1 for ts in preimages.values())


@pytest.mark.parametrize("shape", SHAPES)
def test_round_trips(shape):
    for t in enumerate_kn(shape):
        assert tableau_of_b(psi(t), shape) == t
    for b in enumerate_b(shape):
        assert psi(tableau_of_b(b, shape)) == b


def test_verma_weight():
    assert verma_weight(BVector(), Shape(3, 2)) == Weight(3, 2)
    assert verma_weight(BVector(1, 2, 3, 1), Shape(3, 2)) == Weight(0, 1)
    assert verma_weight(BVector(0, 1, 2, 1), Shape(1, 0)) == Weight(-1, 0)


@pytest.mark.parametrize("shape", SHAPES)
def test_verma_weight_matches_tableau(shape):
    for b in enumerate_b(shape):
        assert verma_weight(b, shape) == tableau_weight(tableau_of_b(b, shape))
