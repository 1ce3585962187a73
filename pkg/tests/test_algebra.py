"""
Test the spoverma.algebra module.
"""

from itertools import combinations

import numpy as np
import pytest

from spoverma.algebra import (ALPHA1, ALPHA2, ALPHABET, Generator, Letter, Shape, SpoException, SuperMatrix,
                              Weight, act_letter, generator_matrix, is_spo_matrix, letter_vector, letter_weight,
                              positive_roots, root_decomposition, supercommutator)

E1 = generator_matrix(Generator.E1)
E2 = generator_matrix(Generator.E2)
F1 = generator_matrix(Generator.F1)
F2 = generator_matrix(Generator.F2)
H1 = generator_matrix(Generator.H1)
H2 = generator_matrix(Generator.H2)


def test_letter_order():
    assert sorted(ALPHABET, reverse=True) == [Letter.ONE_BAR, Letter.TWO_BAR, Letter.ZERO, Letter.TWO, Letter.ONE]
    assert [x.rank for x in ALPHABET] == [0, 1, 2, 3, 4]
    assert Letter.TWO < Letter.ZERO < Letter.TWO_BAR
    assert Letter.ONE_BAR > Letter.ONE


def test_letter_parity_and_weight():
    assert [x.parity for x in ALPHABET] == [0, 0, 1, 0, 0]
    assert [letter_weight(x) for x in ALPHABET] == [Weight(1, 0), Weight(0, 1), Weight(0, 0),
                                                    Weight(0, -1), Weight(-1, 0)]
    assert Letter.TWO_BAR.weight == Weight(0, -1)


def test_letter_parse():
    assert Letter.parse("-2") is Letter.TWO_BAR
    assert Letter.parse(0) is Letter.ZERO
    assert [x.text for x in ALPHABET] == ["1", "2", "0", "-2", "-1"]
    with pytest.raises(SpoException, match="Invalid letter"):
        Letter.parse("3")
    with pytest.raises(SpoException, match="Invalid letter"):
        Letter.parse("x")


@pytest.mark.parametrize("value", [1.9, 1.0, True, False, None, "1.0", [1]])
def test_letter_parse_rejects_non_integers(value):
    with pytest.raises(SpoException, match="Invalid letter"):
        Letter.parse(value)


def test_letter_vector():
    assert list(letter_vector(Letter.ZERO)) == [0, 0, 0, 0, 1]
    assert list(letter_vector(Letter.TWO_BAR)) == [0, 0, 0, -1, 0]
    assert list(letter_vector(Letter.ONE_BAR)) == [0, 0, 1, 0, 0]


def test_weight_arithmetic():
    assert Weight(3, 2) - 2 * ALPHA1 == Weight(1, 4)
    assert Weight(3, 2) + ALPHA2 == Weight(3, 3)
    assert -Weight(1, -1) == Weight(-1, 1)
    assert str(Weight(0, -1)) == "(0,-1)"


def test_roots():
    even, odd = positive_roots()
    assert len(even) == 4
    assert odd == [Weight(1, 0), Weight(0, 1)]
    assert ALPHA1 in even and ALPHA2 in odd
    assert root_decomposition(Weight(3, 2), Weight(0, 1)) == (3, 4)
    assert root_decomposition(Weight(1, 0), Weight(-1, 0)) == (2, 2)


def test_shape():
    shape = Shape(3, 2)
    assert (shape.m1, shape.m2) == (1, 2)
    assert shape.highest_weight == Weight(3, 2)
    assert shape.dynkin_labels == (1, 4)
    assert shape.ambient_dimension == 605
    assert Shape.from_m(1, 2) == shape
    assert Shape.parse("3,2") == shape
    assert str(shape) == "3,2"


def test_shape_from_dynkin():
    assert Shape.from_dynkin(1, 4) == Shape(3, 2)
    assert Shape.from_dynkin(0, 0) == Shape(0, 0)
    assert Shape.from_dynkin(2, 0) == Shape(2, 0)
    with pytest.raises(SpoException, match="a2/2 must be non-negative"):
        Shape.from_dynkin(1, 3)
    with pytest.raises(SpoException):
        Shape.from_dynkin(-1, 2)


def test_invalid_shape():
    with pytest.raises(SpoException, match="expected l1 >= l2 >= 0"):
        Shape(1, 2)
    with pytest.raises(SpoException, match="expected l1 >= l2 >= 0"):
        Shape(1, -1)
    with pytest.raises(SpoException, match="expected 'l1,l2'"):
        Shape.parse("3")
    with pytest.raises(SpoException, match="expected two integers"):
        Shape.parse("a,b")
    with pytest.raises(SpoException, match="must be integers"):
        Shape(True, False)
    with pytest.raises(SpoException, match="must be integers"):
        Shape(2.0, 1)


def test_generator_parity():
    assert [g.parity for g in Generator] == [0, 1, 0, 1, 0, 0]
    assert Generator.H2.is_cartan and not Generator.F2.is_cartan
    for g in Generator:
        assert generator_matrix(g).parity == g.parity


def test_generator_matrices():
    assert F1 == SuperMatrix.unit(2, 1) - SuperMatrix.unit(3, 4)
    assert F1.entries[1, 0] == 1 and F1.entries[2, 3] == -1
    assert H1.to_json() == np.diag([1, 0, -1, 0, 0]).tolist()
    assert E2.entries[1, 4] == 1 and E2.entries[4, 3] == 1
    assert sum(abs(x) for x in E2.entries.flatten()) == 2


def test_supercommutator():
    assert supercommutator(H1, H2).is_zero()
    assert supercommutator(E1, F1) == H1 - H2
    assert supercommutator(E2, F2) == H2
    assert supercommutator(F2, F2) == 2 * (F2 @ F2)
    assert supercommutator(E1, F2).is_zero()
    assert supercommutator(E2, F1).is_zero()


def test_supercommutator_root_values():
    assert supercommutator(H1, F1) == -1 * F1
    assert supercommutator(H2, F1) == F1
    assert supercommutator(H1, F2).is_zero()
    assert supercommutator(H2, F2) == -1 * F2
    assert supercommutator(H2, E2) == E2


def test_supercommutator_non_homogeneous():
    mixed = SuperMatrix.unit(1, 2) + SuperMatrix.unit(1, 5)
    assert mixed.parity is None
    with pytest.raises(SpoException, match="homogeneous"):
        supercommutator(mixed, F1)


def test_is_spo_matrix():
    assert is_spo_matrix(SuperMatrix.zero())
    assert is_spo_matrix(F2)
    assert not is_spo_matrix(SuperMatrix.unit(1, 5))
    assert not is_spo_matrix(SuperMatrix.unit(2, 5) - SuperMatrix.unit(5, 4))
    for g in Generator:
        assert is_spo_matrix(generator_matrix(g))


def test_brackets_stay_in_spo():
    for a, b in combinations(Generator, 2):
        assert is_spo_matrix(supercommutator(generator_matrix(a), generator_matrix(b))), (a, b)


def test_super_matrix_shape():
    with pytest.raises(SpoException, match="Expected a 5x5 matrix"):
        SuperMatrix([[1, 0], [0, 1]])


def test_act_letter():
    assert act_letter(Generator.F1, Letter.ONE) == (1, Letter.TWO)
    assert act_letter(Generator.F2, Letter.ONE) is None
    assert act_letter(Generator.F2, Letter.TWO) == (1, Letter.ZERO)
    assert act_letter(Generator.F2, Letter.ZERO) == (1, Letter.TWO_BAR)
    assert act_letter(Generator.F1, Letter.TWO_BAR) == (1, Letter.ONE_BAR)
    assert act_letter(Generator.E2, Letter.ZERO) == (1, Letter.TWO)
    assert act_letter(Generator.E2, Letter.TWO_BAR) == (-1, Letter.ZERO)
    assert act_letter(Generator.E1, Letter.ONE) is None


def test_act_letter_matches_matrices():
    for g in (Generator.E1, Generator.E2, Generator.F1, Generator.F2):
        for x in ALPHABET:
            image = act_letter(g, x)
            expected = [0] * 5 if image is None else list(image[0] * letter_vector(image[1]))
            assert list(generator_matrix(g).apply(letter_vector(x))) == expected, (g, x)


def test_act_letter_cartan():
    with pytest.raises(SpoException, match="acts diagonally"):
        act_letter(Generator.H1, Letter.ONE)


def test_letter_weight_is_cartan_eigenvalue():
    for x in ALPHABET:
        vec = letter_vector(x)
        assert list(H1.apply(vec)) == list(letter_weight(x).c1 * vec)
        assert list(H2.apply(vec)) == list(letter_weight(x).c2 * vec)
