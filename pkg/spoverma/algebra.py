"""
This module defines the building blocks of the orthosymplectic Lie superalgebra
spo(4|1): the five-letter alphabet of its natural representation, weights, highest weight
shapes, the six distinguished generators and their 5x5 matrix realization.

Matrices are held as numpy arrays of Python ints (``dtype=object``) so that all arithmetic
stays exact. Rows and columns 1..4 are even, row/column 5 is odd.

Example: ::

    from spoverma.algebra import Generator, Letter, act_letter, generator_matrix

    f1 = generator_matrix(Generator.F1)
    act_letter(Generator.F1, Letter.ONE)   # (1, Letter.TWO)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, total_ordering
from typing import Optional

import numpy as np


class StrEnum(str, Enum):
    """Custom implementation of StrEnum for Python <= 3.10"""
    def __str__(self) -> str:
        return self.value

    @classmethod
    def list(cls):
        """:return: a list of the Enum values."""
        return list(map(lambda c: c.value, cls))


class SpoException(Exception):
    """
    An exception thrown by this library.
    """


class InvariantViolation(SpoException):
    """
    Raised when a computed object breaks an invariant that the construction guarantees,
    e.g. a b-vector with no unique KN tableau.
    """


# ---------------------------------------------------------------------------------
# alphabet

@total_ordering
class Letter(Enum):
    """
    The alphabet ``1 < 2 < 0 < 2̄ < 1̄`` of the natural representation. The enum value is the
    serialized form: barred letters are negative integers.
    """
    ONE = 1
    TWO = 2
    ZERO = 0
    TWO_BAR = -2
    ONE_BAR = -1

    @property
    def rank(self) -> int:
        """Position of the letter in the order ``1 < 2 < 0 < 2̄ < 1̄``, from 0 to 4."""
        return _LETTER_RANKS[self]

    @property
    def parity(self) -> int:
        """1 for the odd letter 0, 0 for the even letters."""
        return 1 if self is Letter.ZERO else 0

    @property
    def weight(self) -> Weight:
        """The weight of the basis vector in ε-coordinates."""
        return letter_weight(self)

    @property
    def text(self) -> str:
        """The ASCII encoding: "1", "2", "0", "-2", "-1"."""
        return str(self.value)

    @classmethod
    def parse(cls, text: str | int) -> Letter:
        """
        :param text: one of "1", "2", "0", "-2", "-1" or the corresponding int.
        :raise: :exc:`SpoException` for anything else.
        """
        if isinstance(text, bool) or not isinstance(text, (str, int)):
            raise SpoException(f"Invalid letter {text!r}, expected one of 1, 2, 0, -2, -1.")
        try:
            return cls(int(text))
        except (TypeError, ValueError) as ex:
            raise SpoException(f"Invalid letter '{text}', expected one of 1, 2, 0, -2, -1.") from ex

    def __lt__(self, other):
        if not isinstance(other, Letter):
            return NotImplemented
        return self.rank < other.rank

    def __str__(self):
        return self.text


ALPHABET: tuple[Letter, ...] = (Letter.ONE, Letter.TWO, Letter.ZERO, Letter.TWO_BAR, Letter.ONE_BAR)
"""All letters in increasing order."""

_LETTER_RANKS = {letter: rank for rank, letter in enumerate(ALPHABET)}

LETTER_VECTORS: dict[Letter, tuple[int, int]] = {
    Letter.ONE: (1, 0),
    Letter.TWO: (1, 1),
    Letter.ZERO: (1, 4),
    Letter.TWO_BAR: (-1, 3),
    Letter.ONE_BAR: (1, 2),
}
"""
Letter -> (sign, 0-based coordinate) in the standard basis ε1..ε5 of C^{4|1}:
ε0 = ε5, ε2̄ = -ε4 and ε1̄ = ε3.
"""


def letter_vector(x: Letter) -> np.ndarray:
    """:return: the column vector of the basis vector indexed by ``x``."""
    sign, coordinate = LETTER_VECTORS[x]
    vec = np.zeros(5, dtype=object)
    vec[coordinate] = sign
    return vec


# ---------------------------------------------------------------------------------
# weights and shapes

@dataclass(frozen=True)
class Weight:
    """
    A weight ``c1·ε1 + c2·ε2`` of the Cartan subalgebra spanned by H1, H2.
    """
    c1: int = 0
    c2: int = 0

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> Weight:
        return Weight(-self.c1, -self.c2)

    def __rmul__(self, scalar: int) -> Weight:
        return Weight(scalar * self.c1, scalar * self.c2)

    def to_json(self) -> list[int]:
        return [self.c1, self.c2]

    def __str__(self):
        return f'({self.c1},{self.c2})'


def letter_weight(x: Letter) -> Weight:
    """
    :return: the weight of ε_x: 1 -> ε1, 2 -> ε2, 0 -> 0, 2̄ -> -ε2, 1̄ -> -ε1.
    """
    return _LETTER_WEIGHTS[x]


_LETTER_WEIGHTS = {
    Letter.ONE: Weight(1, 0),
    Letter.TWO: Weight(0, 1),
    Letter.ZERO: Weight(0, 0),
    Letter.TWO_BAR: Weight(0, -1),
    Letter.ONE_BAR: Weight(-1, 0),
}

ALPHA1 = Weight(1, -1)
"""The even simple root ε1 - ε2."""
ALPHA2 = Weight(0, 1)
"""The odd simple root ε2."""


def positive_roots() -> tuple[list[Weight], list[Weight]]:
    """
    :return: the positive even roots ``{ε1-ε2, ε1+ε2, 2ε1, 2ε2}`` and the positive odd
        roots ``{ε1, ε2}``, in this order.
    """
    even = [Weight(1, -1), Weight(1, 1), Weight(2, 0), Weight(0, 2)]
    odd = [Weight(1, 0), Weight(0, 1)]
    return even, odd


def root_decomposition(lam: Weight, mu: Weight) -> tuple[int, int]:
    """
    Solve ``mu = lam - n1·α1 - n2·α2``.

    :return: the pair ``(n1, n2)``; both are non-negative when ``mu`` is a weight of L(lam).
    """
    diff = lam - mu
    return diff.c1, diff.c1 + diff.c2


@dataclass(frozen=True)
class Shape:
    """
    The highest weight ``λ = l1·ε1 + l2·ε2`` written as the two-row partition ``(l1, l2)``.
    In terms of the multiplicities of the tensor factors, ``m1 = l1 - l2`` and ``m2 = l2``.

    :param l1: length of the first row (``m1 + m2``).
    :param l2: length of the second row (``m2``).
    :raises SpoException: if ``l1 >= l2 >= 0`` does not hold.
    """
    l1: int
    l2: int

    def __post_init__(self):
        if any(isinstance(x, bool) or not isinstance(x, int) for x in (self.l1, self.l2)):
            raise SpoException(f"Shape entries must be integers, got ({self.l1!r}, {self.l2!r}).")
        if self.l2 < 0 or self.l1 < self.l2:
            raise SpoException(f"Invalid shape ({self.l1},{self.l2}), expected l1 >= l2 >= 0.")

    @property
    def m1(self) -> int:
        """Number of V factors (one-box columns)."""
        return self.l1 - self.l2

    @property
    def m2(self) -> int:
        """Number of ∧²V factors (two-box columns)."""
        return self.l2

    @property
    def highest_weight(self) -> Weight:
        return Weight(self.l1, self.l2)

    @property
    def dynkin_labels(self) -> tuple[int, int]:
        """The coefficients ``(a1, a2)`` of ``λ = a1·ω1 + a2·ω2``."""
        return self.m1, 2 * self.m2

    @property
    def ambient_dimension(self) -> int:
        """``dim W = 5^m1 · 11^m2``."""
        return 5 ** self.m1 * 11 ** self.m2

    @classmethod
    def from_m(cls, m1: int, m2: int) -> Shape:
        if m1 < 0 or m2 < 0:
            raise SpoException(f"m1 and m2 must be non-negative, got m1={m1}, m2={m2}.")
        return cls(m1 + m2, m2)

    @classmethod
    def from_dynkin(cls, a1: int, a2: int) -> Shape:
        """
        Highest weight ``λ = a1·ω1 + a2·ω2`` with ``ω1 = ε1`` and ``ω2 = (ε1 + ε2)/2``.

        :raise: :exc:`SpoException` unless ``a1`` and ``a2/2`` are non-negative integers,
            i.e. unless λ is the highest weight of a finite dimensional irreducible module.
        """
        if a1 < 0 or a2 < 0 or a2 % 2 != 0:
            raise SpoException(f"No finite dimensional irreducible module has highest weight "
                               f"{a1}ω1 + {a2}ω2: a1 and a2/2 must be non-negative integers.")
        return cls.from_m(a1, a2 // 2)

    @classmethod
    def parse(cls, text: str) -> Shape:
        """
        :param text: ``"l1,l2"``, e.g. ``"3,2"``.
        """
        parts = text.split(',')
        if len(parts) != 2:
            raise SpoException(f"Invalid shape '{text}', expected 'l1,l2'.")
        try:
            l1, l2 = (int(p) for p in parts)
        except ValueError as ex:
            raise SpoException(f"Invalid shape '{text}', expected two integers.") from ex
        return cls(l1, l2)

    def to_json(self) -> list[int]:
        return [self.l1, self.l2]

    def __str__(self):
        return f'{self.l1},{self.l2}'


# ---------------------------------------------------------------------------------
# generators and their matrices

class Generator(StrEnum):
    """
    The distinguished generators: raising ``E1, E2``, lowering ``F1, F2`` and the Cartan
    elements ``H1, H2``. ``E2`` and ``F2`` are odd.
    """
    E1 = 'E1'
    E2 = 'E2'
    F1 = 'F1'
    F2 = 'F2'
    H1 = 'H1'
    H2 = 'H2'

    @property
    def parity(self) -> int:
        return 1 if self in (Generator.E2, Generator.F2) else 0

    @property
    def is_cartan(self) -> bool:
        return self in (Generator.H1, Generator.H2)


def index_parity(i: int) -> int:
    """:return: the parity of the 1-based row/column index ``i``; only index 5 is odd."""
    return 1 if i == 5 else 0


class SuperMatrix:
    """
    A 5x5 matrix with exact integer entries, graded by ``|E_ij| = |i| + |j|``.

    :param entries: anything numpy can turn into a 5x5 array; entries are stored as Python ints.
    :raises SpoException: if the array is not 5x5.
    """

    SIZE = 5

    def __init__(self, entries=None):
        if entries is None:
            entries = np.zeros((self.SIZE, self.SIZE), dtype=object)
        arr = np.array(entries, dtype=object)
        if arr.shape != (self.SIZE, self.SIZE):
            raise SpoException(f"Expected a 5x5 matrix, got shape {arr.shape}.")
        self.entries = np.vectorize(int, otypes=[object])(arr)

    @classmethod
    def unit(cls, i: int, j: int) -> SuperMatrix:
        """:return: the matrix unit ``E_ij`` (1-based indices)."""
        ret = cls()
        ret.entries[i - 1, j - 1] = 1
        return ret

    @classmethod
    def zero(cls) -> SuperMatrix:
        return cls()

    def is_zero(self) -> bool:
        return not np.any(self.entries != 0)

    @property
    def parity(self) -> Optional[int]:
        """
        :return: the common parity of the non-zero matrix units, 0 for the zero matrix and
            ``None`` if the matrix is not homogeneous.
        """
        parities = {index_parity(i + 1) ^ index_parity(j + 1)
                    for i, j in zip(*np.nonzero(self.entries != 0))}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def __add__(self, other: SuperMatrix) -> SuperMatrix:
        return SuperMatrix(self.entries + other.entries)

    def __sub__(self, other: SuperMatrix) -> SuperMatrix:
        return SuperMatrix(self.entries - other.entries)

    def __neg__(self) -> SuperMatrix:
        return SuperMatrix(-self.entries)

    def __rmul__(self, scalar: int) -> SuperMatrix:
        return SuperMatrix(scalar * self.entries)

    def __matmul__(self, other: SuperMatrix) -> SuperMatrix:
        return SuperMatrix(self.entries.dot(other.entries))

    def apply(self, vec: np.ndarray) -> np.ndarray:
        """:return: the matrix-vector product with a length 5 column vector."""
        return self.entries.dot(vec)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    def __hash__(self):
        return hash(tuple(self.entries.flatten()))

    def to_json(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def __str__(self):
        return '\n'.join(' '.join(f'{int(x):>2}' for x in row) for row in self.entries)

    def __repr__(self):
        return f'SuperMatrix({self.to_json()})'


def _e(i: int, j: int) -> SuperMatrix:
    return SuperMatrix.unit(i, j)


@lru_cache(maxsize=None)
def generator_matrix(g: Generator) -> SuperMatrix:
    """
    The matrix realization of a generator:

    - ``F1 = E21 - E34``, ``F2 = E52 - E45`` (negative simple root vectors)
    - ``E1 = E12 - E43``, ``E2 = E25 + E54`` (positive simple root vectors)
    - ``H1 = E11 - E33``, ``H2 = E22 - E44``

    The raising operators are normalized so that ``[E1, F1] = H1 - H2`` and
    ``{E2, F2} = H2``.
    """
    matrices = {
        Generator.E1: _e(1, 2) - _e(4, 3),
        Generator.E2: _e(2, 5) + _e(5, 4),
        Generator.F1: _e(2, 1) - _e(3, 4),
        Generator.F2: _e(5, 2) - _e(4, 5),
        Generator.H1: _e(1, 1) - _e(3, 3),
        Generator.H2: _e(2, 2) - _e(4, 4),
    }
    return matrices[Generator(g)]


def supercommutator(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """
    The super bracket ``[A, B] = AB - (-1)^{|A||B|} BA`` of two homogeneous matrices.

    :raise: :exc:`SpoException` if either matrix is not homogeneous.
    """
    pa, pb = a.parity, b.parity
    if pa is None or pb is None:
        raise SpoException("The supercommutator is only defined here for homogeneous matrices.")
    sign = -1 if pa and pb else 1
    return (a @ b) - sign * (b @ a)


def is_spo_matrix(m: SuperMatrix) -> bool:
    """
    Check that ``m`` belongs to the matrix realization of spo(4|1), i.e. has the block form ::

        ( a      b    | p )
        ( c    -a^T   | q )
        ( -q^T  p^T   | 0 )

    with ``b`` and ``c`` symmetric 2x2 blocks.
    """
    x = m.entries
    a, b, c, d = x[0:2, 0:2], x[0:2, 2:4], x[2:4, 0:2], x[2:4, 2:4]
    p, q = x[0:2, 4], x[2:4, 4]
    return bool(np.array_equal(b, b.T)
                and np.array_equal(c, c.T)
                and np.array_equal(d, -a.T)
                and np.array_equal(x[4, 0:2], -q)
                and np.array_equal(x[4, 2:4], p)
                and x[4, 4] == 0)


@lru_cache(maxsize=None)
def act_letter(g: Generator, x: Letter) -> Optional[tuple[int, Letter]]:
    """
    Action of a root vector on a basis vector of the natural representation, e.g.
    ``f1·ε1 = ε2``, ``f2·ε2 = ε0``, ``f2·ε0 = ε2̄`` and ``f1·ε2̄ = ε1̄``.

    :param g: one of ``E1, E2, F1, F2``.
    :param x: the letter of the basis vector.
    :return: ``(scalar, y)`` with ``g·ε_x = scalar·ε_y``, or ``None`` if ``g·ε_x = 0``.
    :raise: :exc:`SpoException` for ``H1``/``H2`` which act diagonally (see :func:`letter_weight`).
    """
    g = Generator(g)
    if g.is_cartan:
        raise SpoException(f"{g} acts diagonally, use letter_weight instead of act_letter.")
    image = generator_matrix(g).apply(letter_vector(x))
    nonzero = [i for i in range(5) if image[i] != 0]
    if not nonzero:
        return None
    if len(nonzero) > 1:
        raise InvariantViolation(f"{g} maps ε_{x} to a combination of several basis vectors.")
    coordinate = nonzero[0]
    for y, (sign, coord) in LETTER_VECTORS.items():
        if coord == coordinate:
            return int(image[coordinate]) * sign, y
    raise InvariantViolation(f"No letter corresponds to coordinate {coordinate + 1}.")
