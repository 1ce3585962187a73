"""
Verma vectors ``f1^b4 f2^b3 f1^b2 f2^b1 v_λ`` parametrized by exponent vectors
``b = (b1, b2, b3, b4)``, the inequality system selecting the Verma basis of L(λ), and the
weight preserving bijection between valid b-vectors and KN tableaux.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, astuple
from functools import lru_cache

from spoverma.algebra import ALPHA1, ALPHA2, InvariantViolation, Letter, Shape, SpoException, Weight
from spoverma.tableaux import Tableau, enumerate_kn, is_kn

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class BVector:
    """
    Exponents of the monomial ``f1^b4 f2^b3 f1^b2 f2^b1``. Ordering is lexicographic
    in ``(b1, b2, b3, b4)``.

    :raises SpoException: if an entry is negative.
    """
    b1: int = 0
    b2: int = 0
    b3: int = 0
    b4: int = 0

    def __post_init__(self):
        if any(isinstance(b, bool) or not isinstance(b, int) or b < 0 for b in astuple(self)):
            raise SpoException(f"b-vector entries must be non-negative integers, got {astuple(self)}.")

    def __iter__(self):
        return iter(astuple(self))

    @classmethod
    def parse(cls, text: str) -> BVector:
        """:param text: ``"b1,b2,b3,b4"``."""
        parts = text.split(',')
        if len(parts) != 4:
            raise SpoException(f"Invalid b-vector '{text}', expected 'b1,b2,b3,b4'.")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as ex:
            raise SpoException(f"Invalid b-vector '{text}', expected four integers.") from ex

    @classmethod
    def from_json(cls, obj: list[int]) -> BVector:
        if not isinstance(obj, list) or len(obj) != 4:
            raise SpoException(f"Invalid b-vector {obj!r}, expected [b1, b2, b3, b4].")
        return cls(*obj)

    def to_json(self) -> list[int]:
        return list(astuple(self))

    def __str__(self):
        return ','.join(str(b) for b in self)


def satisfies_inequalities(b: BVector, shape: Shape) -> bool:
    """
    :return: True iff

        - ``b1 <= 2·m2``
        - ``b2 <= m1 + b1``
        - ``b3 <= min(b2 + m1, 2·b2)``
        - ``b4 <= min(m1, b3/2)``, evaluated as ``b4 <= m1`` and ``2·b4 <= b3``.
    """
    m1, m2 = shape.m1, shape.m2
    return (b.b1 <= 2 * m2
            and b.b2 <= m1 + b.b1
            and b.b3 <= min(b.b2 + m1, 2 * b.b2)
            and b.b4 <= m1
            and 2 * b.b4 <= b.b3)


def enumerate_b(shape: Shape) -> list[BVector]:
    """
    :return: all b-vectors satisfying :func:`satisfies_inequalities` for ``shape``, in
        lexicographic order.
    """
    m1, m2 = shape.m1, shape.m2
    ret = [BVector(b1, b2, b3, b4)
           for b1 in range(2 * m2 + 1)
           for b2 in range(m1 + b1 + 1)
           for b3 in range(min(b2 + m1, 2 * b2) + 1)
           for b4 in range(min(m1, b3 // 2) + 1)]
    log.debug("enumerated %d b-vectors of shape (%s)", len(ret), shape)
    return ret


def _count(row, predicate) -> int:
    return sum(1 for x in row if predicate(x))


def psi(t: Tableau) -> BVector:
    """
    The bijection from KN tableaux to b-vectors:

    - ``b1 = 2·#{row 2 entries >= 2̄} + #{row 2 entries = 0}``
    - ``b2 = #{row 1 entries > 1} + #{row 2 entries > 2̄}``
    - ``b3 = 2·#{row 1 entries >= 2̄} + #{row 1 entries = 0}``
    - ``b4 = #{row 1 entries > 2̄}``

    :raise: :exc:`SpoException` if ``t`` is not a KN tableau.
    """
    if not is_kn(t):
        raise SpoException(f"psi is only defined on KN tableaux, got {t.row1}/{t.row2}.")
    row1, row2 = t.row1, t.row2
    zero, two_bar = Letter.ZERO, Letter.TWO_BAR
    return BVector(
        b1=2 * _count(row2, lambda x: x >= two_bar) + _count(row2, lambda x: x is zero),
        b2=_count(row1, lambda x: x > Letter.ONE) + _count(row2, lambda x: x > two_bar),
        b3=2 * _count(row1, lambda x: x >= two_bar) + _count(row1, lambda x: x is zero),
        b4=_count(row1, lambda x: x > two_bar),
    )


@lru_cache(maxsize=64)
def kn_preimages(shape: Shape) -> dict[BVector, tuple[Tableau, ...]]:
    """
    :return: every b-vector hit by :func:`psi` on the KN tableaux of ``shape``, mapped to
        all of its preimages.
    """
    ret: dict[BVector, list[Tableau]] = {}
    for t in enumerate_kn(shape):
        ret.setdefault(psi(t), []).append(t)
    return {b: tuple(ts) for b, ts in ret.items()}


def tableau_of_b(b: BVector, shape: Shape) -> Tableau:
    """
    The KN tableau ``T(b)``: the unique KN tableau of ``shape`` with ``psi(T(b)) = b``,
    found by searching all KN tableaux of the shape.

    :raise: :exc:`SpoException` if ``b`` violates the inequalities;
        :exc:`InvariantViolation` if the search finds no preimage or several.
    """
    if not satisfies_inequalities(b, shape):
        raise SpoException(f"b-vector ({b}) does not satisfy the inequalities of shape ({shape}).")
    found = kn_preimages(shape).get(b, ())
    if len(found) != 1:
        raise InvariantViolation(f"b-vector ({b}) of shape ({shape}) has {len(found)} KN preimages, "
                                 f"expected exactly one.")
    return found[0]


def verma_weight(b: BVector, shape: Shape) -> Weight:
    """
    :return: ``(m1 + m2 - b2 - b4)·ε1 + (m2 - b1 + b2 - b3 + b4)·ε2``, which is
        ``λ - (b2 + b4)·α1 - (b1 + b3)·α2``.
    """
    return shape.highest_weight - (b.b2 + b.b4) * ALPHA1 - (b.b1 + b.b3) * ALPHA2
