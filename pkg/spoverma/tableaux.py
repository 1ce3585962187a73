"""
Two-row tableaux over the alphabet ``1 < 2 < 0 < 2̄ < 1̄``: column-strict tableaux (CST),
which index the tensor basis of the module space, and Kashiwara-Nakashima (KN) tableaux,
which index a basis of the irreducible module L(λ).

A tableau of shape ``(l1, l2)`` has ``m2 = l2`` two-box columns on the left followed by
``m1 = l1 - l2`` one-box columns. Tableaux are compared by scanning the cells from the
rightmost column to the leftmost one, top to bottom inside a column; the first differing
cell decides. That scan order is also the order of the tensor factors in
:mod:`spoverma.modulespace`, so the *scan word* of a tableau is the key used everywhere.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator

from spoverma.algebra import ALPHABET, Letter, Shape, SpoException, Weight, letter_weight

log = logging.getLogger(__name__)

Column = tuple[Letter, ...]
"""A column read top to bottom; one or two letters."""


@dataclass(frozen=True)
class Tableau:
    """
    A filling of the two-row Young diagram of ``shape``.

    :param shape: the shape ``(l1, l2)``.
    :param row1: ``l1`` letters of the first row, left to right.
    :param row2: ``l2`` letters of the second row, left to right.
    :raises SpoException: if the row lengths do not match the shape.
    """
    shape: Shape
    row1: tuple[Letter, ...]
    row2: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'row1', tuple(self.row1))
        object.__setattr__(self, 'row2', tuple(self.row2))
        if len(self.row1) != self.shape.l1 or len(self.row2) != self.shape.l2:
            raise SpoException(f"Rows of lengths ({len(self.row1)},{len(self.row2)}) "
                               f"do not fit shape ({self.shape}).")
        if not all(isinstance(x, Letter) for x in self.row1 + self.row2):
            raise SpoException("Tableau entries must be Letter objects.")

    @classmethod
    def from_rows(cls, row1, row2=()) -> Tableau:
        """
        Build a tableau from rows given as ints / strings in the serialized letter encoding,
        e.g. ``Tableau.from_rows([1, 0, -1], [2, 0])``. The shape is inferred.
        """
        row1 = tuple(x if isinstance(x, Letter) else Letter.parse(x) for x in row1)
        row2 = tuple(x if isinstance(x, Letter) else Letter.parse(x) for x in row2)
        return cls(Shape(len(row1), len(row2)), row1, row2)

    @classmethod
    def from_columns(cls, shape: Shape, columns: list[Column]) -> Tableau:
        """:param columns: the columns from left to right."""
        row1 = tuple(col[0] for col in columns)
        row2 = tuple(col[1] for col in columns if len(col) == 2)
        return cls(shape, row1, row2)

    def columns(self) -> list[Column]:
        """:return: the columns from left to right, each read top to bottom."""
        return [(self.row1[j], self.row2[j]) if j < self.shape.l2 else (self.row1[j],)
                for j in range(self.shape.l1)]

    def cell(self, i: int, j: int) -> Letter:
        """:return: the entry in row ``i`` and column ``j`` (both 1-based)."""
        row = self.row1 if i == 1 else self.row2
        if i not in (1, 2) or not 1 <= j <= len(row):
            raise SpoException(f"Cell ({i},{j}) is not admissible in shape ({self.shape}).")
        return row[j - 1]

    def scan_word(self) -> tuple[Letter, ...]:
        """:return: the entries in scan order: rightmost column first, top to bottom."""
        return tuple(x for col in reversed(self.columns()) for x in col)

    def __lt__(self, other: Tableau) -> bool:
        return compare_tableaux(self, other) < 0

    def __str__(self):
        return render_ascii(self)


def highest_weight_tableau(shape: Shape) -> Tableau:
    """:return: the filling with 1 in every cell of the first row and 2 in the second row."""
    return Tableau(shape, (Letter.ONE,) * shape.l1, (Letter.TWO,) * shape.l2)


# ---------------------------------------------------------------------------------
# predicates

def _strict_column(col: Column) -> bool:
    if len(col) == 1:
        return True
    top, bottom = col
    return top < bottom or top is bottom is Letter.ZERO


def _kn_column(col: Column) -> bool:
    # 1 and 1̄ never share a column
    return _strict_column(col) and not (len(col) == 2 and col[0] is Letter.ONE and col[1] is Letter.ONE_BAR)


def _kn_adjacent(left: Column, right: Column) -> bool:
    """Row and adjacent-column conditions between two neighbouring columns."""
    for i in range(len(right)):
        if right[i] < left[i] or left[i] is right[i] is Letter.ZERO:
            return False
    # forbidden: 2 or 0 on top of the left column next to 2̄ at the bottom of the right one
    if len(right) == 2 and right[1] is Letter.TWO_BAR and left[0] in (Letter.TWO, Letter.ZERO):
        return False
    return True


def is_cst(t: Tableau) -> bool:
    """
    :return: True iff every column is strictly increasing downwards, except that a column
        may hold 0 twice. Rows are unconstrained.
    """
    return all(_strict_column(col) for col in t.columns())


def is_kn(t: Tableau) -> bool:
    """
    :return: True iff ``t`` is a KN tableau of spo(4|1):

        - rows weakly increase with at most one 0 per row, columns strictly increase
          except for a ``(0, 0)`` column;
        - no column contains both 1 and 1̄;
        - for no ``j`` is ``t(1, j)`` equal to 2 or 0 while ``t(2, j+1) = 2̄``.
    """
    columns = t.columns()
    return (all(_kn_column(col) for col in columns)
            and all(_kn_adjacent(left, right) for left, right in zip(columns, columns[1:])))


# ---------------------------------------------------------------------------------
# enumeration

def _column_candidates(height: int, accept: Callable[[Column], bool]) -> list[Column]:
    if height == 1:
        candidates = [(x,) for x in ALPHABET]
    else:
        candidates = [(x, y) for x in ALPHABET for y in ALPHABET]
    return [col for col in candidates if accept(col)]


def _fillings(shape: Shape,
              accept_column: Callable[[Column], bool],
              accept_adjacent: Callable[[Column, Column], bool]) -> Iterator[Tableau]:
    """
    Depth-first generation of fillings, choosing columns from right to left in increasing
    order, which yields the tableaux sorted by :func:`compare_tableaux`.
    """
    heights = [1] * shape.m1 + [2] * shape.m2
    candidates = {h: _column_candidates(h, accept_column) for h in set(heights)}
    chosen: list[Column] = []

    def extend(k: int) -> Iterator[Tableau]:
        if k == len(heights):
            yield Tableau.from_columns(shape, chosen[::-1])
            return
        for col in candidates[heights[k]]:
            if chosen and not accept_adjacent(col, chosen[-1]):
                continue
            chosen.append(col)
            yield from extend(k + 1)
            chosen.pop()

    yield from extend(0)


def iter_cst(shape: Shape) -> Iterator[Tableau]:
    """Lazy form of :func:`enumerate_cst`, same order."""
    return _fillings(shape, _strict_column, lambda left, right: True)


def enumerate_cst(shape: Shape) -> list[Tableau]:
    """
    :return: all column-strict tableaux of ``shape``, in increasing order; there are
        ``5^m1 · 11^m2`` of them.
    """
    ret = list(iter_cst(shape))
    log.debug("enumerated %d column-strict tableaux of shape (%s)", len(ret), shape)
    return ret


def enumerate_kn(shape: Shape) -> list[Tableau]:
    """
    :return: all KN tableaux of ``shape``, in increasing order. Their number is
        ``dim L(λ)``.
    """
    ret = list(_fillings(shape, _kn_column, _kn_adjacent))
    log.debug("enumerated %d KN tableaux of shape (%s)", len(ret), shape)
    return ret


# ---------------------------------------------------------------------------------
# order and weight

def compare_tableaux(t1: Tableau, t2: Tableau) -> int:
    """
    Total order on tableaux of one shape: the cells are scanned from the rightmost column to
    the leftmost, top to bottom within a column, and the first differing cell decides.

    :return: -1, 0 or 1 as ``t1 < t2``, ``t1 == t2`` or ``t1 > t2``.
    :raise: :exc:`SpoException` if the shapes differ.
    """
    if t1.shape != t2.shape:
        raise SpoException(f"Cannot compare tableaux of shapes ({t1.shape}) and ({t2.shape}).")
    for x, y in zip(t1.scan_word(), t2.scan_word()):
        if x is not y:
            return -1 if x < y else 1
    return 0


def tableau_weight(t: Tableau) -> Weight:
    """:return: ``wt(T) = (k1 - k1̄)·ε1 + (k2 - k2̄)·ε2``, counting letters in all cells."""
    ret = Weight()
    for x in t.row1 + t.row2:
        ret = ret + letter_weight(x)
    return ret


def weight_multiplicities(shape: Shape) -> dict[Weight, int]:
    """
    :return: weight -> number of KN tableaux of that weight, sorted by decreasing weight;
        the values add up to ``dim L(λ)``.
    """
    counts = Counter(tableau_weight(t) for t in enumerate_kn(shape))
    return dict(sorted(counts.items(), key=lambda item: (-item[0].c1, -item[0].c2)))


# ---------------------------------------------------------------------------------
# serialization

def tableau_to_json(t: Tableau) -> dict:
    return {"shape": t.shape.to_json(),
            "row1": [x.value for x in t.row1],
            "row2": [x.value for x in t.row2]}


def tableau_from_json(obj: dict | str) -> Tableau:
    """
    :param obj: a dict ``{"shape": [l1, l2], "row1": [...], "row2": [...]}`` or its JSON text.
    :raise: :exc:`SpoException` on malformed input.
    """
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as ex:
            raise SpoException(f"Invalid tableau JSON: {ex}") from ex
    try:
        shape = Shape(*obj["shape"])
        row1 = [Letter.parse(x) for x in obj["row1"]]
        row2 = [Letter.parse(x) for x in obj.get("row2", [])]
    except (KeyError, TypeError) as ex:
        raise SpoException(f"Invalid tableau object {obj!r}.") from ex
    return Tableau(shape, row1, row2)


def render_ascii(t: Tableau) -> str:
    """
    One line per non-empty row; every cell is padded to two characters, so barred letters
    (rendered with a leading ``-``) stay aligned.
    """
    rows = [row for row in (t.row1, t.row2) if row]
    return '\n'.join(' '.join(f'{x.text:>2}' for x in row) for row in rows)
