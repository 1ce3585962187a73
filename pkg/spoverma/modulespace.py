"""
Exact realization of L(λ) inside the super tensor module

    W = V^{⊗m1} ⊗ (∧²V)^{⊗m2},   V = C^{4|1},

where ∧² is the super exterior square (exterior on the even part, symmetric on the odd part).
Vectors are :class:`SparseVector` objects: finite maps from :class:`BasisIndex` to non-zero
Python ints. A basis index is the tensor word ``ε_{i1} ⊗ ... ⊗ ε_{i_m1} ⊗ (ε_{j1} ∧ ε_{k1}) ⊗ ...``;
it corresponds to the column-strict tableau whose rightmost one-box column holds ``i1`` and
whose rightmost two-box column holds ``j1`` over ``k1``. Its flat word of letters therefore
coincides with the scan word of that tableau, and comparing flat words compares tableaux.

Generators act as super derivations: acting on the factor at position ``p`` picks up the
Koszul sign ``(-1)^{|g|·(|x_1| + ... + |x_{p-1}|)}``.
"""

from __future__ import annotations

import json
import logging
import math
import operator
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import combinations
from typing import Iterable, Iterator, Optional

from spoverma.algebra import (Generator, InvariantViolation, LETTER_VECTORS, Letter, Shape, SpoException,
                              Weight, act_letter, letter_weight)
from spoverma.tableaux import Tableau, highest_weight_tableau, is_cst
from spoverma.verma import BVector, enumerate_b

log = logging.getLogger(__name__)

RAISING_AND_LOWERING = (Generator.E1, Generator.E2, Generator.F1, Generator.F2)
"""The generators used to close up the cyclic submodule."""

_INDEX_KEY = operator.attrgetter('key')


# ---------------------------------------------------------------------------------
# basis of W

@dataclass(frozen=True, slots=True)
class WedgePair:
    """
    The basis vector ``ε_lo ∧ ε_hi`` of ∧²V, with ``lo < hi`` or ``lo = hi = 0``.

    :raises SpoException: for any other pair of letters.
    """
    lo: Letter
    hi: Letter

    def __post_init__(self):
        if not (self.lo < self.hi or self.lo is self.hi is Letter.ZERO):
            raise SpoException(f"Invalid wedge pair ({self.lo},{self.hi}): expected lo < hi or lo = hi = 0.")

    @property
    def parity(self) -> int:
        return self.lo.parity ^ self.hi.parity

    def to_json(self) -> list[int]:
        return [self.lo.value, self.hi.value]


@dataclass(frozen=True, slots=True)
class BasisIndex:
    """
    A canonical basis element of W: ``singles`` are the V factors and ``pairs`` the ∧²V
    factors, both in tensor order. Indices sort like the corresponding tableaux.
    """
    singles: tuple[Letter, ...]
    pairs: tuple[WedgePair, ...]
    key: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'key', tuple(x.rank for x in self.word()))

    def word(self) -> tuple[Letter, ...]:
        """:return: the flat word: the singles, then the two letters of each pair."""
        return self.singles + tuple(x for pair in self.pairs for x in (pair.lo, pair.hi))

    @property
    def parity(self) -> int:
        return sum(x.parity for x in self.word()) % 2

    @property
    def shape(self) -> Shape:
        return Shape.from_m(len(self.singles), len(self.pairs))

    def __lt__(self, other: BasisIndex) -> bool:
        return self.key < other.key

    def to_tableau(self) -> Tableau:
        """:return: the column-strict tableau ``Y`` with ``u(Y) = self``."""
        row1 = [p.lo for p in reversed(self.pairs)] + list(reversed(self.singles))
        row2 = [p.hi for p in reversed(self.pairs)]
        return Tableau(self.shape, row1, row2)

    def to_json(self) -> dict:
        return {"singles": [x.value for x in self.singles],
                "pairs": [p.to_json() for p in self.pairs]}


def canonical_wedge(a: Letter, c: Letter) -> Optional[tuple[int, WedgePair]]:
    """
    Normalize ``ε_a ∧ ε_c`` with ``x ∧ y = -(-1)^{|x||y|} y ∧ x``.

    :return: ``(sign, pair)`` with ``ε_a ∧ ε_c = sign · pair``, or ``None`` when the
        product vanishes (a repeated even letter).
    """
    if a is c:
        return (1, WedgePair(a, c)) if a is Letter.ZERO else None
    if a < c:
        return 1, WedgePair(a, c)
    sign = 1 if a.parity and c.parity else -1
    return sign, WedgePair(c, a)


def u_of_tableau(y: Tableau) -> BasisIndex:
    """
    The tensor basis vector ``u(Y)``: the one-box columns read right to left give the V
    factors, the two-box columns read right to left give the ∧²V factors.

    :raise: :exc:`SpoException` if ``y`` is not column-strict.
    """
    if not is_cst(y):
        raise SpoException(f"u(Y) is only defined for column-strict tableaux, got {y.row1}/{y.row2}.")
    m2 = y.shape.m2
    singles = tuple(reversed(y.row1[m2:]))
    pairs = tuple(WedgePair(y.row1[j], y.row2[j]) for j in reversed(range(m2)))
    return BasisIndex(singles, pairs)


def basis_index_weight(idx: BasisIndex) -> Weight:
    """:return: the sum of the letter weights of all letters of the index."""
    ret = Weight()
    for x in idx.word():
        ret = ret + letter_weight(x)
    return ret


# ---------------------------------------------------------------------------------
# vectors

class SparseVector:
    """
    An element of W with exact integer coefficients. Zero coefficients are never stored.
    Instances are not modified after construction.

    :param shape: the shape determining W.
    :param terms: basis index -> coefficient; zero coefficients are dropped.
    """

    def __init__(self, shape: Shape, terms: Optional[dict[BasisIndex, int]] = None):
        self.shape = shape
        self.terms: dict[BasisIndex, int] = {idx: c for idx, c in (terms or {}).items() if c != 0}

    @classmethod
    def basis(cls, shape: Shape, idx: BasisIndex, coeff: int = 1) -> SparseVector:
        return cls(shape, {idx: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: SparseVector) -> SparseVector:
        self._check_shape(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            terms[idx] = terms.get(idx, 0) + c
        return SparseVector(self.shape, terms)

    def __sub__(self, other: SparseVector) -> SparseVector:
        return self + (-1) * other

    def __neg__(self) -> SparseVector:
        return (-1) * self

    def __rmul__(self, scalar: int) -> SparseVector:
        return SparseVector(self.shape, {idx: scalar * c for idx, c in self.terms.items()})

    def coefficient(self, idx: BasisIndex) -> int:
        return self.terms.get(idx, 0)

    def items(self) -> Iterator[tuple[BasisIndex, int]]:
        """:return: the terms, largest index first."""
        return iter(sorted(self.terms.items(), key=lambda item: item[0].key, reverse=True))

    def _check_shape(self, other: SparseVector):
        if self.shape != other.shape:
            raise SpoException(f"Vectors of shapes ({self.shape}) and ({other.shape}) live in different spaces.")

    def __repr__(self):
        return f'SparseVector(({self.shape}), {len(self.terms)} terms)'


_DECIMAL = re.compile(r"-?[0-9]+")


def sparse_vector_to_json(v: SparseVector) -> dict:
    """
    ``{"shape": [l1, l2], "terms": [{"coeff": "<int>", "singles": [...], "pairs": [[j, k], ...]}]}``
    with terms sorted by decreasing index and coefficients as decimal strings.
    """
    return {"shape": v.shape.to_json(),
            "terms": [{"coeff": str(c), **idx.to_json()} for idx, c in v.items()]}


def sparse_vector_from_json(obj: dict | str) -> SparseVector:
    """:raise: :exc:`SpoException` on malformed input or indices of the wrong shape."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as ex:
            raise SpoException(f"Invalid vector JSON: {ex}") from ex
    try:
        shape = Shape(*obj["shape"])
        terms = {}
        for term in obj["terms"]:
            idx = BasisIndex(tuple(Letter.parse(x) for x in term["singles"]),
                             tuple(WedgePair(Letter.parse(j), Letter.parse(k)) for j, k in term["pairs"]))
            if idx.shape != shape:
                raise SpoException(f"Term {term!r} does not belong to shape ({shape}).")
            coeff = term["coeff"]
            if not isinstance(coeff, str) or not _DECIMAL.fullmatch(coeff):
                raise SpoException(f"Coefficient {coeff!r} is not a decimal integer string.")
            terms[idx] = terms.get(idx, 0) + int(coeff)
    except (KeyError, TypeError, ValueError) as ex:
        raise SpoException(f"Invalid vector object: {ex}") from ex
    return SparseVector(shape, terms)


def highest_vector(shape: Shape) -> SparseVector:
    """:return: ``v_λ = ε1^{⊗m1} ⊗ (ε1 ∧ ε2)^{⊗m2}``."""
    return SparseVector.basis(shape, u_of_tableau(highest_weight_tableau(shape)))


def natural_coordinates(v: SparseVector) -> tuple[int, ...]:
    """
    :return: the coordinates of a vector of the natural representation (shape ``(1,0)``)
        in the standard basis ε1, ..., ε5.
    """
    if v.shape != Shape(1, 0):
        raise SpoException(f"Coordinates are only defined for shape (1,0), got ({v.shape}).")
    coords = [0] * 5
    for idx, c in v.terms.items():
        sign, coordinate = LETTER_VECTORS[idx.singles[0]]
        coords[coordinate] += sign * c
    return tuple(coords)


# ---------------------------------------------------------------------------------
# generator action

def _act_wedge(g: Generator, pair: WedgePair) -> dict[WedgePair, int]:
    """``g(x ∧ y) = g(x) ∧ y + (-1)^{|g||x|} x ∧ g(y)``, canonicalized."""
    x, y = pair.lo, pair.hi
    ret: dict[WedgePair, int] = {}
    image = act_letter(g, x)
    if image is not None:
        scalar, gx = image
        wedge = canonical_wedge(gx, y)
        if wedge is not None:
            ret[wedge[1]] = ret.get(wedge[1], 0) + scalar * wedge[0]
    image = act_letter(g, y)
    if image is not None:
        scalar, gy = image
        if g.parity and x.parity:
            scalar = -scalar
        wedge = canonical_wedge(x, gy)
        if wedge is not None:
            ret[wedge[1]] = ret.get(wedge[1], 0) + scalar * wedge[0]
    return {p: c for p, c in ret.items() if c != 0}


def _cartan_eigenvalue(g: Generator, idx: BasisIndex) -> int:
    weight = basis_index_weight(idx)
    return weight.c1 if g is Generator.H1 else weight.c2


@lru_cache(maxsize=1 << 18)
def _act_on_index(g: Generator, idx: BasisIndex) -> tuple[tuple[BasisIndex, int], ...]:
    ret: list[tuple[BasisIndex, int]] = []
    koszul = 0
    singles, pairs = idx.singles, idx.pairs
    for p, x in enumerate(singles):
        image = act_letter(g, x)
        if image is not None:
            scalar, y = image
            sign = -1 if g.parity and koszul else 1
            ret.append((BasisIndex(singles[:p] + (y,) + singles[p + 1:], pairs), sign * scalar))
        koszul ^= x.parity
    for p, pair in enumerate(pairs):
        sign = -1 if g.parity and koszul else 1
        for new_pair, c in _act_wedge(g, pair).items():
            ret.append((BasisIndex(singles, pairs[:p] + (new_pair,) + pairs[p + 1:]), sign * c))
        koszul ^= pair.parity
    return tuple(ret)


def apply_generator(g: Generator, v: SparseVector) -> SparseVector:
    """
    Act with a generator on a vector of W. ``H1`` and ``H2`` multiply each term by the
    corresponding coordinate of its weight; the root vectors act as super derivations across
    the tensor factors, and inside a ∧²V factor by
    ``g(x ∧ y) = g(x) ∧ y + (-1)^{|g||x|} x ∧ g(y)``.
    """
    g = Generator(g)
    if g.is_cartan:
        return SparseVector(v.shape, {idx: c * _cartan_eigenvalue(g, idx) for idx, c in v.terms.items()})
    terms: dict[BasisIndex, int] = {}
    for idx, c in v.terms.items():
        for new_idx, a in _act_on_index(g, idx):
            terms[new_idx] = terms.get(new_idx, 0) + a * c
    return SparseVector(v.shape, terms)


def apply_power(g: Generator, exponent: int, v: SparseVector) -> SparseVector:
    """:return: ``g^exponent · v``; stops early once the vector vanishes."""
    for _ in range(exponent):
        if not v:
            break
        v = apply_generator(g, v)
    return v


def verma_vector(b: BVector, shape: Shape) -> SparseVector:
    """
    :return: ``f1^b4 f2^b3 f1^b2 f2^b1 v_λ``. Defined for every ``b``; out of range
        exponents may give the zero vector.
    """
    v = highest_vector(shape)
    for g, exponent in ((Generator.F2, b.b1), (Generator.F1, b.b2), (Generator.F2, b.b3), (Generator.F1, b.b4)):
        v = apply_power(g, exponent, v)
    return v


def verma_family(shape: Shape, bvectors: Optional[Iterable[BVector]] = None) -> dict[BVector, SparseVector]:
    """
    Compute many Verma vectors at once, sharing the partial products ``f2^b1 v_λ``,
    ``f1^b2 f2^b1 v_λ`` and ``f2^b3 f1^b2 f2^b1 v_λ`` between b-vectors.

    :param bvectors: the exponents; all valid b-vectors of ``shape`` if omitted.
    :return: b-vector -> Verma vector, in the order of ``bvectors``.
    """
    if bvectors is None:
        bvectors = enumerate_b(shape)
    bvectors = list(bvectors)
    cache: dict[tuple[int, ...], SparseVector] = {(): highest_vector(shape)}
    steps = (Generator.F2, Generator.F1, Generator.F2, Generator.F1)

    def prefix(exps: tuple[int, ...]) -> SparseVector:
        if exps in cache:
            return cache[exps]
        *head, last = exps
        head = tuple(head)
        if last == 0:
            ret = prefix(head)
        else:
            ret = apply_generator(steps[len(exps) - 1], prefix(head + (last - 1,)))
        cache[exps] = ret
        return ret

    return {b: prefix(tuple(b)) for b in bvectors}


def f2_power_closed_form(shape: Shape, b1: int) -> SparseVector:
    """
    The closed form of ``f2^b1 v_λ`` for ``b1 <= 2·m2``. With ``k = b1 // 2``:

    - even ``b1``: ``k!`` times the sum over all k-subsets of ∧²V positions replaced by
      ``ε1 ∧ ε2̄``;
    - odd ``b1``: ``k!`` times the sum over k-subsets and one further position ``j``
      replaced by ``ε1 ∧ ε0``.

    All other factors keep their value in ``v_λ``.

    :raise: :exc:`SpoException` if ``b1 > 2·m2``.
    """
    m1, m2 = shape.m1, shape.m2
    if b1 < 0 or b1 > 2 * m2:
        raise SpoException(f"The closed form of f2^b1 v_λ needs 0 <= b1 <= 2·m2 = {2 * m2}, got b1 = {b1}.")
    k, odd = divmod(b1, 2)
    singles = (Letter.ONE,) * m1
    plain = WedgePair(Letter.ONE, Letter.TWO)
    lowered = WedgePair(Letter.ONE, Letter.TWO_BAR)
    middle = WedgePair(Letter.ONE, Letter.ZERO)
    coefficient = math.factorial(k)
    terms: dict[BasisIndex, int] = {}
    for subset in combinations(range(m2), k):
        others = [j for j in range(m2) if j not in subset] if odd else [None]
        for j in others:
            pairs = tuple(lowered if t in subset else middle if t == j else plain for t in range(m2))
            idx = BasisIndex(singles, pairs)
            terms[idx] = terms.get(idx, 0) + coefficient
    return SparseVector(shape, terms)


# ---------------------------------------------------------------------------------
# leading terms and rank

def leading_term(v: SparseVector) -> Optional[tuple[int, BasisIndex]]:
    """
    :return: ``(coefficient, index)`` of the largest index in the support of ``v`` under
        the tableau order, or ``None`` for the zero vector.
    """
    if not v:
        return None
    idx = max(v.terms, key=_INDEX_KEY)
    return v.terms[idx], idx


def verma_leading_coefficient(b: BVector) -> int:
    """:return: ``⌊b1/2⌋! · b2! · ⌊b3/2⌋! · b4!``."""
    return (math.factorial(b.b1 // 2) * math.factorial(b.b2)
            * math.factorial(b.b3 // 2) * math.factorial(b.b4))


class EchelonBasis:
    """
    An incrementally built row echelon form over the integers. Each stored row is keyed by
    its pivot, the largest index of its support; rows are divided by the gcd of their
    coefficients and have a positive pivot. New vectors are reduced by fraction-free cross
    cancellation ``r[p]·v - v[p]·r``, followed by exact division by the content.
    """

    def __init__(self, shape: Shape):
        self.shape = shape
        self.rows: dict[BasisIndex, dict[BasisIndex, int]] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: SparseVector) -> dict[BasisIndex, int]:
        """:return: the terms of ``v`` reduced against the stored rows; empty if ``v`` is in their span."""
        terms = dict(v.terms)
        while terms:
            pivot = max(terms, key=_INDEX_KEY)
            row = self.rows.get(pivot)
            if row is None:
                break
            a, c = row[pivot], terms[pivot]
            new_terms = {idx: a * coeff for idx, coeff in terms.items()}
            for idx, coeff in row.items():
                value = new_terms.get(idx, 0) - c * coeff
                if value:
                    new_terms[idx] = value
                else:
                    new_terms.pop(idx, None)
            terms = _primitive(new_terms)
        return terms

    def insert(self, v: SparseVector) -> bool:
        """
        Add ``v`` to the span.

        :return: True iff the rank grew.
        :raise: :exc:`SpoException` if ``v`` belongs to another shape.
        """
        if v.shape != self.shape:
            raise SpoException(f"Cannot insert a vector of shape ({v.shape}) into a span of shape ({self.shape}).")
        terms = self.reduce(v)
        if not terms:
            return False
        pivot = max(terms, key=_INDEX_KEY)
        if terms[pivot] < 0:
            terms = {idx: -c for idx, c in terms.items()}
        self.rows[pivot] = terms
        return True

    def __contains__(self, v: SparseVector) -> bool:
        return not self.reduce(v)


def _primitive(terms: dict[BasisIndex, int]) -> dict[BasisIndex, int]:
    if not terms:
        return terms
    content = reduce(math.gcd, terms.values())
    if content == 1:
        return terms
    return {idx: c // content for idx, c in terms.items()}


def rank(vectors: Iterable[SparseVector]) -> int:
    """
    :return: the rank over the rationals of ``vectors``, computed by exact fraction-free
        elimination; rows are processed in input order, pivots are the largest indices.
    :raise: :exc:`SpoException` if the vectors do not share one shape.
    """
    vectors = list(vectors)
    if not vectors:
        return 0
    basis = EchelonBasis(vectors[0].shape)
    for v in vectors:
        basis.insert(v)
    return basis.rank


def submodule_dimension(shape: Shape, generators: Iterable[Generator] = RAISING_AND_LOWERING) -> int:
    """
    Dimension of the smallest subspace of W that contains ``v_λ`` and is stable under
    ``generators``. Vectors are explored breadth first and kept only when they increase the
    rank, so the loop stops after at most ``5^m1 · 11^m2`` insertions.
    """
    generators = tuple(generators)
    basis = EchelonBasis(shape)
    start = highest_vector(shape)
    basis.insert(start)
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for g in generators:
            w = apply_generator(g, v)
            if w and basis.insert(w):
                queue.append(w)
                if basis.rank > shape.ambient_dimension:
                    raise InvariantViolation(f"Rank {basis.rank} exceeds dim W = {shape.ambient_dimension}.")
        log.debug("closure of shape (%s): rank %d, %d vectors queued", shape, basis.rank, len(queue))
    return basis.rank
