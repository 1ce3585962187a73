"""
Named verification suites. Each suite checks one family of statements about L(λ) for a
given shape and returns a :class:`SuiteReport`; reports serialize to one JSON object per
line. Suites never raise on a failed check: the offending input is recorded instead.

Example: ::

    from spoverma.algebra import Shape
    from spoverma.verify import Suite, run_suites

    for report in run_suites([Shape(3, 2)], [Suite.BIJECTION, Suite.CLOSURE]):
        print(report.to_json())
"""

from __future__ import annotations

import json
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterable, Optional

import numpy as np

from spoverma.algebra import (ALPHABET, Generator, InvariantViolation, Shape, StrEnum, SuperMatrix, SpoException,
                              act_letter, generator_matrix, is_spo_matrix, letter_vector, letter_weight,
                              root_decomposition, supercommutator)
from spoverma.modulespace import (apply_generator, basis_index_weight, f2_power_closed_form, highest_vector,
                                  leading_term, rank, sparse_vector_to_json, submodule_dimension, u_of_tableau,
                                  verma_family, verma_leading_coefficient)
from spoverma.tableaux import enumerate_kn, tableau_to_json, tableau_weight
from spoverma.verma import (BVector, enumerate_b, psi, satisfies_inequalities, tableau_of_b,
                            verma_weight)

log = logging.getLogger(__name__)

DEFAULT_CLOSURE_BUDGET = 200_000
"""Largest ``dim W = 5^m1 · 11^m2`` for which the closure suite runs; larger shapes are skipped."""

DEFAULT_SWEEP_MAX_M1 = 3
"""Default upper bound of ``m1`` in a sweep."""

DEFAULT_SWEEP_MAX_M2 = 3
"""Default upper bound of ``m2`` in a sweep."""


class Suite(StrEnum):
    """The verification suites, in the order a batch runs them."""
    ALGEBRA = 'algebra'
    BIJECTION = 'bijection'
    WEIGHTS = 'weights'
    LEADING = 'leading'
    LEMMA = 'lemma'
    INDEPENDENCE = 'independence'
    CLOSURE = 'closure'


@dataclass
class Failure:
    """A failed check: its id and the exact input that made it fail."""
    check: str
    input: Any

    def to_json(self) -> dict:
        return {"check": self.check, "input": self.input}


@dataclass
class SuiteReport:
    """
    The outcome of one suite on one shape. ``shape`` is ``None`` for the shape independent
    algebra suite. ``details`` holds suite specific numbers such as counts and ranks.
    """
    suite: Suite
    shape: Optional[Shape] = None
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time_ms: float = 0.0
    skipped: bool = False
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, check: str, ok: bool, payload: Any = None) -> bool:
        """Count one check; on failure record ``payload`` as its input."""
        self.checks_run += 1
        if not ok:
            self.failures.append(Failure(check, payload))
        return ok

    def to_json(self) -> dict:
        return {"suite": str(self.suite),
                "shape": self.shape.to_json() if self.shape is not None else None,
                "checks_run": self.checks_run,
                "failures": [f.to_json() for f in self.failures],
                "wall_time_ms": round(self.wall_time_ms, 3),
                "skipped": self.skipped,
                "details": self.details}

    def to_json_line(self) -> str:
        return json.dumps(self.to_json())


def _timed(suite: Suite, shape: Optional[Shape], body: Callable[[SuiteReport], None]) -> SuiteReport:
    report = SuiteReport(suite, shape)
    start = time.perf_counter()
    body(report)
    report.wall_time_ms = (time.perf_counter() - start) * 1000
    log.debug("suite %s on shape (%s): %d checks, %d failures", suite, shape, report.checks_run,
              len(report.failures))
    return report


# ---------------------------------------------------------------------------------
# algebra

_ROOTS = {
    Generator.E1: (1, -1),
    Generator.E2: (0, 1),
    Generator.F1: (-1, 1),
    Generator.F2: (0, -1),
}
"""(H1, H2)-eigenvalues of the root vectors under the adjoint action."""


def suite_algebra(generators: Optional[Iterable[Generator]] = None,
                  matrices: Optional[dict[Generator, SuperMatrix]] = None) -> SuiteReport:
    """
    Check the matrix realization on a subset of the generators:

    - each matrix has the block pattern of spo(4|1) and the parity of its generator;
    - every pairwise super bracket has the block pattern;
    - ``[E1, F1] = H1 - H2`` and ``{E2, F2} = H2``;
    - ``[Hi, X]`` is the root value of ``X`` times ``X``;
    - :func:`~spoverma.algebra.act_letter` agrees with the matrix-vector product;
    - the letter weights are the (H1, H2)-eigenvalues of the basis vectors.

    A check only runs when every generator it involves is in the subset.

    :param generators: the subset; all six if omitted.
    :param matrices: replacement matrices for some generators, e.g. to check an alternative
        normalization of ``E2``.
    """
    gens = tuple(Generator) if generators is None else tuple(Generator(g) for g in generators)
    mats = {g: generator_matrix(g) for g in Generator}
    mats.update(matrices or {})

    def body(report: SuiteReport):
        for g in gens:
            report.check(f"pattern:{g}", is_spo_matrix(mats[g]), str(g))
            report.check(f"parity:{g}", mats[g].parity == g.parity, str(g))
        for a, b in combinations(gens, 2):
            try:
                bracket = supercommutator(mats[a], mats[b])
            except SpoException:
                report.check(f"bracket:{a},{b}", False, [str(a), str(b)])
                continue
            report.check(f"bracket:{a},{b}", is_spo_matrix(bracket), bracket.to_json())
        if {Generator.E1, Generator.F1, Generator.H1, Generator.H2}.issubset(gens):
            bracket = supercommutator(mats[Generator.E1], mats[Generator.F1])
            report.check("relation:[E1,F1]=H1-H2", bracket == mats[Generator.H1] - mats[Generator.H2],
                         bracket.to_json())
        if {Generator.E2, Generator.F2, Generator.H2}.issubset(gens):
            bracket = supercommutator(mats[Generator.E2], mats[Generator.F2])
            report.check("relation:{E2,F2}=H2", bracket == mats[Generator.H2], bracket.to_json())
        for h, coordinate in ((Generator.H1, 0), (Generator.H2, 1)):
            if h not in gens:
                continue
            for x, root in _ROOTS.items():
                if x in gens:
                    bracket = supercommutator(mats[h], mats[x])
                    report.check(f"root:[{h},{x}]", bracket == root[coordinate] * mats[x], bracket.to_json())
            for letter in ALPHABET:
                vec = letter_vector(letter)
                eigenvalue = letter_weight(letter).to_json()[coordinate]
                report.check(f"letter-weight:{h},{letter}",
                             np.array_equal(mats[h].apply(vec), eigenvalue * vec), letter.value)
        for g in gens:
            if g.is_cartan:
                continue
            for letter in ALPHABET:
                image = act_letter(g, letter)
                expected = np.zeros(5, dtype=object) if image is None else image[0] * letter_vector(image[1])
                report.check(f"act-letter:{g},{letter}",
                             np.array_equal(mats[g].apply(letter_vector(letter)), expected), letter.value)

    return _timed(Suite.ALGEBRA, None, body)


# ---------------------------------------------------------------------------------
# combinatorics

def suite_bijection(shape: Shape) -> SuiteReport:
    """psi maps the KN tableaux of ``shape`` bijectively onto its valid b-vectors."""

    def body(report: SuiteReport):
        kn = enumerate_kn(shape)
        bvectors = enumerate_b(shape)
        images = Counter()
        for t in kn:
            b = psi(t)
            images[b] += 1
            report.check("psi-valid", satisfies_inequalities(b, shape),
                         {"tableau": tableau_to_json(t), "b": b.to_json()})
        for b, count in images.items():
            report.check("psi-injective", count == 1, b.to_json())
        pairings = 0
        for b in bvectors:
            if not report.check("psi-surjective", b in images, b.to_json()):
                continue
            if images[b] == 1:
                t = tableau_of_b(b, shape)
                pairings += report.check("round-trip", psi(t) == b, b.to_json())
        report.check("count", len(kn) == len(bvectors), {"kn": len(kn), "b": len(bvectors)})
        report.details.update(pairings=pairings, kn=len(kn), b=len(bvectors))

    return _timed(Suite.BIJECTION, shape, body)


def _safe_tableau(report: SuiteReport, b: BVector, shape: Shape):
    try:
        return tableau_of_b(b, shape)
    except InvariantViolation:
        report.check("unique-preimage", False, b.to_json())
        return None


def suite_weights(shape: Shape) -> SuiteReport:
    """
    For every valid b: the closed form weight, the weight of ``T(b)`` and the weight of every
    term of the expanded Verma vector coincide, and lie below λ.
    """

    def body(report: SuiteReport):
        lam = shape.highest_weight
        for b, v in verma_family(shape).items():
            weight = verma_weight(b, shape)
            payload = {"b": b.to_json(), "weight": weight.to_json()}
            report.check("below-highest", min(root_decomposition(lam, weight)) >= 0, payload)
            t = _safe_tableau(report, b, shape)
            if t is not None:
                report.check("tableau-weight", tableau_weight(t) == weight,
                             {**payload, "tableau": tableau_to_json(t)})
            report.check("support-weight", all(basis_index_weight(idx) == weight for idx in v.terms), payload)

    return _timed(Suite.WEIGHTS, shape, body)


# ---------------------------------------------------------------------------------
# vectors

def suite_leading(shape: Shape) -> SuiteReport:
    """
    For every valid b the leading term of the Verma vector sits at ``u(T(b))`` with
    coefficient ``⌊b1/2⌋! · b2! · ⌊b3/2⌋! · b4!``.
    """

    def body(report: SuiteReport):
        for b, v in verma_family(shape).items():
            lead = leading_term(v)
            if not report.check("nonzero", lead is not None, b.to_json()):
                continue
            t = _safe_tableau(report, b, shape)
            if t is None:
                continue
            coeff, idx = lead
            payload = {"b": b.to_json(), "tableau": tableau_to_json(t), "coeff": str(coeff)}
            report.check("leading-index", idx == u_of_tableau(t), payload)
            report.check("leading-coefficient", coeff == verma_leading_coefficient(b) and coeff > 0, payload)

    return _timed(Suite.LEADING, shape, body)


def suite_lemma(shape: Shape) -> SuiteReport:
    """
    ``f2^b1 v_λ`` obtained by repeated application equals the closed form for all
    ``b1 <= 2·m2``. The value at ``b1 = 2·m2 + 1`` is recorded in the details, not checked.
    """

    def body(report: SuiteReport):
        v = highest_vector(shape)
        for b1 in range(2 * shape.m2 + 1):
            report.check("closed-form", v == f2_power_closed_form(shape, b1), {"b1": b1})
            v = apply_generator(Generator.F2, v)
        report.details.update(beyond_b1=2 * shape.m2 + 1, beyond_vanishes=not v,
                              beyond_terms=len(v))
        if v:
            report.details["beyond_vector"] = sparse_vector_to_json(v)

    return _timed(Suite.LEMMA, shape, body)


def suite_independence(shape: Shape) -> SuiteReport:
    """The Verma vectors of ``shape`` are linearly independent."""

    def body(report: SuiteReport):
        vectors = list(verma_family(shape).values())
        r = rank(vectors)
        report.check("rank", r == len(vectors), {"rank": r, "b": len(vectors)})
        report.details.update(rank=r, b=len(vectors))

    return _timed(Suite.INDEPENDENCE, shape, body)


def suite_closure(shape: Shape, budget: int = DEFAULT_CLOSURE_BUDGET) -> SuiteReport:
    """
    The submodule generated by ``v_λ``, the KN tableaux and the Verma vectors all have the
    same size, so the Verma vectors form a basis of L(λ). Shapes with ``dim W > budget`` are
    skipped.
    """

    def body(report: SuiteReport):
        report.details.update(ambient_dimension=shape.ambient_dimension, budget=budget)
        if shape.ambient_dimension > budget:
            report.skipped = True
            log.info("closure of shape (%s) skipped: dim W = %d exceeds the budget %d",
                     shape, shape.ambient_dimension, budget)
            return
        dimension = submodule_dimension(shape)
        kn = len(enumerate_kn(shape))
        r = rank(verma_family(shape).values())
        payload = {"submodule_dimension": dimension, "kn": kn, "rank": r}
        report.check("closure-vs-kn", dimension == kn, payload)
        report.check("rank-vs-kn", r == kn, payload)
        report.details.update(submodule_dimension=dimension, kn=kn, rank=r)

    return _timed(Suite.CLOSURE, shape, body)


# ---------------------------------------------------------------------------------
# batches

SHAPE_SUITES: dict[Suite, Callable[[Shape], SuiteReport]] = {
    Suite.BIJECTION: suite_bijection,
    Suite.WEIGHTS: suite_weights,
    Suite.LEADING: suite_leading,
    Suite.LEMMA: suite_lemma,
    Suite.INDEPENDENCE: suite_independence,
}
"""Suites that take only a shape; the closure suite additionally takes a budget."""


def sweep_shapes(max_m1: int = DEFAULT_SWEEP_MAX_M1, max_m2: int = DEFAULT_SWEEP_MAX_M2) -> list[Shape]:
    """:return: all shapes with ``m1 <= max_m1`` and ``m2 <= max_m2``, ordered by ``(m1, m2)``."""
    if max_m1 < 0 or max_m2 < 0:
        raise SpoException(f"Sweep bounds must be non-negative, got max_m1={max_m1}, max_m2={max_m2}.")
    return [Shape.from_m(m1, m2) for m1 in range(max_m1 + 1) for m2 in range(max_m2 + 1)]


def run_suite(suite: Suite, shape: Shape, budget: int = DEFAULT_CLOSURE_BUDGET) -> SuiteReport:
    """Run one shape dependent suite."""
    suite = Suite(suite)
    if suite is Suite.CLOSURE:
        return suite_closure(shape, budget)
    if suite is Suite.ALGEBRA:
        raise SpoException("The algebra suite does not depend on a shape, call suite_algebra() instead.")
    return SHAPE_SUITES[suite](shape)


def _run_task(task: tuple[Suite, Shape, int]) -> SuiteReport:
    return run_suite(*task)


def run_suites(shapes: Iterable[Shape],
               suites: Optional[Iterable[Suite]] = None,
               budget: int = DEFAULT_CLOSURE_BUDGET,
               jobs: int = 1) -> list[SuiteReport]:
    """
    Run ``suites`` on every shape. The algebra suite, if requested, runs once first; then
    the reports come shape by shape, with suites in declaration order. The result does not
    depend on ``jobs``.

    :param suites: the suites to run; all of them if omitted.
    :param budget: the closure budget, see :func:`suite_closure`.
    :param jobs: number of worker processes; 1 runs everything in this process.
    """
    requested = set(Suite) if suites is None else {Suite(s) for s in suites}
    ordered = [s for s in Suite if s in requested]
    reports = []
    if Suite.ALGEBRA in ordered:
        reports.append(suite_algebra())
    tasks = [(s, shape, budget) for shape in shapes for s in ordered if s is not Suite.ALGEBRA]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports.extend(pool.map(_run_task, tasks))
    else:
        reports.extend(_run_task(task) for task in tasks)
    failed = sum(1 for r in reports if not r.passed)
    log.info("ran %d suite reports, %d with failures", len(reports), failed)
    return reports
