"""
Test the spoverma.verify module.
"""

import json

import pytest

from spoverma.algebra import Generator, Shape, SpoException, SuperMatrix
from spoverma.tableaux import enumerate_kn
from spoverma.verify import (DEFAULT_CLOSURE_BUDGET, Suite, SuiteReport, run_suite, run_suites, suite_algebra,
                             suite_bijection, suite_closure, suite_independence, suite_leading, suite_lemma,
                             suite_weights, sweep_shapes)
from spoverma.verma import enumerate_b

NATURAL = Shape(1, 0)
TRIVIAL = Shape(0, 0)


def strip_time(report: SuiteReport) -> dict:
    obj = report.to_json()
    del obj["wall_time_ms"]
    return obj


def test_suite_algebra():
    report = suite_algebra()
    assert report.passed
    assert report.checks_run > 0
    assert report.shape is None


def test_suite_algebra_alternative_e2():
    e2 = SuperMatrix.unit(2, 5) - SuperMatrix.unit(5, 4)
    report = suite_algebra(matrices={Generator.E2: e2})
    assert not report.passed
    assert "relation:{E2,F2}=H2" in [f.check for f in report.failures]


def test_suite_algebra_empty_subset():
    report = suite_algebra(generators=[])
    assert report.checks_run == 0
    assert report.passed


def test_suite_algebra_subset():
    report = suite_algebra(generators=[Generator.E1, Generator.F1, Generator.H1, Generator.H2])
    assert report.passed
    assert "relation:[E1,F1]=H1-H2" not in [f.check for f in report.failures]
    assert report.checks_run < suite_algebra().checks_run


@pytest.mark.parametrize("shape, pairings", [(NATURAL, 5), (TRIVIAL, 1), (Shape(3, 2), 105)])
def test_suite_bijection(shape, pairings):
    report = suite_bijection(shape)
    assert report.passed
    assert report.details["pairings"] == pairings
    assert report.details["kn"] == report.details["b"] == pairings


@pytest.mark.parametrize("shape", [NATURAL, TRIVIAL, Shape(2, 1)])
def test_suite_weights(shape):
    report = suite_weights(shape)
    assert report.passed
    assert report.checks_run > 0


@pytest.mark.parametrize("shape", [NATURAL, Shape(1, 1), TRIVIAL])
def test_suite_leading(shape):
    assert suite_leading(shape).passed


def test_suite_lemma():
    report = suite_lemma(Shape(2, 2))
    assert report.passed
    assert report.checks_run == 5
    assert report.details["beyond_b1"] == 5
    assert suite_lemma(TRIVIAL).checks_run == 1
    assert suite_lemma(Shape(4, 2)).passed


def test_suite_lemma_beyond_range():
    report = suite_lemma(Shape(1, 1))
    assert report.details["beyond_vanishes"]
    assert report.details["beyond_terms"] == 0


@pytest.mark.parametrize("shape, expected", [(NATURAL, 5), (TRIVIAL, 1), (Shape(3, 2), 105)])
def test_suite_independence(shape, expected):
    report = suite_independence(shape)
    assert report.passed
    assert report.details["rank"] == expected


@pytest.mark.parametrize("shape, expected", [(NATURAL, 5), (Shape(1, 1), 10), (TRIVIAL, 1)])
def test_suite_closure(shape, expected):
    report = suite_closure(shape)
    assert report.passed and not report.skipped
    assert report.details["submodule_dimension"] == report.details["kn"] == report.details["rank"] == expected


BUDGET_SHAPES = [shape for shape in (Shape.from_m(m1, m2) for m2 in range(6) for m1 in range(8))
                 if shape.ambient_dimension <= DEFAULT_CLOSURE_BUDGET]


@pytest.mark.parametrize("shape", sweep_shapes())
def test_bijection_and_weights_sweep(shape):
    assert suite_bijection(shape).passed
    assert suite_weights(shape).passed


def test_budget_shapes():
    assert len(BUDGET_SHAPES) == 27
    assert Shape(3, 3) in BUDGET_SHAPES and Shape(3, 2) in BUDGET_SHAPES
    assert Shape(7, 0) in BUDGET_SHAPES and Shape(8, 0) not in BUDGET_SHAPES


@pytest.mark.slow
@pytest.mark.parametrize("shape", BUDGET_SHAPES)
def test_independence_within_budget(shape):
    report = suite_independence(shape)
    assert report.passed
    assert report.details["rank"] == len(enumerate_kn(shape))


@pytest.mark.slow
@pytest.mark.parametrize("shape", BUDGET_SHAPES)
def test_closure_within_budget(shape):
    report = suite_closure(shape)
    assert report.passed and not report.skipped
    kn = len(enumerate_kn(shape))
    assert report.details["submodule_dimension"] == report.details["rank"] == kn == len(enumerate_b(shape))


@pytest.mark.slow
def test_closure_three_two_box_columns():
    report = suite_closure(Shape(3, 3))
    assert report.details["submodule_dimension"] == report.details["rank"] == report.details["kn"] == 770


def test_suite_closure_budget():
    report = suite_closure(Shape(3, 2), budget=100)
    assert report.skipped
    assert report.passed
    assert report.checks_run == 0
    assert report.details == {"ambient_dimension": 605, "budget": 100}


def test_report_json():
    obj = suite_bijection(NATURAL).to_json()
    assert list(obj) == ["suite", "shape", "checks_run", "failures", "wall_time_ms", "skipped", "details"]
    assert obj["suite"] == "bijection"
    assert obj["shape"] == [1, 0]
    assert json.loads(suite_bijection(NATURAL).to_json_line())["failures"] == []


def test_failure_payload():
    e2 = SuperMatrix.unit(2, 5) - SuperMatrix.unit(5, 4)
    obj = suite_algebra(matrices={Generator.E2: e2}).to_json()
    failure = next(f for f in obj["failures"] if f["check"] == "relation:{E2,F2}=H2")
    assert len(failure["input"]) == 5
    json.dumps(obj)


def test_reports_deterministic():
    assert strip_time(suite_leading(Shape(2, 1))) == strip_time(suite_leading(Shape(2, 1)))


def test_sweep_shapes():
    assert sweep_shapes(1, 1) == [Shape(0, 0), Shape(1, 1), Shape(1, 0), Shape(2, 1)]
    assert len(sweep_shapes()) == 16
    with pytest.raises(SpoException, match="non-negative"):
        sweep_shapes(-1, 0)


def test_run_suite():
    assert run_suite(Suite.CLOSURE, NATURAL, budget=DEFAULT_CLOSURE_BUDGET).details["kn"] == 5
    with pytest.raises(SpoException, match="does not depend on a shape"):
        run_suite(Suite.ALGEBRA, NATURAL)


def test_run_suites_order():
    reports = run_suites([NATURAL, Shape(1, 1)], [Suite.LEMMA, Suite.BIJECTION])
    assert [(r.suite, r.shape) for r in reports] == [
        (Suite.BIJECTION, NATURAL), (Suite.LEMMA, NATURAL),
        (Suite.BIJECTION, Shape(1, 1)), (Suite.LEMMA, Shape(1, 1)),
    ]
    assert all(r.passed for r in reports)


def test_run_suites_all():
    reports = run_suites([NATURAL])
    assert [r.suite for r in reports] == list(Suite)
    assert reports[0].shape is None
    assert all(r.passed for r in reports)


def test_run_suites_parallel():
    shapes = sweep_shapes(1, 1)
    suites = [Suite.BIJECTION, Suite.INDEPENDENCE]
    sequential = [strip_time(r) for r in run_suites(shapes, suites)]
    parallel = [strip_time(r) for r in run_suites(shapes, suites, jobs=2)]
    assert sequential == parallel
