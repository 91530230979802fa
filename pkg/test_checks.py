"""Tests for the property suites and the check driver."""

import pytest

from src.core.checks import (
    SuiteReport, associativity_suite, group_suite, padic_suite, run_checks, word_evaluation_suite,
)
from src.core.errors import ParameterError
from src.core.yokonuma import RelationReport, YParams, y_g, y_one
from src.utils.sampling import ElementSampler


def _failures(reports):
    return [f"{report.name}/{r.name}: {r.detail}" for report in reports for r in report.failures()]


def test_report_keeps_first_counterexample():
    params = YParams(2, 2)
    report = RelationReport("demo")
    result = report.add("g_is_one", [
        ("same", y_one(params), y_one(params)),
        ("different", y_g(params, 1), y_one(params)),
        ("never reached", y_one(params), y_g(params, 1)),
    ])
    assert not result.passed
    assert result.checked == 2
    assert result.detail == "different: g[2,1] != 1"
    assert report.failures() == [result]
    assert not report.all_passed


def test_record():
    report = SuiteReport("demo", seed=7, samples=3)
    report.record("manual", True, 3)
    assert report.all_passed
    assert report.results[0].checked == 3


@pytest.mark.parametrize("d, n", [(1, 3), (2, 2), (3, 2)])
def test_algebra_suites(sampler, d, n):
    params = YParams(d, n)
    reports = [
        associativity_suite(params, 50, sampler),
        word_evaluation_suite(params, 50, sampler),
    ]
    assert not _failures(reports)
    assert [r.name for r in reports[1].results] == ["multiplicative", "respects_split", "inverse_word"]


def test_suites_refuse_large_algebras():
    with pytest.raises(ParameterError):
        associativity_suite(YParams(5, 5), 1)


@pytest.mark.parametrize("p, R", [(2, 6), (3, 4), (5, 3)])
def test_padic_suite(sampler, p, R):
    report = padic_suite(p, R, 1000, sampler)
    assert report.all_passed, _failures([report])
    assert report.samples == 1000


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_group_suite(sampler, n):
    report = group_suite(n, 100, p=3, r=2, sampler=sampler)
    assert report.all_passed, _failures([report])


def test_run_checks_classical():
    reports = run_checks(n=2, d=2, samples=10, seed=1)
    assert not _failures(reports)
    names = [report.name for report in reports]
    assert names[0] == "relations Y(d=2, n=2)"
    assert "framed braids n=2" in names
    assert not any(name.startswith("hecke") for name in names)


def test_run_checks_hecke():
    names = [report.name for report in run_checks(n=3, d=1, samples=5, seed=1)]
    assert "hecke collapse Y(d=1, n=3)" in names


def test_run_checks_padic_with_square():
    reports = run_checks(n=2, p=2, R=2, square=True, samples=5, seed=3)
    assert not _failures(reports)
    names = [report.name for report in reports]
    assert names[:2] == ["relations Y(d=2, n=2)", "relations Y(d=4, n=2)"]
    assert "commuting square p=2 R=2 n=2" in names


def test_run_checks_is_deterministic():
    first = run_checks(n=2, d=3, samples=5, seed=42)
    second = run_checks(n=2, d=3, samples=5, seed=42)
    assert first == second
    assert all(report.seed == 42 for report in first if getattr(report, "samples", 0))


@pytest.mark.parametrize("kwargs", [
    dict(n=2),
    dict(n=2, d=2, p=2, R=2),
    dict(n=2, p=4, R=2),
    dict(n=2, p=2),
    dict(n=5, d=5),
])
def test_run_checks_rejects_bad_parameters(kwargs):
    with pytest.raises(ParameterError):
        run_checks(samples=1, **kwargs)


def test_sampler_is_reproducible():
    params = YParams(3, 3)
    a, b = ElementSampler(5), ElementSampler(5)
    assert [a.element(params) for _ in range(5)] == [b.element(params) for _ in range(5)]
    assert a.word(3) == b.word(3)
    sub = a.element(params, subalgebra=True)
    assert all(basis_elt.framing[-1] == 0 and basis_elt.perm(3) == 3 for basis_elt, _ in sub.items())
