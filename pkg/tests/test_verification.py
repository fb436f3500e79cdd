"""Tests for the self-check suite."""

import math

import pytest

from gad_negativity.models import VerificationLevel
from gad_negativity.services.verification import (
    check_anchors,
    check_closed_form,
    check_completeness,
    check_formula_census,
    check_literal_defect,
    check_printed_negativity_formula,
    format_report,
    run_verification,
)


@pytest.fixture(scope="module")
def fast_report():
    return run_verification(VerificationLevel.FAST, seed=7)


def test_fast_suite_passes(fast_report):
    assert fast_report.passed
    assert fast_report.failures == []
    names = [check.name for check in fast_report.checks]
    assert names[:3] == ["kraus_completeness", "literal_set_incomplete", "identity_at_zero_damping"]
    assert "closed_form_equivalence" in names


def test_literal_kraus_fails_completeness():
    report = run_verification(VerificationLevel.FAST, seed=7, literal_kraus=True)
    assert not report.passed
    assert [check.name for check in report.failures] == ["kraus_completeness"]


def test_same_seed_same_report(fast_report):
    again = run_verification(VerificationLevel.FAST, seed=7)
    for a, b in zip(again.checks, fast_report.checks):
        assert a.name == b.name
        assert a.passed == b.passed
        assert a.measured == b.measured or (math.isnan(a.measured) and math.isnan(b.measured))


def test_individual_checks():
    assert check_completeness().passed
    assert not check_completeness(literal=True).passed
    literal = check_literal_defect()
    assert literal.passed
    assert literal.measured == pytest.approx(0.25)
    assert check_anchors().passed
    assert check_closed_form(5).passed


def test_formula_census_is_informational():
    checks = check_formula_census(3)
    assert [c.name for c in checks] == [
        "printed_correlated_coefficients",
        "printed_uncorrelated_coefficients",
    ]
    assert not any(c.hard for c in checks)


def test_format_report(fast_report):
    text = format_report(fast_report)
    lines = text.splitlines()
    assert lines[0] == "verification level=fast seed=7"
    assert lines[-1] == "result: PASS"
    assert len(lines) == len(fast_report.checks) + 2


@pytest.mark.slow
def test_full_suite_passes():
    report = run_verification(VerificationLevel.FULL, seed=20140707)
    assert report.passed, format_report(report)


def test_printed_negativity_formula_is_informational(fast_report):
    check = check_printed_negativity_formula()
    assert not check.hard
    assert not check.passed
    assert check.measured == pytest.approx(0.375)
    assert "x=-0.5" in check.detail
    assert "formula -0.125" in check.detail
    assert "eigenvalues 0.25" in check.detail
    assert "printed_negativity_formula" in [c.name for c in fast_report.checks]
    assert fast_report.passed
