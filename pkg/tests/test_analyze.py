"""The full verification pipeline and its report."""

import json

import pytest

from bzloop.analyze import AnalysisReport, CheckResult, analyze
from bzloop.bl import bl_params


@pytest.fixture(scope="module")
def report22():
    return analyze(2, 1, class_bound=22)


def test_minimum_bound_passes(report22):
    assert report22.ok
    assert report22.failures() == []
    assert report22.class_bound == 22
    assert len(report22.checks) >= 20


def test_bound_validation():
    with pytest.raises(ValueError):
        analyze(2, 1, class_bound=21)


def test_default_bound_is_m_plus_two_periods():
    p = bl_params(2, 1)
    assert analyze(2, 1).class_bound == p.m + 2 * p.d == 48


def test_center_census_at_22(report22):
    assert [e.degree for e in report22.centers] == [5, 7, 15, 20, 21]
    assert [e.degree for e in report22.second_center_extras] == [19]
    for entry in report22.centers + report22.second_center_extras:
        assert len(entry.basis_labels) == 1
        assert len(entry.matched_theta) == 1


def test_quotient_summary(report22):
    assert report22.quotient_dims[1:] == (2,) + (1,) * 19
    assert set(report22.quotient_centralizers) <= {"x", "y"}
    assert report22.quotient_constituents == (4, 3, 4, 4, 3)


def test_dims_reflect_theta_weights(report22):
    two_dim = [d for d in range(1, 23) if report22.dims[d] == 2]
    assert two_dim == [1, 5, 7, 15, 19, 20, 21]


def test_check_names_are_stable(report22):
    names = [c.name for c in report22.checks]
    assert names[0] == "relators-vanish"
    assert "quotient-equals-construction" in names
    assert "census-chain-nonzero" in names
    assert len(names) == len(set(names))


def test_json_round_trip_is_deterministic(report22):
    blob1 = json.dumps(report22.to_json_dict(), sort_keys=True)
    blob2 = json.dumps(analyze(2, 1, class_bound=22).to_json_dict(), sort_keys=True)
    assert blob1 == blob2
    decoded = json.loads(blob1)
    assert decoded["format"] == "bl-analysis/1"
    assert decoded["ok"] is True
    assert decoded["params"]["d"] == 14
    assert decoded["dims"] == list(report22.dims[1:])
    assert decoded["centers"][0]["degree"] == 5


def test_render_text(report22):
    text = report22.render_text()
    assert text.rstrip().endswith("ALL CHECKS PASS")
    assert str(report22) == text
    for check in report22.checks:
        assert check.name in text


def test_check_result_str():
    assert str(CheckResult("demo", True, "3 instances")) == "demo: pass (3 instances)"
    assert str(CheckResult("demo", False, "")) == "demo: FAIL"


def test_failing_report_renders_failure(report22):
    bad = AnalysisReport(
        params=report22.params,
        class_bound=report22.class_bound,
        dims=report22.dims,
        centers=report22.centers,
        second_center_extras=report22.second_center_extras,
        quotient_dims=report22.quotient_dims,
        quotient_centralizers=report22.quotient_centralizers,
        quotient_constituents=report22.quotient_constituents,
        checks=report22.checks[:-1] + (CheckResult("demo", False, "broken"),),
    )
    assert not bad.ok
    assert [c.name for c in bad.failures()] == ["demo"]
    text = bad.render_text()
    assert f"FAILED: 1 of {len(bad.checks)} checks" in text
    assert not bad.to_json_dict()["ok"]


def test_larger_pair_passes():
    report = analyze(2, 2, class_bound=42)
    assert report.ok
    assert report.quotient_constituents[:2] == (8, 7)
