"""Tests for report schemas."""

from app.schemas.reports import BreakdownComparisonRow, DualOracleReport, InvariantReport


def test_breakdown_discrepancy():
    row = BreakdownComparisonRow(label="trees", category="tree", published=7, orientation_count=10, reflection_count=7, matches=["reflection"])
    assert not row.discrepancy
    assert BreakdownComparisonRow(label="x", category="tree", published=3, orientation_count=5, reflection_count=5).discrepancy


def test_invariant_status():
    assert InvariantReport(et=12, graphs_checked=7).status == "PASS"
    assert InvariantReport(et=12, violations=["graph 0: bad index"]).status == "FAIL"


def test_dual_oracle_defaults():
    report = DualOracleReport(et_values=[12], max_index=12, agree=True)
    assert report.only_graphs == [] and report.classes == 0
