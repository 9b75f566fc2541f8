"""Tests for stage timing."""

import pytest

from app.core.metrics import get_stage_summary, get_total, record_duration, reset_metrics, timed


@pytest.fixture(autouse=True)
def _reset():
    reset_metrics()
    yield
    reset_metrics()


def test_record_duration_adds_sample():
    record_duration("enumerate", 0.5)
    summary = get_stage_summary()
    assert summary["enumerate"]["sample_count"] == 1


def test_total_is_none_on_empty():
    assert get_total("never-ran") is None


def test_total_sums_samples():
    for s in (0.25, 0.25, 0.5):
        record_duration("classify", s)
    assert get_total("classify") == pytest.approx(1.0)


def test_summary_median():
    for s in (1.0, 2.0, 9.0):
        record_duration("hurwitz", s)
    summary = get_stage_summary()["hurwitz"]
    assert summary["median_s"] == 2.0
    assert summary["total_s"] == 12.0


def test_timed_records_even_on_error():
    with pytest.raises(RuntimeError):
        with timed("witness"):
            raise RuntimeError("boom")
    assert get_stage_summary()["witness"]["sample_count"] == 1


def test_samples_are_bounded():
    for _ in range(250):
        record_duration("subgroups", 0.001)
    assert get_stage_summary()["subgroups"]["sample_count"] == 200


def test_reset_clears_everything():
    record_duration("enumerate", 1.0)
    reset_metrics()
    assert get_stage_summary() == {}
