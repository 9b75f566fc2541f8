"""Lightweight in-process stage timing."""

import statistics
import time
from collections import defaultdict, deque
from contextlib import contextmanager
from typing import Iterator

_durations: dict[str, deque] = defaultdict(lambda: deque(maxlen=200))


def record_duration(stage: str, seconds: float) -> None:
    _durations[stage].append(seconds)


@contextmanager
def timed(stage: str) -> Iterator[None]:
    """Record the wall-clock duration of the enclosed block under ``stage``."""
    start = time.perf_counter()
    try:
        yield
    finally:
        record_duration(stage, time.perf_counter() - start)


def get_total(stage: str) -> float | None:
    samples = list(_durations[stage])
    if not samples:
        return None
    return sum(samples)


def get_stage_summary() -> dict:
    result = {}
    for stage, vals in _durations.items():
        if not vals:
            continue
        samples = list(vals)
        result[stage] = {
            "total_s": round(sum(samples), 3),
            "median_s": round(statistics.median(samples), 3),
            "sample_count": len(samples),
        }
    return result


def reset_metrics() -> None:
    _durations.clear()
