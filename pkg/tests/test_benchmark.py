"""Tests for the GL path benchmark."""

from __future__ import annotations

from typing import Any

import numpy as np
import pytest

from algorithms.gl import gl_array_fast, gl_array_matrix
from services.benchmark import compare_paths, median_runtime


def test_median_runtime_calls_operation_repeatedly() -> None:
    calls: list[int] = []

    seconds = median_runtime(lambda: calls.append(1), repeats=5)

    assert len(calls) == 5
    assert seconds >= 0.0


def test_median_runtime_rejects_zero_repeats() -> None:
    with pytest.raises(ValueError, match="at least 1"):
        median_runtime(lambda: None, repeats=0)


def test_compare_paths_reports_every_path(captured_events: list[dict[str, Any]]) -> None:
    report = compare_paths(128, 2, dense_limit=64)

    assert report.points == 128
    assert report.repeats == 2
    assert min(report.fast_seconds, report.matrix_seconds, report.direct_seconds) > 0.0
    assert report.speedup == report.matrix_seconds / report.fast_seconds
    (event,) = [event for event in captured_events if event["event"] == "benchmark_completed"]
    assert event["points"] == 128


@pytest.mark.benchmark
def test_fast_path_scales_like_n_log_n(rng: np.random.Generator) -> None:
    small = rng.standard_normal(2**12)
    large = rng.standard_normal(2**16)
    gl_array_fast(0.5, small, 0.0, 1.0, small.size)

    small_seconds = median_runtime(lambda: gl_array_fast(0.5, small, 0.0, 1.0, small.size), 5)
    large_seconds = median_runtime(lambda: gl_array_fast(0.5, large, 0.0, 1.0, large.size), 5)

    assert large_seconds < 32.0 * small_seconds


@pytest.mark.benchmark
def test_fast_path_beats_dense_matrix(rng: np.random.Generator) -> None:
    n = 2**15
    values = rng.standard_normal(n)

    fast_seconds = median_runtime(lambda: gl_array_fast(0.5, values, 0.0, 1.0, n), 3)
    matrix_seconds = median_runtime(lambda: gl_array_matrix(0.5, values, 0.0, 1.0, n), 1)

    assert matrix_seconds >= 4.0 * fast_seconds
