"""Wall-clock comparison of the GL evaluation paths."""

from __future__ import annotations

import statistics
import time
from collections.abc import Callable

import numpy as np

from algorithms.gl import DENSE_MATRIX_LIMIT, gl_array_direct, gl_array_fast, gl_array_matrix
from models import BenchmarkReport
from services.observability import LogContext, get_logger

BENCHMARK_ALPHA = 0.5
BENCHMARK_DOMAIN = (0.0, 1.0)


def median_runtime(operation: Callable[[], object], repeats: int) -> float:
    """Median wall time in seconds of `repeats` calls to operation."""
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1, got {repeats}")
    timings: list[float] = []
    for _ in range(repeats):
        started = time.perf_counter()
        operation()
        timings.append(time.perf_counter() - started)
    return statistics.median(timings)


def compare_paths(
    points: int,
    repeats: int,
    *,
    dense_limit: int = DENSE_MATRIX_LIMIT,
    seed: int = 0,
) -> BenchmarkReport:
    """Time the transform, matrix and direct-convolution GL paths on one random input."""
    samples = np.random.default_rng(seed).standard_normal(points)
    a, b = BENCHMARK_DOMAIN

    fast_seconds = median_runtime(
        lambda: gl_array_fast(BENCHMARK_ALPHA, samples, a, b, points), repeats
    )
    matrix_seconds = median_runtime(
        lambda: gl_array_matrix(BENCHMARK_ALPHA, samples, a, b, points, dense_limit=dense_limit),
        repeats,
    )
    direct_seconds = median_runtime(
        lambda: gl_array_direct(BENCHMARK_ALPHA, samples, a, b, points), repeats
    )
    report = BenchmarkReport(
        points=points,
        repeats=repeats,
        fast_seconds=fast_seconds,
        matrix_seconds=matrix_seconds,
        direct_seconds=direct_seconds,
    )
    get_logger().info(
        "benchmark_completed",
        context=LogContext(algorithm="gl", alpha=BENCHMARK_ALPHA, points=points),
        repeats=repeats,
        fast_seconds=fast_seconds,
        matrix_seconds=matrix_seconds,
        direct_seconds=direct_seconds,
    )
    return report
