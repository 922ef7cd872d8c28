"""Shared pytest fixtures."""

from __future__ import annotations

import json
import logging
from collections.abc import Iterator
from typing import Any

import numpy as np
import pytest

from config import AppConfig, reset_config_cache
from services.observability import configure_logging


class _EventCollector(logging.Handler):
    def __init__(self) -> None:
        super().__init__(level=logging.DEBUG)
        self.events: list[dict[str, Any]] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.events.append(json.loads(record.getMessage()))


@pytest.fixture
def app_config() -> AppConfig:
    return AppConfig(
        log_level="WARNING",
        dense_matrix_limit=1024,
        output_digits=17,
        table_digits=12,
        benchmark_repeats=3,
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


@pytest.fixture
def captured_events() -> Iterator[list[dict[str, Any]]]:
    """Structured log events emitted while the test runs, at DEBUG and above."""
    configure_logging("DEBUG")
    collector = _EventCollector()
    logger = logging.getLogger("fraccalc")
    logger.addHandler(collector)
    yield collector.events
    logger.removeHandler(collector)
    configure_logging("WARNING")


@pytest.fixture
def clean_config_env(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    for name in (
        "FRACCALC_LOG_LEVEL",
        "FRACCALC_DENSE_MATRIX_LIMIT",
        "FRACCALC_OUTPUT_DIGITS",
        "FRACCALC_TABLE_DIGITS",
        "FRACCALC_BENCHMARK_REPEATS",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_config_cache()
    yield
    reset_config_cache()
