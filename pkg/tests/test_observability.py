"""Tests for structured JSON logging."""

from __future__ import annotations

from typing import Any

from services.observability import LogContext, configure_logging, get_logger


def test_events_are_json_with_context(captured_events: list[dict[str, Any]]) -> None:
    context = LogContext(algorithm="gl", alpha=0.5, points=120, run_id="abc123")

    get_logger().info("run_started", context=context, source="expr")

    (event,) = captured_events
    assert event["event"] == "run_started"
    assert event["level"] == "info"
    assert event["algorithm"] == "gl"
    assert event["alpha"] == 0.5
    assert event["points"] == 120
    assert event["run_id"] == "abc123"
    assert event["source"] == "expr"
    assert "timestamp" in event


def test_context_extras_are_merged(captured_events: list[dict[str, Any]]) -> None:
    get_logger().warning("note", context=LogContext(extras={"digits": 12}))

    assert captured_events[0]["digits"] == 12
    assert "algorithm" not in captured_events[0]


def test_threshold_filters_lower_levels(captured_events: list[dict[str, Any]]) -> None:
    logger = configure_logging("warning")

    logger.debug("hidden")
    logger.info("hidden")
    logger.warning("shown")
    logger.error("also_shown")

    assert [event["event"] for event in captured_events] == ["shown", "also_shown"]


def test_get_logger_is_a_singleton() -> None:
    assert get_logger() is get_logger()
    assert configure_logging("WARNING") is get_logger()
