"""Tests for result encoding."""

from __future__ import annotations

import json

import numpy as np
import pytest

from models import Algorithm, OutputFormat, RunResult
from services.formatter import build_payload, format_number, render_result
from services.validator import OutputValidationError


def _array_result(values: list[float] | None = None) -> RunResult:
    return RunResult(
        algorithm=Algorithm.GL,
        alpha=0.5,
        points=3,
        a=0.0,
        b=1.0,
        h=0.5,
        x=np.array([0.0, 0.5, 1.0]),
        values=np.array(values if values is not None else [0.0, 1.0 / 3.0, 2.0]),
    )


def _point_result() -> RunResult:
    return RunResult(
        algorithm=Algorithm.RL_POINT,
        alpha=0.5,
        points=120,
        a=0.0,
        b=1.0,
        h=1.0 / 119.0,
        x=np.array([1.0]),
        values=np.array([0.886226925452758]),
    )


def test_format_number_uses_significant_digits() -> None:
    assert format_number(1.0 / 3.0, 5) == "0.33333"
    assert format_number(2.0, 17) == "2"
    assert format_number(1.25e-7, 3) == "1.25e-07"


def test_csv_has_header_and_one_row_per_point() -> None:
    text = render_result(_array_result(), OutputFormat.CSV, digits=6)

    assert text == "x,value\n0,0\n0.5,0.333333\n1,2\n"


def test_plain_array_rows() -> None:
    text = render_result(_array_result(), OutputFormat.PLAIN, digits=6)

    assert text.splitlines() == ["0 0", "0.5 0.333333", "1 2"]


def test_plain_point_has_metadata_header() -> None:
    lines = render_result(_point_result(), OutputFormat.PLAIN, digits=12).splitlines()

    assert lines[0].startswith("# algorithm=rl-point alpha=0.5 points=120 h=")
    assert lines[1] == "0.886226925453"


def test_csv_point_has_metadata_line_before_header() -> None:
    lines = render_result(_point_result(), OutputFormat.CSV, digits=12).splitlines()

    assert lines[0].startswith("# algorithm=rl-point alpha=0.5 points=120 h=")
    assert lines[1:] == ["x,value", "1,0.886226925453"]


def test_json_payload_carries_metadata() -> None:
    payload = json.loads(render_result(_point_result(), OutputFormat.JSON))

    assert payload["meta"]["kind"] == "point"
    assert payload["meta"]["algorithm"] == "rl-point"
    assert payload["meta"]["endpoint_estimated"] is False
    assert payload["x"] == [1.0]
    assert payload["value"] == [0.886226925452758]


@pytest.mark.parametrize("digits", [3, 9, 17])
def test_csv_and_json_values_parse_identically(digits: int) -> None:
    result = _array_result([0.1234567890123, -2.0 / 3.0, 1e-9 / 7.0])

    csv_values = [
        float(line.split(",")[1])
        for line in render_result(result, OutputFormat.CSV, digits).splitlines()[1:]
    ]
    json_values = json.loads(render_result(result, OutputFormat.JSON, digits))["value"]

    assert csv_values == json_values


def test_build_payload_rounds_to_digits() -> None:
    payload = build_payload(_array_result(), digits=3)

    assert payload["value"] == [0.0, 0.333, 2.0]


def test_json_rejects_inconsistent_result() -> None:
    with pytest.raises(OutputValidationError):
        render_result(_array_result([1.0, 2.0]), OutputFormat.JSON)
