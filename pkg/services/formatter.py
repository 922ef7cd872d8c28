"""Encode a RunResult as csv, json or plain text for stdout."""

from __future__ import annotations

import json
from typing import Any

from models import OutputFormat, RunResult
from services.validator import validate_result_payload


def format_number(value: float, digits: int) -> str:
    return f"{value:.{digits}g}"


def _rounded(value: float, digits: int) -> float:
    # JSON carries the value the csv text denotes, so both parse to the same double.
    return float(format_number(value, digits))


def build_payload(result: RunResult, digits: int) -> dict[str, Any]:
    """JSON-ready dict with a meta object and parallel x/value arrays."""
    return {
        "meta": {
            "algorithm": result.algorithm.value,
            "alpha": result.alpha,
            "points": result.points,
            "h": result.h,
            "a": result.a,
            "b": result.b,
            "kind": result.kind,
            "endpoint_estimated": result.endpoint_estimated,
        },
        "x": [_rounded(float(x), digits) for x in result.x],
        "value": [_rounded(float(v), digits) for v in result.values],
    }


def _point_header(result: RunResult, digits: int) -> str:
    return (
        f"# algorithm={result.algorithm.value} alpha={format_number(result.alpha, digits)} "
        f"points={result.points} h={format_number(result.h, digits)}"
    )


def _render_csv(result: RunResult, digits: int) -> str:
    lines = [_point_header(result, digits)] if result.kind == "point" else []
    lines.append("x,value")
    for x, value in zip(result.x, result.values, strict=True):
        lines.append(f"{format_number(float(x), digits)},{format_number(float(value), digits)}")
    return "\n".join(lines) + "\n"


def _render_json(result: RunResult, digits: int) -> str:
    payload = build_payload(result, digits)
    validate_result_payload(payload)
    return json.dumps(payload) + "\n"


def _render_plain(result: RunResult, digits: int) -> str:
    if result.kind == "point":
        value = format_number(float(result.values[0]), digits)
        return f"{_point_header(result, digits)}\n{value}\n"
    rows = (
        f"{format_number(float(x), digits)} {format_number(float(value), digits)}"
        for x, value in zip(result.x, result.values, strict=True)
    )
    return "\n".join(rows) + "\n"


def render_result(result: RunResult, fmt: OutputFormat, digits: int = 17) -> str:
    """Render result in the requested format with `digits` significant digits."""
    if fmt == OutputFormat.CSV:
        return _render_csv(result, digits)
    if fmt == OutputFormat.JSON:
        return _render_json(result, digits)
    return _render_plain(result, digits)
