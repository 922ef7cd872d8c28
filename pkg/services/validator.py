"""Validation helpers for result payloads before they are emitted."""

from __future__ import annotations

from typing import Any

from jsonschema import ValidationError, validate

from services.schemas import RESULT_SCHEMA


class OutputValidationError(ValueError):
    """Raised when a result payload fails schema or consistency checks."""


def validate_json_payload(payload: dict[str, Any], schema: dict[str, object]) -> None:
    """Validate payload against schema and surface clean error messages."""
    try:
        validate(instance=payload, schema=schema)
    except ValidationError as exc:
        path = ".".join(str(part) for part in exc.path)
        context = f" at {path}" if path else ""
        raise OutputValidationError(f"Schema validation failed{context}: {exc.message}") from exc


def validate_result_payload(payload: dict[str, Any]) -> None:
    """Schema check plus the cross-field rules the schema cannot express."""
    validate_json_payload(payload, RESULT_SCHEMA)
    if len(payload["x"]) != len(payload["value"]):
        raise OutputValidationError(
            f"x has {len(payload['x'])} entries but value has {len(payload['value'])}"
        )
    meta = payload["meta"]
    expected = 1 if meta["kind"] == "point" else meta["points"]
    if len(payload["value"]) != expected:
        raise OutputValidationError(
            f"{meta['kind']} result must carry {expected} value(s), got {len(payload['value'])}"
        )
    if not meta["b"] > meta["a"]:
        raise OutputValidationError(f"domain [{meta['a']}, {meta['b']}] is empty or inverted")
