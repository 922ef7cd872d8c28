"""JSON schema for differintegration results written with --format json."""

from __future__ import annotations

RESULT_SCHEMA: dict[str, object] = {
    "type": "object",
    "required": ["meta", "x", "value"],
    "additionalProperties": False,
    "properties": {
        "meta": {
            "type": "object",
            "required": [
                "algorithm",
                "alpha",
                "points",
                "h",
                "a",
                "b",
                "kind",
                "endpoint_estimated",
            ],
            "additionalProperties": False,
            "properties": {
                "algorithm": {
                    "type": "string",
                    "enum": ["gl-point", "gl", "gl-matrix", "gl-direct", "gli", "rl-point", "rl"],
                },
                "alpha": {"type": "number"},
                "points": {"type": "integer", "minimum": 2},
                "h": {"type": "number", "exclusiveMinimum": 0},
                "a": {"type": "number"},
                "b": {"type": "number"},
                "kind": {"type": "string", "enum": ["point", "array"]},
                "endpoint_estimated": {"type": "boolean"},
            },
        },
        "x": {"type": "array", "minItems": 1, "items": {"type": "number"}},
        "value": {"type": "array", "minItems": 1, "items": {"type": "number"}},
    },
}
