"""Centralized configuration loading for the fraccalc command-line tool."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv


class ConfigError(ValueError):
    """Raised when configuration is missing or invalid."""


VALID_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR"}

_DEFAULTS = {
    "FRACCALC_LOG_LEVEL": "WARNING",
    "FRACCALC_DENSE_MATRIX_LIMIT": "1024",
    "FRACCALC_OUTPUT_DIGITS": "17",
    "FRACCALC_TABLE_DIGITS": "12",
    "FRACCALC_BENCHMARK_REPEATS": "5",
}


@dataclass(frozen=True)
class AppConfig:
    """Typed application configuration loaded from environment variables."""

    log_level: str
    dense_matrix_limit: int
    output_digits: int
    table_digits: int
    benchmark_repeats: int


def _get_env(name: str) -> str:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return _DEFAULTS[name]
    return raw.strip()


def _parse_int(name: str, raw: str, minimum: int | None = None, maximum: int | None = None) -> int:
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"Invalid integer value for {name}: {raw!r}") from exc

    if minimum is not None and value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise ConfigError(f"{name} must be <= {maximum}, got {value}")
    return value


@lru_cache(maxsize=1)
def get_config(load_dotenv_file: bool = True) -> AppConfig:
    """Load and cache app configuration."""
    if load_dotenv_file:
        load_dotenv()

    log_level = _get_env("FRACCALC_LOG_LEVEL").upper()
    if log_level not in VALID_LOG_LEVELS:
        raise ConfigError(
            f"Invalid FRACCALC_LOG_LEVEL: {log_level!r}. Expected one of {sorted(VALID_LOG_LEVELS)}"
        )

    return AppConfig(
        log_level=log_level,
        dense_matrix_limit=_parse_int(
            "FRACCALC_DENSE_MATRIX_LIMIT",
            _get_env("FRACCALC_DENSE_MATRIX_LIMIT"),
            minimum=1,
        ),
        output_digits=_parse_int(
            "FRACCALC_OUTPUT_DIGITS",
            _get_env("FRACCALC_OUTPUT_DIGITS"),
            minimum=1,
            maximum=17,
        ),
        table_digits=_parse_int(
            "FRACCALC_TABLE_DIGITS",
            _get_env("FRACCALC_TABLE_DIGITS"),
            minimum=1,
            maximum=17,
        ),
        benchmark_repeats=_parse_int(
            "FRACCALC_BENCHMARK_REPEATS",
            _get_env("FRACCALC_BENCHMARK_REPEATS"),
            minimum=1,
        ),
    )


def reset_config_cache() -> None:
    """Clear memoized configuration for tests and process reloads."""
    get_config.cache_clear()
