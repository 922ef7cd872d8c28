"""Execute one RunConfig: resolve the input, dispatch the algorithm, log the run."""

from __future__ import annotations

import time
import uuid
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from algorithms.gl import gl_array_direct, gl_array_fast, gl_array_matrix, gl_point
from algorithms.gli import gli_evaluate
from algorithms.grid import FunctionInput, Grid
from algorithms.rl import rl_array, rl_point
from algorithms.special import NumericOverflowError, check_rl_order, check_values
from config import AppConfig, get_config
from models import Algorithm, RunConfig, RunResult
from services.data_file import read_samples
from services.expr import compile_expression
from services.observability import LogContext, get_logger


class RunConfigError(ValueError):
    """Raised when a RunConfig is internally inconsistent."""


@dataclass(frozen=True)
class _Outcome:
    values: npt.NDArray[np.float64]
    endpoint_estimated: bool = False


_Handler = Callable[[float, FunctionInput, float, float, int, AppConfig], _Outcome]


def _gl_point(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int, _: AppConfig
) -> _Outcome:
    return _Outcome(np.array([gl_point(alpha, input_, a, b, n)]))


def _gl_fast(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int, _: AppConfig
) -> _Outcome:
    return _Outcome(gl_array_fast(alpha, input_, a, b, n))


def _gl_matrix(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int, app_config: AppConfig
) -> _Outcome:
    return _Outcome(
        gl_array_matrix(alpha, input_, a, b, n, dense_limit=app_config.dense_matrix_limit)
    )


def _gl_direct(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int, _: AppConfig
) -> _Outcome:
    return _Outcome(gl_array_direct(alpha, input_, a, b, n))


def _gli(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int, _: AppConfig
) -> _Outcome:
    result = gli_evaluate(alpha, input_, a, b, n)
    return _Outcome(result.values, endpoint_estimated=result.endpoint_estimated)


def _rl_point(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int, _: AppConfig
) -> _Outcome:
    return _Outcome(np.array([rl_point(alpha, input_, a, b, n)]))


def _rl(
    alpha: float, input_: FunctionInput, a: float, b: float, n: int, _: AppConfig
) -> _Outcome:
    return _Outcome(rl_array(alpha, input_, a, b, n))


ALGORITHMS: dict[Algorithm, _Handler] = {
    Algorithm.GL_POINT: _gl_point,
    Algorithm.GL: _gl_fast,
    Algorithm.GL_MATRIX: _gl_matrix,
    Algorithm.GL_DIRECT: _gl_direct,
    Algorithm.GLI: _gli,
    Algorithm.RL_POINT: _rl_point,
    Algorithm.RL: _rl,
}


def _resolve_input(config: RunConfig, points: int) -> FunctionInput:
    if config.expr is not None:
        return compile_expression(config.expr)
    assert config.data_file is not None
    return read_samples(config.data_file, points)


def _validate(config: RunConfig) -> None:
    if (config.expr is None) == (config.data_file is None):
        raise RunConfigError("exactly one of an expression or a data file must be given")
    if len(config.domain) != 2:
        raise RunConfigError(f"domain must be a pair (a, b), got {config.domain!r}")


def run(config: RunConfig, app_config: AppConfig | None = None) -> RunResult:
    """Compute the requested differintegral and package it with its metadata."""
    app_config = app_config or get_config()
    logger = get_logger()
    _validate(config)
    checked = check_values(config.alpha, config.a, config.b, config.points)
    if config.algorithm in {Algorithm.RL, Algorithm.RL_POINT}:
        check_rl_order(checked.alpha)

    context = LogContext(
        algorithm=config.algorithm.value,
        alpha=checked.alpha,
        points=checked.n,
        run_id=uuid.uuid4().hex[:12],
    )
    source = "expr" if config.expr is not None else "data_file"
    logger.info("run_started", context=context, a=checked.a, b=checked.b, source=source)
    started = time.perf_counter()

    try:
        input_ = _resolve_input(config, checked.n)
        outcome = ALGORITHMS[config.algorithm](
            checked.alpha, input_, checked.a, checked.b, checked.n, app_config
        )
        if not np.all(np.isfinite(outcome.values)):
            raise NumericOverflowError(
                f"{config.algorithm.value} produced a non-finite value; "
                "the result exceeds the double-precision range"
            )
    except Exception as exc:
        logger.info("run_failed", context=context, error_type=type(exc).__name__, error=str(exc))
        raise

    if outcome.endpoint_estimated:
        logger.warning(
            "gli_endpoint_estimated",
            context=context,
            detail="no usable sample past b; last entry copied from the one before",
        )

    grid = Grid(checked.a, checked.b, checked.n)
    x = np.array([checked.b]) if config.algorithm.is_point else grid.points()
    duration_ms = round((time.perf_counter() - started) * 1000.0, 3)
    logger.info("run_completed", context=context, duration_ms=duration_ms)

    return RunResult(
        algorithm=config.algorithm,
        alpha=checked.alpha,
        points=checked.n,
        a=checked.a,
        b=checked.b,
        h=grid.h,
        x=x,
        values=outcome.values,
        endpoint_estimated=outcome.endpoint_estimated,
    )
