"""Reproduce the half-derivative validation table on [0, 1].

Three test functions with closed-form differintegrals are each run through
GL, GLI and RL and compared at x = 1. The lower terminal is 0, so every exact
value below is the Riemann-Liouville differintegral from 0 evaluated at 1.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from algorithms.gl import gl_point
from algorithms.gli import gli_evaluate
from algorithms.grid import FunctionInput, Grid
from algorithms.rl import rl_point
from algorithms.special import GammaPoleError, check_values, gamma
from models import TableRow
from services.observability import LogContext, get_logger

TABLE_DOMAIN = (0.0, 1.0)
_SERIES_TERMS = 60


@dataclass(frozen=True)
class ReferenceFunction:
    label: str
    func: Callable[[float], float]
    exact_at_one: Callable[[float], float]


def _reciprocal_gamma(x: float) -> float:
    try:
        return 1.0 / gamma(x)
    except GammaPoleError:
        return 0.0


def _sqrt_exact(alpha: float) -> float:
    return gamma(1.5) * _reciprocal_gamma(1.5 - alpha)


def _quadratic_exact(alpha: float) -> float:
    return 2.0 * _reciprocal_gamma(3.0 - alpha) - _reciprocal_gamma(1.0 - alpha)


def _exp_exact(alpha: float) -> float:
    # Termwise differintegral of the Taylor series of e^x, evaluated at x = 1.
    return math.fsum(_reciprocal_gamma(k + 1.0 - alpha) for k in range(_SERIES_TERMS))


REFERENCE_FUNCTIONS: tuple[ReferenceFunction, ...] = (
    ReferenceFunction("sqrt(x)", math.sqrt, _sqrt_exact),
    ReferenceFunction("x^2 - 1", lambda x: x * x - 1.0, _quadratic_exact),
    ReferenceFunction("exp(x)", math.exp, _exp_exact),
)


def _gl(alpha: float, input_: FunctionInput, n: int) -> float:
    return gl_point(alpha, input_, *TABLE_DOMAIN, n)


def _gli(alpha: float, input_: FunctionInput, n: int) -> float:
    return float(gli_evaluate(alpha, input_, *TABLE_DOMAIN, n).values[-1])


def _rl(alpha: float, input_: FunctionInput, n: int) -> float:
    return rl_point(alpha, input_, *TABLE_DOMAIN, n)


TABLE_ALGORITHMS: tuple[tuple[str, Callable[[float, FunctionInput, int], float]], ...] = (
    ("GL", _gl),
    ("GLI", _gli),
    ("RL", _rl),
)


def reproduce_table(
    alpha: float = 0.5, points: int = 120, sampled: bool = False
) -> tuple[TableRow, ...]:
    """Run every (function, algorithm) pair and compare against the exact value.

    With sampled=True each function is handed over as a pre-sampled array, so
    GLI falls back to estimating its right endpoint.
    """
    checked = check_values(alpha, *TABLE_DOMAIN, points)
    logger = get_logger()
    context = LogContext(alpha=checked.alpha, points=checked.n)
    grid = Grid(*TABLE_DOMAIN, checked.n)

    rows: list[TableRow] = []
    for reference in REFERENCE_FUNCTIONS:
        input_: FunctionInput = reference.func
        if sampled:
            input_ = np.array([reference.func(float(x)) for x in grid.points()])
        exact = reference.exact_at_one(checked.alpha)
        for name, compute in TABLE_ALGORITHMS:
            row = TableRow(
                function=reference.label,
                algorithm=name,
                computed=compute(checked.alpha, input_, checked.n),
                exact=exact,
            )
            logger.debug(
                "table_row_computed",
                context=context,
                function=row.function,
                table_algorithm=row.algorithm,
                absolute_error=row.absolute_error,
            )
            rows.append(row)
    return tuple(rows)
