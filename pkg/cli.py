"""Command-line entry point for fraccalc.

Usage:
    python cli.py run --algorithm rl --alpha 0.5 --expr "sqrt(x)" --domain 0 1 --points 120
    python cli.py table --sampled
    python cli.py bench --points 32768
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import NoReturn

import click

from algorithms.fastconv import ConvolutionResidueError, TransformLengthError
from algorithms.grid import SampleError
from algorithms.special import GammaPoleError, InputValidationError, NumericOverflowError
from config import AppConfig, ConfigError, get_config
from models import Algorithm, OutputFormat, RunConfig
from services.benchmark import compare_paths
from services.data_file import DataFileError
from services.expr import ExpressionDomainError, ExpressionSyntaxError
from services.formatter import format_number, render_result
from services.observability import configure_logging, get_logger
from services.renderer import render_table
from services.runner import RunConfigError, run
from services.validation_table import reproduce_table
from services.validator import OutputValidationError

EXIT_INTERNAL = 1

# First match wins.
ERROR_EXIT_CODES: tuple[tuple[type[BaseException], int, str], ...] = (
    (RunConfigError, 3, "run-config"),
    (InputValidationError, 4, "input"),
    (ExpressionSyntaxError, 6, "syntax"),
    (ExpressionDomainError, 7, "domain"),
    (SampleError, 5, "sample"),
    (GammaPoleError, 8, "gamma-pole"),
    (DataFileError, 9, "data-file"),
    (NumericOverflowError, 10, "numeric"),
    (ConvolutionResidueError, 10, "numeric"),
    (TransformLengthError, 10, "numeric"),
    (ConfigError, 11, "config"),
    (OutputValidationError, 12, "output"),
)

_HANDLED_ERRORS = tuple(error_type for error_type, _, _ in ERROR_EXIT_CODES)

EXIT_CODE_HELP = """\b
Exit codes:
  0   success
  2   usage error (unknown flag, missing option)
  3   inconsistent run configuration (both or neither of --expr/--data-file)
  4   invalid order, domain or point count (rl also needs alpha < 1)
  5   function samples not finite or of the wrong length
  6   expression syntax error or unknown identifier
  7   expression evaluated outside its domain
  8   Gamma pole (rl with alpha = 2, 3, ...)
  9   unreadable or malformed data file
  10  numerical overflow or transform failure
  11  invalid FRACCALC_* configuration
  12  result failed output validation
"""


def exit_code_for(exc: BaseException) -> tuple[int, str]:
    for error_type, code, label in ERROR_EXIT_CODES:
        if isinstance(exc, error_type):
            return code, label
    return EXIT_INTERNAL, "internal"


def _fail(exc: BaseException) -> NoReturn:
    code, label = exit_code_for(exc)
    message = " ".join(str(exc).split()) or type(exc).__name__
    click.echo(f"error[{label}]: {message}", err=True)
    sys.exit(code)


def _app_config(ctx: click.Context) -> AppConfig:
    config = ctx.obj
    assert isinstance(config, AppConfig)
    return config


@click.group(epilog=EXIT_CODE_HELP)
@click.version_option(version="0.1.0", prog_name="fraccalc")
@click.pass_context
def cli(ctx: click.Context) -> None:
    """Numerical fractional derivatives and integrals of sampled functions.

    Orders are real: negative alpha integrates, positive alpha differentiates.
    """
    try:
        config = get_config()
    except ConfigError as exc:
        _fail(exc)
    configure_logging(config.log_level)
    ctx.obj = config


@cli.command(name="run", epilog=EXIT_CODE_HELP)
@click.option(
    "--algorithm",
    type=click.Choice([algorithm.value for algorithm in Algorithm]),
    required=True,
    help="gl is the transform-based GL array; gl-point and rl-point return the value at b.",
)
@click.option("--alpha", type=float, required=True, help="Differintegration order.")
@click.option("--expr", type=str, default=None, help='Function of x, e.g. "sqrt(x)".')
@click.option(
    "--data-file",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="One sample per grid point, one per line; '#' starts a comment.",
)
@click.option("--domain", type=(float, float), required=True, help="Endpoints a b.")
@click.option("--points", type=int, required=True, help="Grid points, endpoints included.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice([fmt.value for fmt in OutputFormat]),
    default=OutputFormat.PLAIN.value,
    show_default=True,
)
@click.pass_context
def run_command(
    ctx: click.Context,
    algorithm: str,
    alpha: float,
    expr: str | None,
    data_file: Path | None,
    domain: tuple[float, float],
    points: int,
    fmt: str,
) -> None:
    """Differintegrate a function given as an expression or a data file."""
    app_config = _app_config(ctx)
    config = RunConfig(
        algorithm=Algorithm(algorithm),
        alpha=alpha,
        domain=domain,
        points=points,
        expr=expr,
        data_file=data_file,
        output_format=OutputFormat(fmt),
    )
    try:
        result = run(config, app_config)
        text = render_result(result, config.output_format, app_config.output_digits)
    except _HANDLED_ERRORS as exc:
        _fail(exc)
    except Exception as exc:  # noqa: BLE001
        get_logger().error("unexpected_error", error_type=type(exc).__name__, error=str(exc))
        _fail(exc)
    click.echo(text, nl=False)


@cli.command(epilog=EXIT_CODE_HELP)
@click.option("--alpha", type=float, default=0.5, show_default=True)
@click.option("--points", type=int, default=120, show_default=True)
@click.option(
    "--sampled",
    is_flag=True,
    help="Feed pre-sampled arrays, so GLI estimates its right endpoint.",
)
@click.pass_context
def table(ctx: click.Context, alpha: float, points: int, sampled: bool) -> None:
    """Reproduce the sqrt(x), x^2 - 1, exp(x) validation table at x = 1."""
    app_config = _app_config(ctx)
    try:
        rows = reproduce_table(alpha=alpha, points=points, sampled=sampled)
    except _HANDLED_ERRORS as exc:
        _fail(exc)
    click.echo(
        render_table(rows, app_config.table_digits, alpha=alpha, points=points),
        nl=False,
    )


@cli.command(epilog=EXIT_CODE_HELP)
@click.option("--points", type=click.IntRange(min=2), default=32768, show_default=True)
@click.option("--repeats", type=click.IntRange(min=1), default=None, help="Defaults to config.")
@click.pass_context
def bench(ctx: click.Context, points: int, repeats: int | None) -> None:
    """Median wall times of the transform, matrix and direct GL paths."""
    app_config = _app_config(ctx)
    report = compare_paths(
        points,
        repeats or app_config.benchmark_repeats,
        dense_limit=app_config.dense_matrix_limit,
    )
    click.echo(f"points={report.points} repeats={report.repeats}")
    for label, seconds in (
        ("fast", report.fast_seconds),
        ("matrix", report.matrix_seconds),
        ("direct", report.direct_seconds),
    ):
        click.echo(f"{label:<8}{format_number(seconds, 6)} s")
    click.echo(f"speedup {format_number(report.speedup, 4)}x")


def main() -> None:
    cli(prog_name="fraccalc")


if __name__ == "__main__":
    main()
