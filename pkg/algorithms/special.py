"""Special functions and argument validation shared by every differintegral algorithm."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

INTEGER_TOLERANCE = 1e-12

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
# Largest argument whose factorial-based Gamma is still a finite double.
_MAX_EXACT_FACTORIAL_ARG = 171


class InputValidationError(ValueError):
    """Raised when algorithm arguments fail validation."""

    def __init__(self, reasons: list[str] | tuple[str, ...]) -> None:
        self.reasons = tuple(reasons)
        super().__init__("; ".join(self.reasons))


class GammaPoleError(ValueError):
    """Raised when the Gamma function is evaluated at a pole."""


class NumericOverflowError(OverflowError):
    """Raised when a result exceeds the double-precision range."""


@dataclass(frozen=True)
class ValidatedOrder:
    """A finite differintegration order (negative integrates, positive differentiates)."""

    alpha: float


@dataclass(frozen=True)
class ValidatedInputs:
    """Order and grid parameters that passed check_values."""

    order: ValidatedOrder
    a: float
    b: float
    n: int

    @property
    def alpha(self) -> float:
        return self.order.alpha


def is_integer(x: float) -> bool:
    """Return True when x is within INTEGER_TOLERANCE of its nearest integer."""
    return abs(x - round(x)) <= INTEGER_TOLERANCE


def _sinpi(x: float) -> float:
    # Reduce against the nearest integer first so that sin(pi * r) keeps full
    # relative precision next to the zeros.
    nearest = round(x)
    reduced = x - nearest
    value = math.sin(math.pi * reduced)
    return -value if nearest % 2 else value


def _lanczos(x: float) -> float:
    z = x - 1.0
    series = _LANCZOS_COEFFS[0]
    for index in range(1, len(_LANCZOS_COEFFS)):
        series += _LANCZOS_COEFFS[index] / (z + index)
    t = z + _LANCZOS_G + 0.5
    # Split the power in two halves to keep the intermediate finite near x = 171.
    half_power = t ** ((z + 0.5) / 2.0)
    return _SQRT_TWO_PI * half_power * math.exp(-t) * half_power * series


def gamma(x: float) -> float:
    """Compute the Gamma function of a real argument.

    Positive integers up to 171 return exact factorials. Other arguments use a
    Lanczos approximation, with the reflection formula below 0.5. Accuracy is
    within 1e-13 relative for moderate |x| and loosens to about 2e-13 as |x|
    nears 170. Next to a nonpositive integer it further degrades like
    eps / dist(x, pole).
    """
    x = float(x)
    if not math.isfinite(x):
        raise InputValidationError([f"gamma argument must be finite, got {x!r}"])

    if is_integer(x):
        nearest = round(x)
        if nearest <= 0:
            raise GammaPoleError(f"Gamma has a pole at x={nearest}")
        if nearest <= _MAX_EXACT_FACTORIAL_ARG:
            return float(math.factorial(nearest - 1))
        raise NumericOverflowError(f"Gamma({x!r}) exceeds the double-precision range")

    if x < 0.5:
        reflected_arg = 1.0 - x
        try:
            reflected = _lanczos(reflected_arg)
        except OverflowError:
            reflected = math.inf
        if math.isinf(reflected):
            # |Gamma(x)| underflows for x < -170.
            return math.copysign(0.0, _sinpi(x))
        return math.pi / (_sinpi(x) * reflected)

    try:
        result = _lanczos(x)
    except OverflowError as exc:
        raise NumericOverflowError(f"Gamma({x!r}) exceeds the double-precision range") from exc
    if not math.isfinite(result):
        raise NumericOverflowError(f"Gamma({x!r}) exceeds the double-precision range")
    return result


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.

    Computed as an iterated product so nonpositive integer a stays exact.
    """
    if isinstance(k, bool) or not isinstance(k, numbers.Integral) or k < 0:
        raise InputValidationError([f"pochhammer index must be a nonnegative integer, got {k!r}"])
    result = 1.0
    a = float(a)
    for step in range(int(k)):
        result *= a + step
    if not math.isfinite(result):
        raise NumericOverflowError(f"pochhammer({a!r}, {k}) exceeds the double-precision range")
    return result


def _is_real(value: object) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def check_values(alpha: float, a: float, b: float, n: int | float) -> ValidatedInputs:
    """Validate an order and uniform-grid description.

    Every violated condition is reported; the point count is normalized to int
    when it is an integer-valued real.
    """
    reasons: list[str] = []

    if not _is_real(alpha):
        reasons.append(f"order alpha must be a real number, got {alpha!r}")
    elif not math.isfinite(alpha):
        reasons.append(f"order alpha must be finite, got {alpha!r}")

    endpoints_ok = True
    for label, value in (("a", a), ("b", b)):
        if not _is_real(value) or not math.isfinite(value):
            reasons.append(f"domain endpoint {label} must be a finite real, got {value!r}")
            endpoints_ok = False
    if endpoints_ok and not float(b) > float(a):
        reasons.append(f"domain [{a}, {b}] is empty or inverted; b must exceed a")

    points: int | None = None
    if not _is_real(n) or not math.isfinite(n) or not is_integer(float(n)):
        reasons.append(f"point count must be an integer, got {n!r}")
    else:
        points = int(round(n))
        if points < 2:
            reasons.append(f"point count must be at least 2, got {points}")

    if reasons:
        raise InputValidationError(reasons)

    assert points is not None
    return ValidatedInputs(
        order=ValidatedOrder(alpha=float(alpha)),
        a=float(a),
        b=float(b),
        n=points,
    )


def check_rl_order(alpha: float) -> float:
    """Reject orders the Riemann-Liouville quadrature cannot handle."""
    alpha = float(alpha)
    shifted = 2.0 - alpha
    if is_integer(shifted) and round(shifted) <= 0:
        raise GammaPoleError(
            f"Gamma(2 - alpha) has a pole at alpha={alpha:g}; "
            "Riemann-Liouville weights are undefined"
        )
    if alpha >= 1.0:
        raise InputValidationError(
            [
                f"Riemann-Liouville quadrature requires alpha < 1, got {alpha:g}; "
                "the piecewise-linear weights evaluate 0**(1 - alpha) with a nonpositive exponent"
            ]
        )
    return alpha


def step_scale(h: float, alpha: float) -> float:
    """h**(-alpha), the common factor in front of every differintegral sum."""
    try:
        scale = float(h**-alpha)
    except OverflowError as exc:
        raise NumericOverflowError(
            f"step scaling h**(-alpha) overflows for h={h!r}, alpha={alpha!r}"
        ) from exc
    if not math.isfinite(scale):
        raise NumericOverflowError(
            f"step scaling h**(-alpha) overflows for h={h!r}, alpha={alpha!r}"
        )
    return scale
