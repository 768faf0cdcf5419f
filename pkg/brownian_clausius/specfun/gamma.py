import cmath
import math
from typing import Iterable, Union

from brownian_clausius.config import (
    ASYMPTOTIC_SERIES_TERMS,
    ASYMPTOTIC_SHIFT_THRESHOLD,
)
from brownian_clausius.exceptions import NonFiniteError, PoleError

ComplexScalar = complex
Number = Union[int, float, complex]

# B_2, B_4, ..., B_18
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _as_complex(z: Number) -> complex:
    value = complex(z)
    if not cmath.isfinite(value):
        raise NonFiniteError(f"Non-finite argument {z}")
    if value.imag == 0.0 and value.real <= 0.0 and value.real == math.floor(value.real):
        raise PoleError(f"Gamma function pole at {value.real:g}")
    return value


def _shift_count(z: complex) -> int:
    if z.real >= ASYMPTOTIC_SHIFT_THRESHOLD:
        return 0
    return int(math.ceil(ASYMPTOTIC_SHIFT_THRESHOLD - z.real))


def _checked(value: complex, name: str, z: complex) -> complex:
    if not cmath.isfinite(value):
        raise NonFiniteError(f"{name}({z}) is not finite")
    return value


def log_gamma(z: Number) -> ComplexScalar:
    """
    Principal-branch log Gamma(z).

    Shifts z upward until Re z >= ASYMPTOTIC_SHIFT_THRESHOLD, then applies the Stirling series.
    """
    z = _as_complex(z)
    shift = _shift_count(z)
    shifted_logs = 0j
    for k in range(shift):
        shifted_logs += cmath.log(z + k)

    w = z + shift
    inv_w2 = 1.0 / (w * w)
    power = 1.0 / w
    series = 0j
    for k, b in enumerate(_BERNOULLI_EVEN[:ASYMPTOTIC_SERIES_TERMS], start=1):
        series += b / (2 * k * (2 * k - 1)) * power
        power *= inv_w2

    value = (w - 0.5) * cmath.log(w) - w + _HALF_LOG_TWO_PI + series - shifted_logs
    return _checked(value, "log_gamma", z)


def digamma(z: Number) -> ComplexScalar:
    """psi(z) = d ln Gamma(z)/dz."""
    z = _as_complex(z)
    shift = _shift_count(z)
    recurrence = 0j
    for k in range(shift):
        recurrence += 1.0 / (z + k)

    w = z + shift
    inv_w2 = 1.0 / (w * w)
    power = inv_w2
    series = 0j
    for k, b in enumerate(_BERNOULLI_EVEN[:ASYMPTOTIC_SERIES_TERMS], start=1):
        series += b / (2 * k) * power
        power *= inv_w2

    value = cmath.log(w) - 0.5 / w - series - recurrence
    return _checked(value, "digamma", z)


def trigamma(z: Number) -> ComplexScalar:
    """psi'(z) = d^2 ln Gamma(z)/dz^2."""
    z = _as_complex(z)
    shift = _shift_count(z)
    recurrence = 0j
    for k in range(shift):
        recurrence += 1.0 / (z + k) ** 2

    w = z + shift
    inv_w2 = 1.0 / (w * w)
    power = inv_w2 / w
    series = 0j
    for b in _BERNOULLI_EVEN[:ASYMPTOTIC_SERIES_TERMS]:
        series += b * power
        power *= inv_w2

    value = 1.0 / w + 0.5 * inv_w2 + series + recurrence
    return _checked(value, "trigamma", z)


def log_abs_gamma(x: float) -> tuple[int, float]:
    """Sign and log-magnitude of Gamma(x) for real, non-pole x."""
    z = _as_complex(x)
    sign = 1
    if z.real < 0:
        negative_factors = sum(1 for k in range(_shift_count(z)) if z.real + k < 0)
        sign = -1 if negative_factors % 2 else 1
    return sign, log_gamma(z).real


def log_gamma_ratio(numerators: Iterable[float], denominators: Iterable[float]) -> tuple[int, float]:
    """
    Sign and log-magnitude of prod Gamma(numerators) / prod Gamma(denominators).

    >>> log_gamma_ratio([5.0], [1.0])[1] == log_gamma(5.0).real
    True
    """
    sign = 1
    total = 0.0
    for x in numerators:
        s, value = log_abs_gamma(x)
        sign *= s
        total += value
    for x in denominators:
        s, value = log_abs_gamma(x)
        sign *= s
        total -= value
    return sign, total


__all__ = [
    "ComplexScalar",
    "log_gamma",
    "digamma",
    "trigamma",
    "log_abs_gamma",
    "log_gamma_ratio",
]
