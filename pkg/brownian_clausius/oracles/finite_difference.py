import logging
from typing import Callable, Optional

from brownian_clausius.config import (
    FINITE_DIFFERENCE_ABSOLUTE_STEP,
    FINITE_DIFFERENCE_RELATIVE_STEP,
    FINITE_DIFFERENCE_SWITCH,
)
from brownian_clausius.exceptions import ParameterDomainError
from brownian_clausius.oracles.models import FiniteDifferenceResult

logger = logging.getLogger(__name__)


def default_step(x: float) -> float:
    """h = 1e-5 |x|, or 1e-7 when |x| < 1e-2."""
    if abs(x) < FINITE_DIFFERENCE_SWITCH:
        return FINITE_DIFFERENCE_ABSOLUTE_STEP
    return FINITE_DIFFERENCE_RELATIVE_STEP * abs(x)


def central_difference(f: Callable[[float], float], x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def finite_difference(
    f: Callable[[float], float],
    x: float,
    h: Optional[float] = None,
    richardson: bool = True,
) -> FiniteDifferenceResult:
    """
    Central-difference derivative of f at x.

    With richardson=True the estimates at h and h/2 are combined as (4 D(h/2) - D(h))/3, which cancels the h^2 term.
    """
    step = default_step(x) if h is None else h
    if not step > 0:
        raise ParameterDomainError(f"Finite-difference step must be positive, got {step}")

    coarse = central_difference(f, x, step)
    if not richardson:
        return FiniteDifferenceResult(value=coarse, step=step, error_estimate=0.0, richardson=False)

    fine = central_difference(f, x, 0.5 * step)
    value = (4.0 * fine - coarse) / 3.0
    error = abs(value - fine)
    logger.debug(f"Finite difference at x={x!r}: h={step:.3e}, value={value!r}, error~{error:.2e}")
    return FiniteDifferenceResult(value=value, step=step, error_estimate=error, richardson=True)


__all__ = ["finite_difference", "central_difference", "default_step"]
