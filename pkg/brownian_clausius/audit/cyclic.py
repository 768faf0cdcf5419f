import logging
from typing import Callable

import numpy as np
from scipy.integrate import quad

from brownian_clausius.audit.clausius import variation_report
from brownian_clausius.audit.models import CyclicIntegralReport
from brownian_clausius.config import (
    CRITICAL_DAMPING_BAND,
    CYCLIC_DEFAULT_STEPS,
    CYCLIC_QUAD_EPSABS,
    CYCLIC_QUAD_EPSREL,
    CYCLIC_QUAD_LIMIT,
)
from brownian_clausius.drude.moments import moments
from brownian_clausius.effective.entropy import entropy_von_neumann
from brownian_clausius.exceptions import ParameterDomainError, PathCrossingError
from brownian_clausius.params import ModelParams, Variation

logger = logging.getLogger(__name__)


def _panels(gamma_max: float, w0: float, n_steps: int) -> list[float]:
    edges = set(np.linspace(0.0, gamma_max, n_steps + 1).tolist())
    critical = 2.0 * w0
    if 0.0 < critical < gamma_max:
        edges.add(critical)
    return sorted(edges)


def _integrate(integrand: Callable[[float], float], edges: list[float]) -> float:
    """Sum of adaptive quadratures over consecutive edges (descending edges give the reverse leg)."""
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        value, error = quad(integrand, a, b, epsabs=CYCLIC_QUAD_EPSABS, epsrel=CYCLIC_QUAD_EPSREL, limit=CYCLIC_QUAD_LIMIT)
        logger.debug(f"Cyclic panel [{a:g}, {b:g}]: {value!r} (+/- {error:.1e})")
        total += value
    return total


def cyclic_integral(params: ModelParams, gamma_max: float, n_steps: int = CYCLIC_DEFAULT_STEPS) -> CyclicIntegralReport:
    """
    Switch the damping on from 0 to gamma_max and back, at the temperature of params.

    lhs = int_0^gamma_max (1/T_eff*) dQ_eff*/dgamma dgamma is compared with S_N(gamma_max) - S_N(0). The damping
    path is split into n_steps equal panels, plus a panel edge at critical damping when the path crosses it.
    """
    if gamma_max < 0.0:
        raise ParameterDomainError(f"gamma_max must be non-negative, got {gamma_max}")
    if n_steps < 1:
        raise ParameterDomainError(f"n_steps must be positive, got {n_steps}")
    if abs(0.5 * gamma_max - params.w0) <= CRITICAL_DAMPING_BAND * params.w0:
        raise PathCrossingError(f"gamma_max = {gamma_max} ends on critical damping (2 w0 = {2.0 * params.w0})")

    def integrand(gamma: float) -> float:
        report = variation_report(params.with_gamma(gamma), Variation.DAMPING)
        return report.dQ_eff_star / report.T_eff_star

    rhs = entropy_von_neumann(moments(params.with_gamma(gamma_max)).v, params.kB) - entropy_von_neumann(
        moments(params.with_gamma(0.0)).v, params.kB
    )
    if gamma_max == 0.0:
        return CyclicIntegralReport(gamma_max=0.0, lhs=0.0, rhs=rhs, reverse=0.0, panels=[0.0])

    edges = _panels(gamma_max, params.w0, n_steps)
    lhs = _integrate(integrand, edges)
    reverse = _integrate(integrand, edges[::-1])
    return CyclicIntegralReport(gamma_max=gamma_max, lhs=lhs, rhs=rhs, reverse=reverse, panels=edges)


__all__ = ["cyclic_integral"]
