"""Equilibrium moments from the fluctuation-dissipation integrals over Im chi on the real axis."""

import logging
import math
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad

from brownian_clausius.config import (
    FDT_OMEGA_MAX_FACTOR,
    FDT_QUAD_EPSABS,
    FDT_QUAD_EPSREL,
    FDT_QUAD_LIMIT,
    FDT_TAIL_TOLERANCE,
)
from brownian_clausius.drude.decomposition import response_roots
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.drude.moments import coth
from brownian_clausius.drude.response import susceptibility, susceptibility_direct
from brownian_clausius.exceptions import ConsistencyError, ConvergenceError, ParameterDomainError
from brownian_clausius.params import ModelParams, Regime

logger = logging.getLogger(__name__)

ROOT_MATCH_TOLERANCE = 1e-8
CHECK_FREQUENCIES = (0.1, 0.7, 1.3, 5.0)  # in units of max(omega_d, w0)


def verify_factorization(params: ModelParams) -> None:
    """
    Check that the denominator of the Drude susceptibility has the roots -i Omega, -i z1, -i z2.

    The direct form M [(omega0^2 - omega^2)(omega_d - i omega) - i omega gamma_o omega_d] is a cubic in omega;
    its numerical roots and values must agree with the factorized form used for integration.
    """
    wd = params.omega_d
    G = params.gamma_o * wd
    coefficients = params.M * np.array([1j, -wd, -1j * (params.omega0_sq + G), params.omega0_sq * wd])
    computed = np.roots(coefficients)

    z1, z2 = response_roots(params)
    expected = [-1j * params.Omega, -1j * z1, -1j * z2]
    scale = max(abs(r) for r in expected)
    for root in expected:
        distance = float(np.min(np.abs(computed - root)))
        if distance > ROOT_MATCH_TOLERANCE * scale:
            raise ConsistencyError(f"root {root} not reproduced (closest at distance {distance:.3e})", "chi roots")

    omega = np.array(CHECK_FREQUENCIES) * max(wd, params.w0)
    factorized = susceptibility(params, omega)
    direct = susceptibility_direct(params, omega)
    mismatch = float(np.max(np.abs(factorized - direct) / np.abs(direct)))
    if mismatch > ROOT_MATCH_TOLERANCE:
        raise ConsistencyError(f"factorized and direct forms differ by {mismatch:.3e}", "chi")


def _feature_points(params: ModelParams, omega_max: float) -> list[float]:
    points = [params.Omega, params.omega_d]
    if params.regime is Regime.UNDERDAMPED:
        w1 = params.w1.real
        points += [w1 + k * params.gamma for k in (-10.0, -1.0, 0.0, 1.0, 10.0)]
    else:
        z1, z2 = response_roots(params)
        points += [z1.real, z2.real]
    return sorted({p for p in points if 0.0 < p < omega_max})


def _integrate(integrand: Callable[[float], float], points: list[float], omega_max: float) -> tuple[float, float]:
    body, body_error = quad(
        integrand,
        0.0,
        omega_max,
        points=points or None,
        epsabs=FDT_QUAD_EPSABS,
        epsrel=FDT_QUAD_EPSREL,
        limit=FDT_QUAD_LIMIT,
    )
    tail, tail_error = quad(integrand, omega_max, math.inf, epsabs=FDT_QUAD_EPSABS, epsrel=FDT_QUAD_EPSREL, limit=FDT_QUAD_LIMIT)
    logger.debug(f"FDT quadrature: body {body:.6e} (+/- {body_error:.1e}), tail {tail:.6e} (+/- {tail_error:.1e})")
    return body, tail


def fdt_quadrature_moments(params: ModelParams, omega_max: Optional[float] = None) -> GaussianMoments:
    """
    <q^2> = (hbar/pi) int coth(beta hbar omega/2) Im chi d omega and <p^2> = (hbar M^2/pi) int omega^2 coth Im chi d omega.

    The range [0, omega_max] is resolved with breakpoints at the response features; [omega_max, inf) is integrated
    separately and may carry at most FDT_TAIL_TOLERANCE of each result.
    """
    if params.is_uncoupled:
        raise ParameterDomainError("Im chi is a delta function at gamma = 0; use a small positive gamma")
    verify_factorization(params)

    if omega_max is None:
        omega_max = FDT_OMEGA_MAX_FACTOR * max(params.omega_d, params.w0)
    if not omega_max > 0:
        raise ParameterDomainError(f"omega_max must be positive, got {omega_max}")

    half_beta_hbar = 0.5 * params.beta * params.hbar
    M, Omega, wd = params.M, params.Omega, params.omega_d
    z1, z2 = response_roots(params)

    def position_integrand(omega: float) -> float:
        s = -1j * omega
        chi = (wd + s) / (M * (Omega + s) * (z1 + s) * (z2 + s))
        return coth(half_beta_hbar * omega) * chi.imag

    def momentum_integrand(omega: float) -> float:
        return omega * omega * position_integrand(omega)

    points = _feature_points(params, omega_max)
    results = []
    for name, integrand in (("q2", position_integrand), ("p2", momentum_integrand)):
        body, tail = _integrate(integrand, points, omega_max)
        total = body + tail
        if abs(tail) > FDT_TAIL_TOLERANCE * abs(total):
            raise ConvergenceError(f"{name}: tail beyond omega_max = {omega_max:g} carries {abs(tail / total):.2e} of the result; increase omega_max")
        results.append(total)

    q2 = params.hbar / math.pi * results[0]
    p2 = params.hbar * params.M**2 / math.pi * results[1]
    return GaussianMoments.from_variances(q2, p2, params.hbar)


__all__ = ["fdt_quadrature_moments", "verify_factorization"]
