"""
Imaginary-frequency representation of the equilibrium moments.

<q^2> = (1/(M beta)) sum_n 1/(nu_n^2 + omega0^2 + |nu_n| gamma_hat(|nu_n|)) and
<p^2> = (M/beta) sum_n (omega0^2 + |nu_n| gamma_hat)/(nu_n^2 + omega0^2 + |nu_n| gamma_hat), with the Drude
kernel gamma_hat(x) = gamma_o omega_d/(omega_d + x). The p-sum converges only like 1/N, so the large-nu
expansion of both summands is resummed with Hurwitz zeta tails.
"""

import logging
import math

import numpy as np
from scipy.special import zeta

from brownian_clausius.config import (
    MATSUBARA_DEFAULT_TAIL_ORDER,
    MATSUBARA_DEFAULT_TERMS,
    MATSUBARA_DEFAULT_TOLERANCE,
    MATSUBARA_MIN_TERMS,
)
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.exceptions import ConvergenceError, ParameterDomainError
from brownian_clausius.params import ModelParams

logger = logging.getLogger(__name__)

TailSeries = list[tuple[int, float]]


def _asymptotic_series(params: ModelParams) -> tuple[TailSeries, TailSeries]:
    # (power k, coefficient of nu^-k), ordered by k
    wd = params.omega_d
    G = params.gamma_o * wd
    c0 = params.omega0_sq + G
    position = [(2, 1.0), (4, -c0), (5, G * wd), (6, c0 * c0 - G * wd * wd)]
    momentum = [(2, c0), (3, -G * wd), (4, G * wd * wd - c0 * c0), (5, 2.0 * c0 * G * wd - G * wd**3)]
    return position, momentum


def _tail_sum(series: TailSeries, n_terms: int, scale: float) -> float:
    """sum over n > n_terms of sum_k a_k nu_n^-k, with nu_n = n / scale."""
    return sum(a * scale**k * float(zeta(k, n_terms + 1)) for k, a in series)


def matsubara_moments(
    params: ModelParams,
    n_terms: int = MATSUBARA_DEFAULT_TERMS,
    tail_order: int = MATSUBARA_DEFAULT_TAIL_ORDER,
    tolerance: float = MATSUBARA_DEFAULT_TOLERANCE,
) -> GaussianMoments:
    """
    Moments by direct Matsubara summation of n_terms frequencies plus tail_order asymptotic tail terms.

    The error estimate is the resummed size of the omitted asymptotic orders; ConvergenceError is raised when it
    exceeds tolerance times the result.
    """
    if n_terms < MATSUBARA_MIN_TERMS:
        raise ParameterDomainError(f"n_terms must be at least {MATSUBARA_MIN_TERMS}, got {n_terms}")
    if tail_order not in (1, 2, 3):
        raise ParameterDomainError(f"tail_order must be 1, 2 or 3, got {tail_order}")

    M, beta, hbar = params.M, params.beta, params.hbar
    wd = params.omega_d
    G = params.gamma_o * wd
    omega0_sq = params.omega0_sq

    scale = hbar * beta / (2.0 * math.pi)
    nu = np.arange(1, n_terms + 1, dtype=np.float64) / scale
    g = nu * G / (wd + nu)
    f_q = 1.0 / (nu * nu + omega0_sq + g)
    f_p = (omega0_sq + g) * f_q
    # smallest terms first
    sum_q = float(np.sum(f_q[::-1]))
    sum_p = float(np.sum(f_p[::-1]))

    position, momentum = _asymptotic_series(params)
    sum_q += _tail_sum(position[:tail_order], n_terms, scale)
    sum_p += _tail_sum(momentum[:tail_order], n_terms, scale)

    q2 = (1.0 / omega0_sq + 2.0 * sum_q) / (M * beta)
    p2 = (1.0 + 2.0 * sum_p) * M / beta

    error_q = 2.0 / (M * beta) * abs(_tail_sum([(k, abs(a)) for k, a in position[tail_order:]], n_terms, scale))
    error_p = 2.0 * M / beta * abs(_tail_sum([(k, abs(a)) for k, a in momentum[tail_order:]], n_terms, scale))
    logger.debug(f"Matsubara tail estimates: q2 {error_q:.3e}, p2 {error_p:.3e} ({n_terms} terms, order {tail_order})")

    if error_q > tolerance * abs(q2) or error_p > tolerance * abs(p2):
        raise ConvergenceError(
            f"Matsubara tail estimate ({error_q:.3e}, {error_p:.3e}) exceeds relative tolerance {tolerance:g}; "
            f"increase n_terms ({n_terms}) or tail_order ({tail_order})"
        )
    return GaussianMoments.from_variances(q2, p2, hbar)


__all__ = ["matsubara_moments"]
