"""
Matrix elements <n|rho_s|m> of the reduced density operator in the uncoupled number basis.

Two closed forms are implemented. The Jacobi form

    rho_nm = (-Upsilon)^a rho_00 G_nm r^m P_m^(a,a)(Lambda/r),    a = (n - m)/2, r^2 = Lambda^2 - Upsilon^2,

is the production route; the homogeneous recurrence needs no square root of r^2, so it covers Delta >= 1 and
Lambda = 0. The terminating 2F1 form in 1/Delta is kept as an independent cross-check.
"""

import logging
import math

import numpy as np
import numpy.typing as npt

from brownian_clausius.config import LOG_OVERFLOW_LIMIT
from brownian_clausius.densmat.models import DimensionlessSet
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.exceptions import DegenerateStateError, MatrixOverflowError, ParameterDomainError
from brownian_clausius.specfun import (
    hyp2f1_terminating,
    jacobi_symmetric_scaled_log,
    legendre,
    legendre_scaled_sequence,
    log_gamma,
)

logger = logging.getLogger(__name__)


def _check_indices(n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise ParameterDomainError(f"Number-basis indices must be non-negative, got ({n}, {m})")


def _log_index_ratio(n: int, m: int) -> float:
    """log G_nm for n >= m of equal parity."""
    half_odd = log_gamma((n + 1) // 2 + 0.5).real - log_gamma((m + 1) // 2 + 0.5).real
    half_even = log_gamma(n // 2 + 1).real - log_gamma(m // 2 + 1).real
    return 0.5 * (half_odd + half_even) + log_gamma(m + 1).real - log_gamma((n + m) // 2 + 1).real


def _assemble(sign: float, log_magnitude: float, n: int, m: int) -> float:
    if not math.isfinite(log_magnitude) or log_magnitude > LOG_OVERFLOW_LIMIT:
        raise MatrixOverflowError(f"rho_{n},{m} is not representable (log magnitude {log_magnitude})", max(n, m) - 1)
    return sign * math.exp(log_magnitude)


def matrix_element(n: int, m: int, dimset: DimensionlessSet, moments: GaussianMoments) -> float:
    _check_indices(n, m)
    if (n - m) % 2:
        return 0.0
    if n < m:
        n, m = m, n

    a = (n - m) // 2
    upsilon = dimset.Upsilon
    if a > 0 and upsilon == 0.0:
        return 0.0

    mantissa, log_scale = jacobi_symmetric_scaled_log(m, a, dimset.Lambda, dimset.r2)
    if mantissa == 0.0:
        return 0.0

    sign = math.copysign(1.0, mantissa) * (1.0 if a % 2 == 0 or upsilon < 0 else -1.0)
    log_magnitude = (
        (a * math.log(abs(upsilon)) if a else 0.0)
        + math.log(dimset.prefactor(moments.q2))
        + _log_index_ratio(n, m)
        + log_scale
        + math.log(abs(mantissa))
    )
    return _assemble(sign, log_magnitude, n, m)


def matrix_element_hypergeometric(n: int, m: int, dimset: DimensionlessSet, moments: GaussianMoments) -> float:
    """
    The 2F1 form: rho_{2k,2l} uses 2F1(-k, -l; 1/2; 1/Delta) and rho_{2k+1,2l+1} uses 2F1(-k, -l; 3/2; 1/Delta)
    with an extra factor 2 Lambda. Requires Upsilon != 0.
    """
    _check_indices(n, m)
    if (n - m) % 2:
        return 0.0
    upsilon = dimset.Upsilon
    if upsilon == 0.0:
        raise DegenerateStateError("The 2F1 form needs Upsilon != 0 (it expands in 1/Delta)")

    odd = n % 2
    k, l = n // 2, m // 2  # noqa: E741
    c = 1.5 if odd else 0.5
    inverse_delta = (dimset.Lambda / upsilon) ** 2
    series = hyp2f1_terminating(k, l, c, inverse_delta)

    log_gammas = 0.5 * (
        log_gamma(k + c).real + log_gamma(l + c).real - log_gamma(k + 1).real - log_gamma(l + 1).real
    )
    log_magnitude = (
        (k + l) * math.log(abs(upsilon))
        + math.log(dimset.prefactor(moments.q2))
        - 0.5 * math.log(math.pi)
        + log_gammas
        + math.log(abs(series))
    )
    sign = math.copysign(1.0, series) * (1.0 if (k + l) % 2 == 0 or upsilon < 0 else -1.0)
    if odd:
        if dimset.Lambda == 0.0:
            return 0.0
        log_magnitude += math.log(2.0 * dimset.Lambda)
    return _assemble(sign, log_magnitude, n, m)


def diagonal_element(n: int, dimset: DimensionlessSet, moments: GaussianMoments) -> float:
    """
    <n|rho_s|n> = rho_00 r^n P_n(Lambda/r) in the Legendre form.

    For 0 <= Delta < 1 this is rho_00 Lambda^n (1 - Delta)^(n/2) P_n(1/sqrt(1 - Delta)); otherwise the
    homogeneous Legendre recurrence is used.
    """
    _check_indices(n, n)
    rho_00 = dimset.prefactor(moments.q2)
    if dimset.Lambda > 0.0 and dimset.Delta < 1.0:
        shrink = 1.0 - dimset.Delta
        return rho_00 * dimset.Lambda**n * shrink ** (0.5 * n) * legendre(n, 1.0 / math.sqrt(shrink))
    return rho_00 * float(legendre_scaled_sequence(n, dimset.Lambda, dimset.r2)[n])


def diagonal_sequence(n_max: int, dimset: DimensionlessSet, moments: GaussianMoments) -> npt.NDArray[np.float64]:
    """<n|rho_s|n> for n = 0..n_max."""
    return dimset.prefactor(moments.q2) * legendre_scaled_sequence(n_max, dimset.Lambda, dimset.r2)


def occupation(n: int, moments: GaussianMoments) -> float:
    """Eigenvalue p_n = (1 - xi) xi^n of rho_s, xi = (v - 1/2)/(v + 1/2)."""
    if n < 0:
        raise ParameterDomainError(f"Occupation index must be non-negative, got {n}")
    xi = moments.xi
    if xi == 0.0:
        return 1.0 if n == 0 else 0.0
    return (1.0 - xi) * xi**n


__all__ = [
    "matrix_element",
    "matrix_element_hypergeometric",
    "diagonal_element",
    "diagonal_sequence",
    "occupation",
]
