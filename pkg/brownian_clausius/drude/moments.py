import math
from typing import Optional

from brownian_clausius.config import REALITY_TOLERANCE
from brownian_clausius.drude.decomposition import decompose
from brownian_clausius.drude.models import DrudeDecomposition, GaussianMoments
from brownian_clausius.exceptions import ConsistencyError, ParameterDomainError
from brownian_clausius.params import ModelParams
from brownian_clausius.specfun import digamma, trigamma


def coth(x: float) -> float:
    """coth(x) for x > 0 (x = inf gives 1)."""
    return (1.0 + math.exp(-2.0 * x)) / -math.expm1(-2.0 * x)


def csch_sq(x: float) -> float:
    """csch(x)^2 for x > 0, without overflow at large x."""
    return 4.0 * math.exp(-2.0 * x) / math.expm1(-2.0 * x) ** 2


def thermal_factor(omega: complex, beta: float, hbar: float) -> complex:
    """B(omega) = 1/(beta omega) + (hbar/pi) psi(beta hbar omega / 2 pi)."""
    return 1.0 / (beta * omega) + hbar / math.pi * digamma(beta * hbar * omega / (2.0 * math.pi))


def thermal_factor_slope(omega: complex, beta: float, hbar: float) -> complex:
    """dB/domega."""
    return -1.0 / (beta * omega * omega) + hbar * hbar * beta / (2.0 * math.pi**2) * trigamma(beta * hbar * omega / (2.0 * math.pi))


def real_part(value: complex, quantity: str, scale: Optional[float] = None) -> float:
    """Real part of a sum that must be real; scale is the magnitude the residue is judged against."""
    reference = abs(value.real) if scale is None else max(scale, abs(value.real))
    if abs(value.imag) > REALITY_TOLERANCE * max(reference, 1e-300):
        raise ConsistencyError(f"imaginary residue {value.imag:.3e} against real part {value.real:.3e}", quantity)
    return value.real


def uncoupled_moments(M: float, omega0: float, beta: float, hbar: float) -> GaussianMoments:
    """Canonical oscillator moments; beta may be math.inf (ground state)."""
    if not (M > 0 and omega0 > 0 and beta > 0 and hbar > 0):
        raise ParameterDomainError(f"Positive inputs required, got M={M}, omega0={omega0}, beta={beta}, hbar={hbar}")
    c = coth(0.5 * beta * hbar * omega0)
    q2 = hbar / (2.0 * M * omega0) * c
    p2 = 0.5 * M * hbar * omega0 * c
    return GaussianMoments.from_variances(q2, p2, hbar)


def decomposed_sums(params: ModelParams, decomposition: DrudeDecomposition) -> tuple[complex, complex]:
    """sum(lambda B) and sum(lambda omega^2 B)."""
    sum_q = 0j
    sum_p = 0j
    for lam, omega in zip(decomposition.lambdas, decomposition.frequencies):
        b = thermal_factor(omega, params.beta, params.hbar)
        sum_q += lam * b
        sum_p += lam * omega * omega * b
    return sum_q, sum_p


def moments(params: ModelParams) -> GaussianMoments:
    """
    Equilibrium <q^2> and <p^2> of the Drude-damped oscillator.

    <q^2> = (1/M) sum_l lambda_l B(omega_l) and <p^2> = -M sum_l lambda_l omega_l^2 B(omega_l), with the
    complex digamma in B; gamma = 0 is routed to the canonical closed form.
    """
    if params.is_uncoupled:
        return uncoupled_moments(params.M, params.omega0, params.beta, params.hbar)

    sum_q, sum_p = decomposed_sums(params, decompose(params))
    q2 = real_part(sum_q / params.M, "q2")
    p2 = real_part(-params.M * sum_p, "p2")
    return GaussianMoments.from_variances(q2, p2, params.hbar)


__all__ = [
    "moments",
    "uncoupled_moments",
    "coth",
    "csch_sq",
    "thermal_factor",
    "thermal_factor_slope",
]
