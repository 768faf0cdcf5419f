from brownian_clausius.config import CRITICAL_DAMPING_BAND
from brownian_clausius.drude.models import DrudeDecomposition
from brownian_clausius.exceptions import CriticalDampingError, DegenerateStateError
from brownian_clausius.params import ModelParams, Regime


def response_roots(params: ModelParams) -> tuple[complex, complex]:
    """z1 = gamma/2 + i w1 and z2 = gamma/2 - i w1 (z1 < z2 when overdamped)."""
    if params.is_critical:
        raise CriticalDampingError(f"gamma/2 = {0.5 * params.gamma} is within the critical band around w0 = {params.w0}")

    half = complex(0.5 * params.gamma)
    z1 = half + 1j * params.w1
    if params.regime is Regime.UNDERDAMPED:
        return z1, z1.conjugate()
    return z1, half - 1j * params.w1


def _lambda_pair(Omega: float, a: complex, b: complex) -> complex:
    return (Omega + b) / ((a - Omega) * (b - a))


def lambda_coefficients(Omega: float, z1: complex, z2: complex) -> tuple[complex, complex, complex]:
    scale = max(Omega, abs(z1), abs(z2))
    if min(abs(Omega - z1), abs(Omega - z2)) <= CRITICAL_DAMPING_BAND * scale:
        raise DegenerateStateError(f"Omega = {Omega} coincides with a response rate ({z1}, {z2})")
    lam1 = (z1 + z2) / ((Omega - z1) * (z2 - Omega))
    return lam1, _lambda_pair(Omega, z1, z2), _lambda_pair(Omega, z2, z1)


def _lambda_pair_gradient(Omega: float, a: complex, b: complex) -> tuple[complex, complex, complex]:
    # d/dOmega, d/da, d/db of (Omega + b)/((a - Omega)(b - a))
    q = (a - Omega) * (b - a)
    q2 = q * q
    d_omega = (b * b - a * a) / q2
    d_a = (Omega + b) * (2 * a - b - Omega) / q2
    d_b = (Omega * Omega - a * a) / q2
    return d_omega, d_a, d_b


def lambda_gradients(Omega: float, z1: complex, z2: complex) -> tuple[tuple[complex, complex, complex], ...]:
    """Partial derivatives (d/dOmega, d/dz1, d/dz2) of each lambda_l."""
    p = (Omega - z1) * (z2 - Omega)
    p2 = p * p
    s = z1 + z2
    grad1 = (
        -s * (s - 2 * Omega) / p2,
        (p + s * (z2 - Omega)) / p2,
        (p - s * (Omega - z1)) / p2,
    )
    grad2 = _lambda_pair_gradient(Omega, z1, z2)
    d_omega, d_b, d_a = _lambda_pair_gradient(Omega, z2, z1)
    grad3 = (d_omega, d_a, d_b)
    return grad1, grad2, grad3


def decompose(params: ModelParams) -> DrudeDecomposition:
    """
    Split the Drude response into the rates (Omega, z1, z2) and residues lambda_l.

    The residues satisfy sum(lambda) = 0, sum(lambda * omega) = 1 and sum(lambda * omega^2) = 0.
    """
    z1, z2 = response_roots(params)
    lambdas = lambda_coefficients(params.Omega, z1, z2)
    return DrudeDecomposition(
        omega_1=params.Omega,
        omega_2=z1,
        omega_3=z2,
        lambdas=lambdas,
        regime=params.regime,
    )


__all__ = ["decompose", "response_roots", "lambda_coefficients", "lambda_gradients"]
