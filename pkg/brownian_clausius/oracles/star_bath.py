"""
Finite star-bath realization of the Drude bath.

The system coordinate couples to N oscillators; the total potential, counter-term included, is diagonalized and
the moments follow as coth-weighted sums over normal modes.

Nodes are the tangent quadrature points of the Drude kernel, not a log grid cut at 50 omega_d. Each mode carries an
equal share of the counter-term, and the kernel tail has no cutoff unless omega_cutoff is given.
"""

import logging
from typing import Optional

import numpy as np
from scipy.linalg import eigh

from brownian_clausius.config import STAR_BATH_DEFAULT_MODES, STAR_BATH_MIN_MODES
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.exceptions import ConvergenceError, ParameterDomainError
from brownian_clausius.oracles.models import NormalModes, StarBath
from brownian_clausius.params import ModelParams

logger = logging.getLogger(__name__)


def discretize_drude(params: ModelParams, N: int, omega_cutoff: Optional[float] = None) -> StarBath:
    """
    Equal-weight nodes of the Drude kernel: omega_j = omega_d tan(pi (2j - 1)/(4N)) and
    c_j^2 = m_j omega_j^2 M gamma_o omega_d / N, so every mode carries the same share of the counter-term.

    omega_cutoff drops the nodes above it (and their share of the kernel).
    """
    if N < STAR_BATH_MIN_MODES:
        raise ParameterDomainError(f"Star bath needs at least {STAR_BATH_MIN_MODES} modes, got {N}")

    j = np.arange(1, N + 1, dtype=np.float64)
    frequencies = params.omega_d * np.tan(np.pi * (2.0 * j - 1.0) / (4.0 * N))
    if omega_cutoff is not None:
        if not omega_cutoff > 0:
            raise ParameterDomainError(f"omega_cutoff must be positive, got {omega_cutoff}")
        frequencies = frequencies[frequencies <= omega_cutoff]
        if frequencies.size == 0:
            raise ParameterDomainError(f"omega_cutoff = {omega_cutoff} removes every bath mode")

    masses = np.ones_like(frequencies)
    couplings = np.sqrt(masses * frequencies**2 * params.M * params.gamma_o * params.omega_d / N)
    return StarBath(
        masses=masses,
        spring_constants=masses * frequencies**2,
        couplings=couplings,
        discretization="drude-tangent" if omega_cutoff is None else f"drude-tangent<={omega_cutoff:g}",
    )


def normal_modes(M: float, k0: float, bath: StarBath) -> NormalModes:
    """Diagonalize the mass-weighted Hessian of system plus bath."""
    size = bath.N + 1
    hessian = np.zeros((size, size))
    hessian[0, 0] = (k0 + 2.0 * bath.counter_term) / M
    hessian[0, 1:] = -bath.couplings / np.sqrt(M * bath.masses)
    hessian[1:, 0] = hessian[0, 1:]
    hessian[np.arange(1, size), np.arange(1, size)] = bath.spring_constants / bath.masses

    logger.info(f"Diagonalizing star bath with {bath.N} modes")
    eigenvalues, vectors = eigh(hessian)
    if eigenvalues[0] <= 0.0:
        raise ConvergenceError(f"Star-bath potential is not positive definite (smallest eigenvalue {eigenvalues[0]:.3e})")
    return NormalModes(frequencies=np.sqrt(eigenvalues), vectors=vectors)


def thermal_moments(M: float, modes: NormalModes, beta: float, hbar: float) -> GaussianMoments:
    """<q^2> and <p^2> of the system coordinate from the canonical state of the normal modes."""
    omega = modes.frequencies
    weights = modes.system_weights
    # all frequencies are positive
    coth = 1.0 / np.tanh(0.5 * beta * hbar * omega)
    q2 = float(np.sum(weights * hbar / (2.0 * omega) * coth)) / M
    p2 = M * float(np.sum(weights * 0.5 * hbar * omega * coth))
    return GaussianMoments.from_variances(q2, p2, hbar)


def star_bath_moments(params: ModelParams, N: int = STAR_BATH_DEFAULT_MODES, omega_cutoff: Optional[float] = None) -> GaussianMoments:
    bath = discretize_drude(params, N, omega_cutoff)
    modes = normal_modes(params.M, params.k0, bath)
    return thermal_moments(params.M, modes, params.beta, params.hbar)


__all__ = ["star_bath_moments", "discretize_drude", "normal_modes", "thermal_moments"]
