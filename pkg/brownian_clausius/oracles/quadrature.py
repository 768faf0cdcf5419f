"""
Brute-force integrals of the position kernel.

rho_element_quadrature integrates psi_n(q) <q|rho_s|q'> psi_m(q') over the plane with Gauss-Hermite rules in the
rotated variables u = (q + q')/sqrt 2, w = (q - q')/sqrt 2, in which the kernel and the basis Gaussians factorize:
the weight is exp(-a_u u^2 - a_w w^2) with a_u = c^2/2 + 1/(4 <q^2>) and a_w = c^2/2 + <p^2>/hbar^2.
"""

import logging
import math

import numpy as np
from numpy.polynomial.hermite import hermgauss
from scipy.integrate import quad

from brownian_clausius.config import (
    EIGENCHECK_GRID_HALF_WIDTH,
    EIGENCHECK_GRID_POINTS,
    EIGENCHECK_MAX_INDEX,
    RHO_QUADRATURE_EXTRA_NODES,
    RHO_QUADRATURE_MAX_INDEX,
    RHO_QUADRATURE_TOLERANCE,
)
from brownian_clausius.densmat.kernel import position_kernel
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.effective.models import EigenSolution
from brownian_clausius.exceptions import ConvergenceError, ParameterDomainError
from brownian_clausius.specfun import hermite_normalized_sequence

logger = logging.getLogger(__name__)


def _rho_gauss_hermite(n: int, m: int, moments: GaussianMoments, c: float, hbar: float, nodes: int) -> float:
    a_u = 0.5 * c * c + 1.0 / (4.0 * moments.q2)
    a_w = 0.5 * c * c + moments.p2 / (hbar * hbar)
    x, weights = hermgauss(nodes)

    u = x[:, None] / math.sqrt(a_u)
    w = x[None, :] / math.sqrt(a_w)
    q = (u + w) / math.sqrt(2.0)
    q_prime = (u - w) / math.sqrt(2.0)

    top = max(n, m)
    left = hermite_normalized_sequence(top, c * q)[n]
    right = hermite_normalized_sequence(top, c * q_prime)[m]
    total = float(np.sum(weights[:, None] * weights[None, :] * left * right))
    # psi_n = sqrt(c) h_n(c q) exp(-c^2 q^2 / 2); the kernel carries 1/sqrt(2 pi <q^2>)
    return c * total / math.sqrt(2.0 * math.pi * moments.q2 * a_u * a_w)


def rho_element_quadrature(n: int, m: int, moments: GaussianMoments, M: float, omega0: float, hbar: float = 1.0) -> float:
    """<n|rho_s|m> in the uncoupled basis by double Gauss-Hermite quadrature of the position kernel."""
    if not (0 <= n <= RHO_QUADRATURE_MAX_INDEX and 0 <= m <= RHO_QUADRATURE_MAX_INDEX):
        raise ParameterDomainError(f"Indices must lie in [0, {RHO_QUADRATURE_MAX_INDEX}], got ({n}, {m})")

    c = math.sqrt(M * omega0 / hbar)
    nodes = (n + m) // 2 + 1 + RHO_QUADRATURE_EXTRA_NODES
    value = _rho_gauss_hermite(n, m, moments, c, hbar, nodes)
    check = _rho_gauss_hermite(n, m, moments, c, hbar, nodes + RHO_QUADRATURE_EXTRA_NODES)
    logger.debug(f"rho_{n},{m} quadrature: {value!r} ({nodes} nodes), refined {check!r}")
    if abs(check - value) > RHO_QUADRATURE_TOLERANCE:
        raise ConvergenceError(f"rho_{n},{m} quadrature changed by {abs(check - value):.3e} under node refinement")
    return check


def eigencheck_quadrature(n: int, moments: GaussianMoments, effective: EigenSolution, hbar: float = 1.0) -> float:
    """
    Sup over a q-grid of |int <q|rho_s|q'> phi_n(q') dq' - p_n phi_n(q)|.

    The grid spans +/- EIGENCHECK_GRID_HALF_WIDTH / c_tilde and each integral is an adaptive quadrature.
    """
    if not 0 <= n <= EIGENCHECK_MAX_INDEX:
        raise ParameterDomainError(f"n must lie in [0, {EIGENCHECK_MAX_INDEX}], got {n}")

    half_width = EIGENCHECK_GRID_HALF_WIDTH / effective.ansatz.c_tilde
    grid = np.linspace(-half_width, half_width, EIGENCHECK_GRID_POINTS)
    p_n = effective.probability(n)

    def phi(q: float) -> float:
        return float(effective.eigenfunction(n, q))

    residual = 0.0
    for q in grid:
        integral, _ = quad(lambda qp: position_kernel(q, qp, moments, hbar) * phi(qp), -np.inf, np.inf, epsabs=1e-13, epsrel=1e-12, limit=200)
        residual = max(residual, abs(integral - p_n * phi(q)))
    logger.debug(f"Eigencheck n={n}: residual {residual:.3e}")
    return residual


__all__ = ["rho_element_quadrature", "eigencheck_quadrature"]
