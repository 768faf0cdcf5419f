import logging
import math

from brownian_clausius.densmat.matrix import internal_energy
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.effective.entropy import entropy_von_neumann
from brownian_clausius.effective.models import EffectiveOscillator, EigenAnsatz, EigenSolution
from brownian_clausius.exceptions import UncertaintyViolationError

logger = logging.getLogger(__name__)


def eigen_solution(moments: GaussianMoments, hbar: float = 1.0) -> EigenSolution:
    """
    Eigenfunctions and eigenvalues of rho_s.

    The eigenfunctions are oscillator states of scale c_tilde = (<p^2>/(hbar^2 <q^2>))^(1/4) and the eigenvalues
    form the geometric series p_n = (1 - xi) xi^n with xi = (v - 1/2)/(v + 1/2).
    """
    v = moments.v
    if v < 0.5:
        raise UncertaintyViolationError(f"v = {v} is below 1/2")

    q2, p2 = moments.q2, moments.p2
    c_tilde = (p2 / (hbar * hbar * q2)) ** 0.25
    v_tilde = v + 0.5
    s = min(1.0, c_tilde / v_tilde * math.sqrt(2.0 * q2))
    y_scale = math.sqrt(p2) / (math.sqrt(2.0) * hbar * v_tilde) * (v - 1.0 / (4.0 * v))
    ansatz = EigenAnsatz(c_tilde=c_tilde, v_tilde=v_tilde, y_scale=y_scale, s=s)
    return EigenSolution(ansatz=ansatz, v=v, xi=moments.xi)


def effective_star(
    moments: GaussianMoments,
    M: float,
    k0: float,
    beta: float,
    hbar: float = 1.0,
    kB: float = 1.0,
) -> EffectiveOscillator:
    """
    The starred effective oscillator.

    omega_eff* = sqrt(<p^2>/<q^2>)/(2M) + (k0/2) sqrt(<q^2>/<p^2>) makes hbar omega_eff* v equal U_s; then
    M_eff* = <p^2>/U_s, k_eff* = (k0 + <p^2>/(M <q^2>))/2 and kB T_eff* = -hbar omega_eff* / ln(xi).
    """
    q2, p2, v = moments.q2, moments.p2, moments.v
    xi = moments.xi
    ratio = math.sqrt(p2 / q2)

    omega_star = ratio / (2.0 * M) + 0.5 * k0 / ratio
    U_s = internal_energy(moments, M, k0)
    M_star = p2 / U_s
    k_star = 0.5 * (k0 + p2 / (M * q2))

    if xi == 0.0:
        T_star = 0.0
        Z = 0.0
        ln_Z = -math.inf
    else:
        ln_xi = math.log(xi)
        T_star = -hbar * omega_star / (kB * ln_xi)
        Z = math.sqrt(xi) / (1.0 - xi)
        ln_Z = 0.5 * ln_xi - math.log1p(-xi)

    S = entropy_von_neumann(v, kB)
    F_star = U_s - T_star * S
    logger.debug(f"Effective oscillator: M*={M_star!r}, k*={k_star!r}, T*={T_star!r}, xi={xi!r}")
    return EffectiveOscillator(
        xi=xi,
        v=v,
        M_eff_star=M_star,
        omega_eff_star=omega_star,
        k_eff_star=k_star,
        T_eff_star=T_star,
        Z_eff=Z,
        ln_Z_eff=ln_Z,
        U_eff_star=hbar * omega_star * v,
        S=S,
        F_eff_star=F_star,
        U_s=U_s,
        T=1.0 / (kB * beta),
        hbar=hbar,
        kB=kB,
    )


__all__ = ["eigen_solution", "effective_star"]
