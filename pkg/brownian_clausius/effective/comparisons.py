import math

from brownian_clausius.config import ZERO_TEMPERATURE_BETA
from brownian_clausius.densmat.matrix import internal_energy
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.effective.models import GrabertComparison, ZeroTemperatureComparison
from brownian_clausius.exceptions import ParameterDomainError, PureStateError


def grabert_comparison(
    moments: GaussianMoments,
    M: float,
    k0: float,
    beta: float,
    hbar: float = 1.0,
    kB: float = 1.0,
) -> GrabertComparison:
    """
    Keep the true temperature and fit the frequency: omega_tilde = (2/(hbar beta)) arccoth(2v) = -ln(xi)/(hbar beta).

    The resulting energy hbar omega_tilde v differs from U_s at finite coupling.
    """
    xi = moments.xi
    if xi == 0.0:
        raise PureStateError("A pure state has no finite-temperature frequency fit")
    omega_tilde = -math.log(xi) / (hbar * beta)
    return GrabertComparison(
        omega_tilde=omega_tilde,
        M_tilde=math.sqrt(moments.p2 / moments.q2) / omega_tilde,
        U_tilde=hbar * omega_tilde * moments.v,
        T_tilde=1.0 / (kB * beta),
        U_s=internal_energy(moments, M, k0),
    )


def zero_T_comparison(
    moments: GaussianMoments,
    M: float,
    k0: float,
    beta: float,
    hbar: float = 1.0,
    kB: float = 1.0,
) -> ZeroTemperatureComparison:
    """
    Keep the bare mass at T = 0: omega_bar = sqrt(<p^2>/<q^2>)/M and kB T_bar = -hbar omega_bar / ln(xi).

    beta stands in for T = 0 and must be at least ZERO_TEMPERATURE_BETA.
    """
    if beta < ZERO_TEMPERATURE_BETA:
        raise ParameterDomainError(f"beta = {beta} is too small to stand in for T = 0 (need >= {ZERO_TEMPERATURE_BETA:g})")

    omega_bar = math.sqrt(moments.p2 / moments.q2) / M
    xi = moments.xi
    ground_state = xi == 0.0
    T_bar = 0.0 if ground_state else -hbar * omega_bar / (kB * math.log(xi))
    return ZeroTemperatureComparison(
        omega_bar=omega_bar,
        T_bar=T_bar,
        U_bar=moments.p2 / M,
        U_s=internal_energy(moments, M, k0),
        ground_state=ground_state,
    )


__all__ = ["grabert_comparison", "zero_T_comparison"]
