"""
Clausius audits of the coupled oscillator.

With the bare parameters, U_s = <p^2>/(2M) + k0 <q^2>/2 splits into heat dQ_s = d<p^2>/(2M) + (k0/2) d<q^2> and
the explicit work dW_s. With the starred parameters the same dU_s splits into dQ_eff* and dW_eff*, and
dQ_eff* = T_eff* dS holds for every variation.
"""

import logging
import math

from brownian_clausius.audit.models import VariationReport, WeakCouplingReport
from brownian_clausius.config import PURE_STATE_TOLERANCE, VIOLATION_TOLERANCE
from brownian_clausius.drude.derivatives import moment_derivatives, uncoupled_moment_derivatives
from brownian_clausius.drude.models import GaussianMoments, MomentDerivatives
from brownian_clausius.drude.moments import csch_sq, moments, uncoupled_moments
from brownian_clausius.effective.oscillator import effective_star
from brownian_clausius.exceptions import ParameterDomainError, PureStateError
from brownian_clausius.params import ModelParams, Variation

logger = logging.getLogger(__name__)


def _explicit_rates(which: Variation) -> tuple[float, float]:
    """(dM, dk0) per unit of the varied parameter."""
    if which is Variation.MASS:
        return 1.0, 0.0
    if which is Variation.SPRING:
        return 0.0, 1.0
    return 0.0, 0.0


def _entropy_rate(m: GaussianMoments, d: MomentDerivatives, hbar: float, kB: float) -> float:
    if m.v - 0.5 <= PURE_STATE_TOLERANCE:
        raise PureStateError(f"dS diverges logarithmically at v = {m.v!r}")
    dv = (m.q2 * d.dp2 + m.p2 * d.dq2) / (2.0 * hbar * math.sqrt(m.q2 * m.p2))
    return kB * dv * math.log((m.v + 0.5) / (m.v - 0.5))


def entropy_derivative(params: ModelParams, which: Variation) -> float:
    """dS_N = kB dv ln((v + 1/2)/(v - 1/2)) with dv = (<q^2> d<p^2> + <p^2> d<q^2>)/(2 hbar sqrt(<q^2> <p^2>))."""
    return _entropy_rate(moments(params), moment_derivatives(params, which), params.hbar, params.kB)


def variation_report(params: ModelParams, which: Variation) -> VariationReport:
    m = moments(params)
    d = moment_derivatives(params, which)
    M, k0 = params.M, params.k0
    q2, p2 = m.q2, m.p2
    dM, dk0 = _explicit_rates(which)

    dQ_s = d.dp2 / (2.0 * M) + 0.5 * k0 * d.dq2
    dW_s = -p2 * dM / (2.0 * M * M) + 0.5 * q2 * dk0
    dU_s = dQ_s + dW_s

    eff = effective_star(m, M, k0, params.beta, params.hbar, params.kB)
    U_s = eff.U_s
    M_star, k_star = eff.M_eff_star, eff.k_eff_star
    dM_star = d.dp2 / U_s - p2 * dU_s / U_s**2
    dk_star = 0.5 * (dk0 + d.dp2 / (M * q2) - p2 * dM / (M * M * q2) - p2 * d.dq2 / (M * q2 * q2))

    dQ_star = d.dp2 / (2.0 * M_star) + 0.5 * k_star * d.dq2
    dW_star = -p2 * dM_star / (2.0 * M_star**2) + 0.5 * q2 * dk_star

    dS = _entropy_rate(m, d, params.hbar, params.kB)
    T = params.temperature
    T_dS = T * dS
    Teff_dS = eff.T_eff_star * dS
    Y = (eff.T_eff_star - T) * dS + (dW_star - dW_s)
    naive_gap = dQ_s - T_dS
    scale = max(abs(dQ_s), abs(T_dS))

    report = VariationReport(
        which=which,
        T=T,
        T_eff_star=eff.T_eff_star,
        dU_s=dU_s,
        dQ_s=dQ_s,
        dW_s=dW_s,
        dQ_eff_star=dQ_star,
        dW_eff_star=dW_star,
        dS=dS,
        T_dS=T_dS,
        Teff_dS=Teff_dS,
        Y=Y,
        naive_gap=naive_gap,
        naive_violated=naive_gap > VIOLATION_TOLERANCE * scale,
        effective_residual=(dQ_star - Teff_dS) / max(abs(Teff_dS), abs(dQ_star), 1e-300),
    )
    logger.debug(f"{which.value} audit at gamma={params.gamma}, T={T}: naive gap {naive_gap!r}, Y {Y!r}")
    return report


def gamma_variation(params: ModelParams) -> VariationReport:
    return variation_report(params, Variation.DAMPING)


def local_variation(params: ModelParams, which: Variation) -> VariationReport:
    if which is Variation.DAMPING:
        raise ParameterDomainError("local_variation covers the mass and the spring constant; use gamma_variation")
    return variation_report(params, which)


def weak_coupling_equalities(M: float, omega0: float, beta: float, hbar: float = 1.0, kB: float = 1.0) -> WeakCouplingReport:
    """
    Mass and spring audits of the uncoupled oscillator.

    dQ_s/dM = beta (hbar omega0)^2 csch^2(beta hbar omega0/2)/(8M) and dQ_s/dk0 = -beta hbar^2 csch^2(...)/(8M),
    both equal to T dS; the works are -<p^2>/(2M^2) and <q^2>/2.
    """
    m = uncoupled_moments(M, omega0, beta, hbar)
    k0 = M * omega0**2
    T = 1.0 / (kB * beta)
    s2 = csch_sq(0.5 * beta * hbar * omega0)

    heats = {}
    entropies = {}
    for which in (Variation.MASS, Variation.SPRING):
        d = uncoupled_moment_derivatives(M, omega0, beta, hbar, which)
        heats[which] = d.dp2 / (2.0 * M) + 0.5 * k0 * d.dq2
        entropies[which] = T * _entropy_rate(m, d, hbar, kB)

    return WeakCouplingReport(
        dQ_dM=heats[Variation.MASS],
        T_dS_dM=entropies[Variation.MASS],
        dQ_dk0=heats[Variation.SPRING],
        T_dS_dk0=entropies[Variation.SPRING],
        dW_dM=-m.p2 / (2.0 * M * M),
        dW_dk0=0.5 * m.q2,
        dQ_dM_closed_form=beta * (hbar * omega0) ** 2 * s2 / (8.0 * M),
        dQ_dk0_closed_form=-beta * hbar**2 * s2 / (8.0 * M),
    )


__all__ = [
    "entropy_derivative",
    "variation_report",
    "gamma_variation",
    "local_variation",
    "weak_coupling_equalities",
]
