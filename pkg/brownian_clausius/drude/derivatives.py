from brownian_clausius.drude.decomposition import decompose, lambda_gradients
from brownian_clausius.drude.models import MomentDerivatives, ParameterFlow
from brownian_clausius.drude.moments import (
    coth,
    csch_sq,
    decomposed_sums,
    real_part,
    thermal_factor,
    thermal_factor_slope,
)
from brownian_clausius.exceptions import DegenerateStateError, ParameterDomainError
from brownian_clausius.params import ModelParams, Variation


def parameter_flow(params: ModelParams, which: Variation) -> ParameterFlow:
    """
    Rates of (Omega, gamma, w0) along a variation.

    Mass and spring variations keep omega_d and gamma_o fixed and move omega0^2 = k0/M, so both flows are the
    same direction in the chart, scaled by d(omega0^2)/dM = -omega0^2/M or d(omega0^2)/dk0 = 1/M.
    """
    if which is Variation.DAMPING:
        return ParameterFlow(which=which, dOmega=0.0, dgamma=1.0, dw0=0.0, dM=0.0)

    Omega, gamma, w0, M = params.Omega, params.gamma, params.w0, params.M
    denominator = Omega * (gamma - Omega) - w0**2
    if abs(denominator) <= 1e-12 * (Omega**2 + w0**2 + Omega * gamma):
        raise DegenerateStateError(f"Parameter flow is singular at Omega(gamma - Omega) = w0^2 (Omega={Omega}, gamma={gamma}, w0={w0})")

    dOmega_per_sq = -gamma / denominator
    dw0_per_sq = (1.0 - (gamma - Omega) * dOmega_per_sq) / (2.0 * w0)

    if which is Variation.MASS:
        rate, dM = -params.omega0_sq / M, 1.0
    else:
        rate, dM = 1.0 / M, 0.0

    dOmega = dOmega_per_sq * rate
    return ParameterFlow(which=which, dOmega=dOmega, dgamma=-dOmega, dw0=dw0_per_sq * rate, dM=dM)


def uncoupled_moment_derivatives(M: float, omega0: float, beta: float, hbar: float, which: Variation) -> MomentDerivatives:
    """Derivatives of the canonical moments with respect to M (fixed k0) or k0 (fixed M)."""
    theta = 0.5 * beta * hbar * omega0
    c = coth(theta)
    s2 = csch_sq(theta)
    q2 = hbar / (2.0 * M * omega0) * c
    p2 = 0.5 * M * hbar * omega0 * c

    if which is Variation.MASS:
        dq2 = -q2 / (2.0 * M) + beta * hbar**2 * s2 / (8.0 * M**2)
        dp2 = p2 / (2.0 * M) + beta * hbar**2 * omega0**2 * s2 / 8.0
    elif which is Variation.SPRING:
        k0 = M * omega0**2
        dq2 = -q2 / (2.0 * k0) - hbar / (2.0 * M * omega0) * s2 * theta / (2.0 * k0)
        dp2 = p2 / (2.0 * k0) - 0.5 * hbar * M * omega0 * s2 * theta / (2.0 * k0)
    else:
        raise ParameterDomainError("The canonical oscillator has no damping parameter")
    return MomentDerivatives(dq2=dq2, dp2=dp2, which=which)


def moment_derivatives(params: ModelParams, which: Variation) -> MomentDerivatives:
    """
    Analytic d<q^2> and d<p^2> along a variation.

    With K_l = B_l dlambda_l + lambda_l B'_l domega_l:
    dq2 = -(dM/M) q2 + (1/M) sum K_l and dp2 = (dM/M) p2 - M sum (K_l omega_l^2 + 2 omega_l lambda_l B_l domega_l).
    """
    if params.is_uncoupled and which is not Variation.DAMPING:
        return uncoupled_moment_derivatives(params.M, params.omega0, params.beta, params.hbar, which)

    flow = parameter_flow(params, which)
    decomposition = decompose(params)
    Omega = params.Omega
    z1, z2 = decomposition.omega_2, decomposition.omega_3
    w1 = params.w1
    half_gamma_over_w1 = 0.25 * params.gamma / w1
    w0_over_w1 = params.w0 / w1

    dz1 = flow.dgamma * (0.5 - 1j * half_gamma_over_w1) + flow.dw0 * 1j * w0_over_w1
    dz2 = flow.dgamma * (0.5 + 1j * half_gamma_over_w1) - flow.dw0 * 1j * w0_over_w1
    domegas = (complex(flow.dOmega), dz1, dz2)

    sum_k = 0j
    sum_p = 0j
    magnitude_k = 0.0
    magnitude_p = 0.0
    gradients = lambda_gradients(Omega, z1, z2)
    for lam, omega, domega, grad in zip(decomposition.lambdas, decomposition.frequencies, domegas, gradients):
        b = thermal_factor(omega, params.beta, params.hbar)
        slope = thermal_factor_slope(omega, params.beta, params.hbar)
        dlam = grad[0] * flow.dOmega + grad[1] * dz1 + grad[2] * dz2
        k_term = b * dlam + lam * slope * domega
        sum_k += k_term
        p_term = k_term * omega * omega + 2.0 * omega * lam * b * domega
        sum_p += p_term
        magnitude_k += abs(k_term)
        magnitude_p += abs(p_term)

    M = params.M
    dq2 = sum_k / M
    dp2 = -M * sum_p
    scale_q = magnitude_k / M
    scale_p = M * magnitude_p
    if flow.dM:
        sum_q_moment, sum_p_moment = decomposed_sums(params, decomposition)
        dq2 -= flow.dM / M * (sum_q_moment / M)
        dp2 += flow.dM / M * (-M * sum_p_moment)
        scale_q += abs(dq2)
        scale_p += abs(dp2)

    return MomentDerivatives(
        dq2=real_part(dq2, f"d<q^2>/d{which.value}", scale_q),
        dp2=real_part(dp2, f"d<p^2>/d{which.value}", scale_p),
        which=which,
    )


def dmoments_dgamma(params: ModelParams) -> MomentDerivatives:
    return moment_derivatives(params, Variation.DAMPING)


def dmoments_dM(params: ModelParams) -> MomentDerivatives:
    return moment_derivatives(params, Variation.MASS)


def dmoments_dk0(params: ModelParams) -> MomentDerivatives:
    return moment_derivatives(params, Variation.SPRING)


__all__ = [
    "parameter_flow",
    "moment_derivatives",
    "uncoupled_moment_derivatives",
    "dmoments_dgamma",
    "dmoments_dM",
    "dmoments_dk0",
]

