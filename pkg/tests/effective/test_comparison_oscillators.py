import math

import pytest

from brownian_clausius.drude import moments, uncoupled_moments
from brownian_clausius.effective import grabert_comparison, zero_T_comparison
from brownian_clausius.exceptions import ParameterDomainError, PureStateError
from brownian_clausius.params import ModelParams
from tests.common import caption_params, verify_close


def test_fixed_temperature_fit_is_exact_without_coupling() -> None:
    params = caption_params(0.0, 0.7)
    fit = grabert_comparison(moments(params), params.M, params.k0, params.beta)
    verify_close(fit.omega_tilde, params.omega0, rel=1e-12)
    verify_close(fit.M_tilde, params.M, rel=1e-12)
    verify_close(fit.U_tilde, fit.U_s, rel=1e-12)
    assert fit.T_tilde == pytest.approx(0.7, rel=1e-15)


@pytest.mark.parametrize("gamma,T", [(1.5, 1.0), (4.0, 0.5), (10.0, 0.2)])
def test_fixed_temperature_fit_misses_the_energy(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    fit = grabert_comparison(moments(params), params.M, params.k0, params.beta)
    assert abs(fit.energy_gap) > 1e-6 * fit.U_s


def test_fixed_temperature_fit_needs_a_mixed_state() -> None:
    with pytest.raises(PureStateError):
        grabert_comparison(uncoupled_moments(1.0, 1.0, math.inf, 1.0), 1.0, 1.0, math.inf)


@pytest.mark.parametrize("gamma", [1.5, 4.0, 10.0])
def test_bare_mass_fit_at_zero_temperature(gamma: float) -> None:
    params = caption_params(gamma, 5e-4)
    m = moments(params)
    fit = zero_T_comparison(m, params.M, params.k0, params.beta)
    assert not fit.ground_state
    assert fit.T_bar > 0.0
    verify_close(fit.U_bar, m.p2 / params.M, rel=1e-15)
    verify_close(fit.energy_gap, 0.5 * m.p2 / params.M - 0.5 * params.k0 * m.q2, rel=1e-12)
    assert fit.energy_gap > 0.0


def test_bare_mass_fit_of_the_vacuum() -> None:
    fit = zero_T_comparison(uncoupled_moments(1.0, 1.0, math.inf, 1.0), 1.0, 1.0, math.inf)
    assert fit.ground_state
    assert fit.T_bar == 0.0
    verify_close(fit.energy_gap, 0.0, rel=0.0, abs_tol=1e-15)


def test_bare_mass_fit_needs_a_low_temperature(unit_params: ModelParams) -> None:
    with pytest.raises(ParameterDomainError):
        zero_T_comparison(moments(unit_params), unit_params.M, unit_params.k0, unit_params.beta)
