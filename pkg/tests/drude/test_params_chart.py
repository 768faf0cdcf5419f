import math

import pytest
from pydantic import ValidationError

from brownian_clausius.exceptions import ParameterDomainError
from brownian_clausius.params import ModelParams, Regime
from tests.common import CAPTION_GAMMAS


def test_unit_chart_derived_parameters() -> None:
    params = ModelParams(gamma=1.0)
    assert params.omega_d == 2.0
    assert params.omega0_sq == pytest.approx(0.5)
    assert params.k0 == pytest.approx(0.5)
    # gamma (Omega omega_d + w0^2) / omega_d^2 = 1 * (2 + 1) / 4
    assert params.gamma_o == pytest.approx(0.75)
    assert params.w1 == pytest.approx(complex(math.sqrt(0.75)))
    assert params.regime is Regime.UNDERDAMPED


def test_overdamped_regime() -> None:
    params = ModelParams(gamma=4.0)
    assert params.regime is Regime.OVERDAMPED
    assert params.w1.real == 0.0
    assert params.w1.imag == pytest.approx(math.sqrt(3.0))


def test_uncoupled_and_critical_flags() -> None:
    assert ModelParams(gamma=0.0).is_uncoupled
    assert ModelParams(gamma=2.0).is_critical
    assert not ModelParams(gamma=2.1).is_critical


def test_temperature_round_trip() -> None:
    params = ModelParams.from_temperature(0.25, gamma=0.5, kB=2.0)
    assert params.beta == pytest.approx(2.0)
    assert params.temperature == pytest.approx(0.25)


def test_invalid_parameters() -> None:
    with pytest.raises(ParameterDomainError):
        ModelParams.from_temperature(0.0)
    with pytest.raises(ValidationError):
        ModelParams(M=-1.0)
    with pytest.raises(ValidationError):
        ModelParams(gamma=-0.1)
    with pytest.raises(ValidationError):
        ModelParams(beta=math.inf)


@pytest.mark.parametrize("gamma", CAPTION_GAMMAS)
def test_physical_chart_inversion(gamma: float) -> None:
    params = ModelParams(gamma=gamma, Omega=1.3, w0=0.8, M=2.0)
    back = ModelParams.from_physical(
        M=params.M,
        omega0=params.omega0,
        omega_d=params.omega_d,
        gamma_o=params.gamma_o,
        omega_hint=params.Omega,
    )
    assert back.Omega == pytest.approx(params.Omega, rel=1e-12)
    assert back.gamma == pytest.approx(params.gamma, rel=1e-12)
    assert back.w0 == pytest.approx(params.w0, rel=1e-12)


def test_mass_and_spring_moves_keep_the_bath_fixed() -> None:
    params = ModelParams(gamma=1.5)
    heavier = params.with_mass(1.2)
    assert heavier.M == 1.2
    assert heavier.k0 == pytest.approx(params.k0, rel=1e-12)
    assert heavier.omega_d == pytest.approx(params.omega_d, rel=1e-12)
    assert heavier.gamma_o == pytest.approx(params.gamma_o, rel=1e-12)

    stiffer = params.with_spring(0.9)
    assert stiffer.M == params.M
    assert stiffer.k0 == pytest.approx(0.9, rel=1e-12)
    assert stiffer.omega_d == pytest.approx(params.omega_d, rel=1e-12)
    assert stiffer.gamma_o == pytest.approx(params.gamma_o, rel=1e-12)

    with pytest.raises(ParameterDomainError):
        params.with_spring(0.0)
