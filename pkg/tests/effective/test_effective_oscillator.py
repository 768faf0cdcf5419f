import math

import numpy as np
import pytest
from scipy.integrate import quad

from brownian_clausius.densmat import internal_energy
from brownian_clausius.drude import moments, uncoupled_moments
from brownian_clausius.effective import (
    EffectiveOscillator,
    effective_star,
    eigen_solution,
    entropy_effective,
    entropy_von_neumann,
)
from brownian_clausius.exceptions import ParameterDomainError
from brownian_clausius.params import ModelParams
from tests.common import CAPTION_GRID, caption_params, verify_close


def _effective(params: ModelParams) -> EffectiveOscillator:
    return effective_star(moments(params), params.M, params.k0, params.beta, params.hbar, params.kB)


@pytest.mark.parametrize("gamma,T", CAPTION_GRID)
def test_effective_energy_is_the_internal_energy(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    eff = _effective(params)
    verify_close(eff.U_eff_star, internal_energy(moments(params), params.M, params.k0), rel=1e-12, label="U*")
    verify_close(eff.U_eff_star, eff.U_s, rel=1e-12, label="U_s")


@pytest.mark.parametrize("gamma,T", CAPTION_GRID)
def test_effective_oscillator_reproduces_the_moments(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    exact = moments(params)
    rebuilt = _effective(params).reconstructed_moments()
    verify_close(rebuilt.q2, exact.q2, rel=1e-12, label="q2")
    verify_close(rebuilt.p2, exact.p2, rel=1e-12, label="p2")


@pytest.mark.parametrize("gamma,T", CAPTION_GRID)
def test_free_energy_routes_agree(gamma: float, T: float) -> None:
    eff = _effective(caption_params(gamma, T))
    via_partition_function = -eff.kB * eff.T_eff_star * eff.ln_Z_eff
    verify_close(eff.F_eff_star, via_partition_function, rel=1e-10, abs_tol=1e-14, label="F*")


@pytest.mark.parametrize("gamma,T", CAPTION_GRID)
def test_coupling_stiffens_the_effective_spring(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    eff = _effective(params)
    assert eff.k_eff_star >= params.k0
    assert eff.T_eff_star > 0.0
    verify_close(eff.beta_eff_star * eff.hbar * eff.omega_eff_star, -math.log(eff.xi), rel=1e-12)


@pytest.mark.parametrize("T", [0.2, 1.0, 3.0])
def test_uncoupled_effective_oscillator_is_the_bare_one(T: float) -> None:
    params = caption_params(0.0, T)
    eff = _effective(params)
    verify_close(eff.M_eff_star, params.M, rel=1e-12, label="M*")
    verify_close(eff.k_eff_star, params.k0, rel=1e-12, label="k*")
    verify_close(eff.T_eff_star, T, rel=1e-12, label="T*")


def test_pure_state_oscillator() -> None:
    m = uncoupled_moments(1.0, 1.0, math.inf, 1.0)
    eff = effective_star(m, 1.0, 1.0, math.inf)
    assert eff.xi == 0.0
    assert eff.T_eff_star == 0.0
    assert eff.ln_Z_eff == -math.inf
    assert eff.beta_eff_star == math.inf
    assert eff.S == 0.0
    verify_close(eff.F_eff_star, 0.5, rel=1e-14)
    verify_close(eff.reconstructed_moments().q2, 0.5, rel=1e-14)


def test_entropy_forms_agree() -> None:
    rng = np.random.default_rng(20240611)
    for v in 0.5 + 10.0 ** rng.uniform(-6.0, 2.0, size=10_000):
        xi = (v - 0.5) / (v + 0.5)
        verify_close(entropy_effective(xi), entropy_von_neumann(v), rel=1e-9, label=f"S at v={v!r}")


def test_entropy_domain() -> None:
    assert entropy_von_neumann(0.5) == 0.0
    assert entropy_effective(0.0) == 0.0
    verify_close(entropy_von_neumann(1.5, kB=2.0), 2.0 * (2.0 * math.log(2.0)), rel=1e-15)
    with pytest.raises(ParameterDomainError):
        entropy_von_neumann(0.4)
    with pytest.raises(ParameterDomainError):
        entropy_effective(1.0)
    with pytest.raises(ParameterDomainError):
        entropy_effective(-0.1)


def test_eigen_solution(unit_params: ModelParams) -> None:
    m = moments(unit_params)
    solution = eigen_solution(m, unit_params.hbar)
    assert solution.xi == m.xi
    verify_close(solution.ansatz.v_tilde, m.v + 0.5, rel=1e-15)
    verify_close(solution.ansatz.c_tilde**4, m.p2 / m.q2, rel=1e-13)
    assert 0.0 < solution.ansatz.s <= 1.0
    spectrum = solution.spectrum(500)
    verify_close(float(spectrum.sum()), 1.0 - m.xi**501, rel=1e-13)
    assert np.all(np.diff(spectrum) < 0.0)

    for n in range(3):
        norm, _ = quad(lambda q: float(solution.eigenfunction(n, q)) ** 2, -math.inf, math.inf, epsabs=1e-13, epsrel=1e-12)
        verify_close(norm, 1.0, rel=1e-10, label=f"norm of phi_{n}")


@pytest.mark.parametrize("gamma,T", CAPTION_GRID)
def test_mass_ratio_follows_the_spring_ratio(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    eff = _effective(params)
    y = params.k0 / eff.k_eff_star
    verify_close(params.M / eff.M_eff_star, 1.0 / (2.0 - y), rel=1e-12)
