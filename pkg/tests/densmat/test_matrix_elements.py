import math

import pytest
from pydantic import ValidationError
from scipy.integrate import quad

from brownian_clausius.densmat import (
    DimensionlessSet,
    diagonal_element,
    diagonal_sequence,
    dimensionless_quantities,
    matrix_element,
    matrix_element_hypergeometric,
    occupation,
    position_kernel,
)
from brownian_clausius.drude import moments, uncoupled_moments
from brownian_clausius.exceptions import DegenerateStateError, ParameterDomainError
from brownian_clausius.params import ModelParams
from tests.common import caption_params, relative_gap, verify_close

COUPLED_STATES = [(1.5, 1.0), (10.0, 0.05), (4.0, 2.0), (0.5, 0.1)]


@pytest.mark.parametrize("gamma,T", COUPLED_STATES)
def test_jacobi_and_hypergeometric_routes_agree(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    m = moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    worst = 0.0
    for n in range(61):
        for k in range(n % 2, n + 1, 2):
            jacobi_value = matrix_element(n, k, dimset, m)
            series_value = matrix_element_hypergeometric(n, k, dimset, m)
            worst = max(worst, relative_gap(jacobi_value, series_value, floor=1e-290))
    assert worst < 1e-9


@pytest.mark.parametrize("gamma,T", COUPLED_STATES)
def test_matrix_is_symmetric_with_parity_zeros(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    m = moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    for n, k in [(1, 0), (4, 1), (7, 2), (10, 3)]:
        assert matrix_element(n, k, dimset, m) == 0.0
        assert matrix_element_hypergeometric(n, k, dimset, m) == 0.0
    for n, k in [(2, 0), (5, 1), (12, 4)]:
        assert matrix_element(n, k, dimset, m) == matrix_element(k, n, dimset, m)


@pytest.mark.parametrize("gamma,T", COUPLED_STATES)
def test_diagonal_forms_agree(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    m = moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    sequence = diagonal_sequence(30, dimset, m)
    for n in range(31):
        general = matrix_element(n, n, dimset, m)
        verify_close(diagonal_element(n, dimset, m), general, rel=1e-10, abs_tol=1e-300, label=f"rho_{n},{n}")
        verify_close(float(sequence[n]), general, rel=1e-10, abs_tol=1e-300, label=f"sequence {n}")
        assert general >= 0.0


@pytest.mark.parametrize("T", [0.25, 0.5, 2.0])
def test_uncoupled_state_is_thermal(T: float) -> None:
    params = caption_params(0.0, T)
    m = moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    xi = m.xi
    assert abs(dimset.Upsilon) < 1e-12
    verify_close(dimset.Lambda, xi, rel=1e-12, abs_tol=1e-15, label="Lambda")
    verify_close(matrix_element(0, 0, dimset, m), 1.0 - xi, rel=1e-12, label="rho_00")
    for n in range(11):
        verify_close(matrix_element(n, n, dimset, m), (1.0 - xi) * xi**n, rel=1e-10, abs_tol=1e-300, label=f"rho_{n},{n}")
        assert abs(matrix_element(n + 2, n, dimset, m)) < 1e-14


def test_ground_state_is_the_vacuum() -> None:
    m = uncoupled_moments(1.0, 1.0, math.inf, 1.0)
    dimset = dimensionless_quantities(m, 1.0, 1.0, 1.0)
    assert dimset.Lambda == 0.0
    assert dimset.decay_rate < 1e-15
    verify_close(matrix_element(0, 0, dimset, m), 1.0, rel=1e-14)
    assert occupation(0, m) == 1.0
    assert occupation(3, m) == 0.0


def test_occupation_is_normalized(unit_params: ModelParams) -> None:
    m = moments(unit_params)
    total = math.fsum(occupation(n, m) for n in range(400))
    verify_close(total, 1.0 - m.xi**400, rel=1e-13)
    with pytest.raises(ParameterDomainError):
        occupation(-1, m)


def test_position_kernel(unit_params: ModelParams) -> None:
    m = moments(unit_params)
    total, _ = quad(lambda q: position_kernel(q, q, m), -math.inf, math.inf, epsabs=1e-14, epsrel=1e-13)
    verify_close(total, 1.0, rel=1e-10)
    assert position_kernel(0.3, -0.2, m) == position_kernel(-0.2, 0.3, m)
    second, _ = quad(lambda q: q * q * position_kernel(q, q, m), -math.inf, math.inf, epsabs=1e-14, epsrel=1e-13)
    verify_close(second, m.q2, rel=1e-10)


def test_index_and_degeneracy_errors(unit_params: ModelParams) -> None:
    m = moments(unit_params)
    dimset = dimensionless_quantities(m, unit_params.M, unit_params.omega0, unit_params.hbar)
    with pytest.raises(ParameterDomainError):
        matrix_element(-1, 1, dimset, m)
    with pytest.raises(ParameterDomainError):
        matrix_element_hypergeometric(2, -2, dimset, m)

    flat = DimensionlessSet(A=1.0, Upsilon=0.0, Lambda=0.2, Delta=0.0, c=1.0)
    with pytest.raises(DegenerateStateError):
        matrix_element_hypergeometric(2, 0, flat, m)


def test_dimensionless_set_validation() -> None:
    with pytest.raises(ValidationError):
        DimensionlessSet(A=1.0, Upsilon=0.1, Lambda=1.0, Delta=0.01, c=1.0)
    with pytest.raises(ValidationError):
        DimensionlessSet(A=0.0, Upsilon=0.1, Lambda=0.5, Delta=0.04, c=1.0)
    dimset = DimensionlessSet(A=1.0, Upsilon=-0.3, Lambda=0.4, Delta=0.5625, c=1.0)
    verify_close(dimset.r2, 0.07, rel=1e-14)
    verify_close(dimset.decay_rate, 0.7, rel=1e-15)
