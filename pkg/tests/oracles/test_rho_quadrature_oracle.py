import pytest

from brownian_clausius.densmat import dimensionless_quantities, matrix_element
from brownian_clausius.drude import moments
from brownian_clausius.effective import eigen_solution
from brownian_clausius.exceptions import ParameterDomainError
from brownian_clausius.oracles import eigencheck_quadrature, rho_element_quadrature
from brownian_clausius.params import ModelParams
from tests.common import caption_params, verify_close


@pytest.mark.parametrize("gamma,T", [(1.5, 1.0), (4.0, 0.1)])
def test_quadrature_matches_matrix_elements(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    m = moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    for n in range(9):
        for k in range(n % 2, n + 1, 2):
            oracle = rho_element_quadrature(n, k, m, params.M, params.omega0, params.hbar)
            closed = matrix_element(n, k, dimset, m)
            verify_close(oracle, closed, rel=1e-8, abs_tol=1e-13, label=f"rho_{n},{k}")


@pytest.mark.slow
@pytest.mark.parametrize("gamma,T", [(1.5, 1.0), (4.0, 0.1)])
def test_quadrature_matches_matrix_elements_to_index_twenty(gamma: float, T: float) -> None:
    params = caption_params(gamma, T)
    m = moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    for n in range(21):
        for k in range(n % 2, n + 1, 2):
            oracle = rho_element_quadrature(n, k, m, params.M, params.omega0, params.hbar)
            closed = matrix_element(n, k, dimset, m)
            verify_close(oracle, closed, rel=1e-8, abs_tol=1e-13, label=f"rho_{n},{k}")


def test_quadrature_parity_zeros() -> None:
    params = caption_params(1.5, 1.0)
    m = moments(params)
    for n, k in [(1, 0), (3, 2), (5, 0)]:
        assert abs(rho_element_quadrature(n, k, m, params.M, params.omega0)) < 1e-13


def test_quadrature_index_range() -> None:
    params = caption_params(1.5, 1.0)
    m = moments(params)
    with pytest.raises(ParameterDomainError):
        rho_element_quadrature(41, 1, m, params.M, params.omega0)
    with pytest.raises(ParameterDomainError):
        rho_element_quadrature(-1, 1, m, params.M, params.omega0)


@pytest.mark.parametrize("n", range(6))
def test_eigenfunctions_solve_the_kernel_equation(n: int) -> None:
    params = caption_params(1.5, 1.0)
    m = moments(params)
    assert eigencheck_quadrature(n, m, eigen_solution(m, params.hbar), params.hbar) < 1e-8


def test_eigencheck_index_range(unit_params: ModelParams) -> None:
    m = moments(unit_params)
    with pytest.raises(ParameterDomainError):
        eigencheck_quadrature(21, m, eigen_solution(m))
