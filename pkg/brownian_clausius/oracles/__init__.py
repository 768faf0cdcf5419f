from brownian_clausius.oracles.fdt import fdt_quadrature_moments, verify_factorization
from brownian_clausius.oracles.finite_difference import (
    central_difference,
    default_step,
    finite_difference,
)
from brownian_clausius.oracles.matsubara import matsubara_moments
from brownian_clausius.oracles.models import FiniteDifferenceResult, NormalModes, StarBath
from brownian_clausius.oracles.quadrature import eigencheck_quadrature, rho_element_quadrature
from brownian_clausius.oracles.star_bath import (
    discretize_drude,
    normal_modes,
    star_bath_moments,
    thermal_moments,
)

__all__ = [
    "StarBath",
    "NormalModes",
    "FiniteDifferenceResult",
    "matsubara_moments",
    "fdt_quadrature_moments",
    "verify_factorization",
    "star_bath_moments",
    "discretize_drude",
    "normal_modes",
    "thermal_moments",
    "rho_element_quadrature",
    "eigencheck_quadrature",
    "finite_difference",
    "central_difference",
    "default_step",
]
