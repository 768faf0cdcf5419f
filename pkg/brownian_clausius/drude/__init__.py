from brownian_clausius.drude.decomposition import (
    decompose,
    lambda_coefficients,
    lambda_gradients,
    response_roots,
)
from brownian_clausius.drude.derivatives import (
    dmoments_dgamma,
    dmoments_dk0,
    dmoments_dM,
    moment_derivatives,
    parameter_flow,
    uncoupled_moment_derivatives,
)
from brownian_clausius.drude.models import (
    DrudeDecomposition,
    GaussianMoments,
    MomentDerivatives,
    ParameterFlow,
)
from brownian_clausius.drude.moments import (
    coth,
    csch_sq,
    moments,
    thermal_factor,
    thermal_factor_slope,
    uncoupled_moments,
)
from brownian_clausius.drude.response import (
    spectral_density,
    susceptibility,
    susceptibility_direct,
)

__all__ = [
    "DrudeDecomposition",
    "GaussianMoments",
    "MomentDerivatives",
    "ParameterFlow",
    "decompose",
    "response_roots",
    "lambda_coefficients",
    "lambda_gradients",
    "moments",
    "uncoupled_moments",
    "coth",
    "csch_sq",
    "thermal_factor",
    "thermal_factor_slope",
    "parameter_flow",
    "moment_derivatives",
    "uncoupled_moment_derivatives",
    "dmoments_dgamma",
    "dmoments_dM",
    "dmoments_dk0",
    "spectral_density",
    "susceptibility",
    "susceptibility_direct",
]
