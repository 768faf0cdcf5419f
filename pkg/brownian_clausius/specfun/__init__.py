from brownian_clausius.specfun.gamma import (
    ComplexScalar,
    digamma,
    log_abs_gamma,
    log_gamma,
    log_gamma_ratio,
    trigamma,
)
from brownian_clausius.specfun.polynomials import (
    hermite,
    hermite_explicit,
    hermite_normalized_sequence,
    hyp2f1_terminating,
    jacobi,
    jacobi_explicit,
    jacobi_symmetric_scaled,
    jacobi_symmetric_scaled_log,
    legendre,
    legendre_explicit,
    legendre_scaled,
    legendre_scaled_sequence,
)

__all__ = [
    "ComplexScalar",
    "log_gamma",
    "digamma",
    "trigamma",
    "log_abs_gamma",
    "log_gamma_ratio",
    "hermite",
    "hermite_normalized_sequence",
    "legendre",
    "jacobi",
    "jacobi_symmetric_scaled",
    "jacobi_symmetric_scaled_log",
    "legendre_scaled",
    "legendre_scaled_sequence",
    "hyp2f1_terminating",
    "hermite_explicit",
    "legendre_explicit",
    "jacobi_explicit",
]
