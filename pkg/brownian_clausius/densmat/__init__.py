from brownian_clausius.densmat.elements import (
    diagonal_element,
    diagonal_sequence,
    matrix_element,
    matrix_element_hypergeometric,
    occupation,
)
from brownian_clausius.densmat.kernel import dimensionless_quantities, position_kernel
from brownian_clausius.densmat.matrix import (
    build_truncated,
    first_moment_checks,
    internal_energy,
    number_basis_energy,
    truncation_index,
)
from brownian_clausius.densmat.models import (
    DimensionlessSet,
    FirstMomentReport,
    ReducedDensityMatrix,
)

__all__ = [
    "DimensionlessSet",
    "ReducedDensityMatrix",
    "FirstMomentReport",
    "position_kernel",
    "dimensionless_quantities",
    "matrix_element",
    "matrix_element_hypergeometric",
    "diagonal_element",
    "diagonal_sequence",
    "occupation",
    "build_truncated",
    "truncation_index",
    "internal_energy",
    "number_basis_energy",
    "first_moment_checks",
]
