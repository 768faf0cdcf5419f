import logging
import math

import numpy as np
import numpy.typing as npt

from brownian_clausius.config import (
    DEFAULT_TRUNCATION_TOLERANCE,
    MAX_MATRIX_DIMENSION,
    MAX_TRUNCATION_TOLERANCE,
)
from brownian_clausius.densmat.elements import diagonal_sequence, matrix_element
from brownian_clausius.densmat.models import DimensionlessSet, FirstMomentReport, ReducedDensityMatrix
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.exceptions import ConsistencyError, MatrixOverflowError, ParameterDomainError

logger = logging.getLogger(__name__)

ODD_MOMENT_TOLERANCE = 1e-12
SECOND_MOMENT_TOLERANCE = 1e-8
TAIL_RELATIVE_PRECISION = 1e-10


def _tail_length(decay_rate: float) -> int:
    return int(math.ceil(math.log(TAIL_RELATIVE_PRECISION) / math.log(decay_rate))) + 8


def _diagonal_tail(n_cut: int, dimset: DimensionlessSet, moments: GaussianMoments) -> npt.NDArray[np.float64]:
    """Diagonal entries n_cut + 1, n_cut + 2, ... until they are negligible against the first of them."""
    eta = dimset.decay_rate
    if eta == 0.0:
        return np.zeros(0)
    n_max = n_cut + _tail_length(eta)
    return diagonal_sequence(n_max, dimset, moments)[n_cut + 1 :]


def truncation_index(dimset: DimensionlessSet, moments: GaussianMoments, tolerance: float) -> int:
    """Smallest n_cut from ln(tolerance)/ln(decay_rate), raised until the diagonal tail is within tolerance."""
    eta = dimset.decay_rate
    if eta == 0.0:
        return 0
    n_cut = max(0, math.ceil(math.log(tolerance) / math.log(eta)))
    while float(np.sum(_diagonal_tail(n_cut, dimset, moments)[::-1])) > tolerance:
        n_cut += 1
        if n_cut > MAX_MATRIX_DIMENSION:
            break
    return n_cut


def build_truncated(
    dimset: DimensionlessSet,
    moments: GaussianMoments,
    tolerance: float = DEFAULT_TRUNCATION_TOLERANCE,
    hbar: float = 1.0,
) -> ReducedDensityMatrix:
    if not 0.0 < tolerance <= MAX_TRUNCATION_TOLERANCE:
        raise ParameterDomainError(f"tolerance must lie in (0, {MAX_TRUNCATION_TOLERANCE:g}], got {tolerance}")

    n_cut = truncation_index(dimset, moments, tolerance)
    if n_cut > MAX_MATRIX_DIMENSION:
        raise MatrixOverflowError(f"n_cut = {n_cut} exceeds the largest supported dimension", MAX_MATRIX_DIMENSION)
    logger.debug(f"Truncating at n_cut={n_cut} (decay rate {dimset.decay_rate:.6f}, tolerance {tolerance:g})")

    size = n_cut + 1
    entries = np.zeros((size, size))
    for n in range(size):
        for m in range(n % 2, n + 1, 2):
            value = matrix_element(n, m, dimset, moments)
            entries[n, m] = value
            entries[m, n] = value

    if np.any(np.diag(entries) < 0.0):
        raise ConsistencyError("negative diagonal entry", "rho_nn")

    trace_deficit = float(np.sum(_diagonal_tail(n_cut, dimset, moments)[::-1]))
    xi = moments.xi
    return ReducedDensityMatrix(
        n_cut=n_cut,
        entries=entries,
        trace_deficit=trace_deficit,
        spectral_tail=xi ** (n_cut + 1),
        dimset=dimset,
        moments=moments,
        hbar=hbar,
    )


def internal_energy(moments: GaussianMoments, M: float, k0: float) -> float:
    """U_s = <p^2>/(2M) + k0 <q^2>/2."""
    return moments.p2 / (2.0 * M) + 0.5 * k0 * moments.q2


def number_basis_energy(matrix: ReducedDensityMatrix, omega0: float) -> float:
    """sum_n rho_nn hbar omega0 (n + 1/2), with the diagonal beyond n_cut added back."""
    quanta = np.arange(matrix.n_cut + 1) + 0.5
    inside = float(np.sum(matrix.diagonal * quanta))
    tail = _diagonal_tail(matrix.n_cut, matrix.dimset, matrix.moments)
    tail_quanta = np.arange(matrix.n_cut + 1, matrix.n_cut + 1 + tail.size) + 0.5
    outside = float(np.sum((tail * tail_quanta)[::-1]))
    return matrix.hbar * omega0 * (inside + outside)


def _ladder(size: int) -> npt.NDArray[np.float64]:
    """Annihilation operator on the first `size` number states."""
    return np.diag(np.sqrt(np.arange(1.0, size)), k=1)


def first_moment_checks(matrix: ReducedDensityMatrix) -> FirstMomentReport:
    """
    Odd moments of q and p, and the reconstructed second moments, from ladder-operator contractions.

    q = (a + a^dagger)/(c sqrt 2) and p = i hbar c (a^dagger - a)/sqrt 2. Operators act on one extra level so the
    squared operators are exact on the retained block.
    """
    size = matrix.n_cut + 1
    a = _ladder(size + 1)
    x = a + a.T  # a + a^dagger
    y = a.T - a  # a^dagger - a; p = i hbar c y / sqrt 2
    rho = matrix.entries

    def expectation(op: npt.NDArray[np.float64]) -> float:
        return float(np.sum(rho * op[:size, :size].T))

    x2 = x @ x
    y2 = y @ y
    c, hbar = matrix.c, matrix.hbar

    q_mean = expectation(x) / (c * math.sqrt(2.0))
    # <p> and <p^3> are i times real contractions; report the real factors
    p_mean = hbar * c / math.sqrt(2.0) * expectation(y)
    q_third = expectation(x2 @ x) / (c * math.sqrt(2.0)) ** 3
    p_third = (hbar * c / math.sqrt(2.0)) ** 3 * expectation(y2 @ y)
    q2 = expectation(x2) / (2.0 * c * c)
    p2 = -((hbar * c) ** 2) / 2.0 * expectation(y2)

    q2_error = abs(q2 - matrix.moments.q2) / matrix.moments.q2
    p2_error = abs(p2 - matrix.moments.p2) / matrix.moments.p2
    report = FirstMomentReport(
        q_mean=q_mean,
        p_mean=p_mean,
        q_third=q_third,
        p_third=p_third,
        q2_reconstructed=q2,
        p2_reconstructed=p2,
        q2_relative_error=q2_error,
        p2_relative_error=p2_error,
    )

    for name, value in (("<q>", q_mean), ("<p>", p_mean), ("<q^3>", q_third), ("<p^3>", p_third)):
        if abs(value) > ODD_MOMENT_TOLERANCE:
            raise ConsistencyError(f"odd moment {value:.3e} does not vanish", name)
    for name, error in (("<q^2>", q2_error), ("<p^2>", p2_error)):
        if error > SECOND_MOMENT_TOLERANCE:
            raise ConsistencyError(f"reconstruction differs by {error:.3e} (relative)", name)
    return report


__all__ = [
    "build_truncated",
    "truncation_index",
    "internal_energy",
    "number_basis_energy",
    "first_moment_checks",
]
