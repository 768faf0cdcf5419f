from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from brownian_clausius.drude.models import GaussianMoments


class DimensionlessSet(BaseModel):
    """The reduced density kernel in the uncoupled number basis, reduced to four numbers and the length scale c."""

    model_config = ConfigDict(frozen=True)

    A: float = Field(gt=0, allow_inf_nan=False)
    Upsilon: float = Field(allow_inf_nan=False)
    Lambda: float = Field(ge=0, lt=1, allow_inf_nan=False)
    Delta: float = Field(ge=0, allow_inf_nan=False)
    """(Upsilon/Lambda)^2, or 0 when Lambda = 0."""

    c: float = Field(gt=0, allow_inf_nan=False)
    """Inverse length sqrt(M omega0 / hbar) of the uncoupled basis."""

    @property
    def r2(self) -> float:
        """Lambda^2 - Upsilon^2, the squared radius of the homogeneous recurrences (may be negative)."""
        return self.Lambda**2 - self.Upsilon**2

    @property
    def decay_rate(self) -> float:
        """Lambda + |Upsilon|: the number-basis diagonal decays like decay_rate^n."""
        return self.Lambda + abs(self.Upsilon)

    def prefactor(self, q2: float) -> float:
        """rho_00 = 1/(c sqrt(2 <q^2> A))."""
        return 1.0 / (self.c * math.sqrt(2.0 * q2 * self.A))


@dataclass(frozen=True)
class ReducedDensityMatrix:
    n_cut: int
    entries: npt.NDArray[np.float64]
    """Symmetric (n_cut + 1) x (n_cut + 1) matrix; opposite-parity entries are exactly zero."""

    trace_deficit: float
    """sum of the diagonal beyond n_cut, summed directly."""

    spectral_tail: float
    """xi^(n_cut + 1), the weight of the eigenvalues beyond n_cut."""

    dimset: DimensionlessSet
    moments: GaussianMoments
    hbar: float

    @property
    def c(self) -> float:
        return self.dimset.c

    @property
    def diagonal(self) -> npt.NDArray[np.float64]:
        return np.diag(self.entries).copy()

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))


class FirstMomentReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    q_mean: float
    p_mean: float
    q_third: float
    p_third: float
    q2_reconstructed: float
    p2_reconstructed: float
    q2_relative_error: float
    p2_relative_error: float


__all__ = ["DimensionlessSet", "ReducedDensityMatrix", "FirstMomentReport"]
