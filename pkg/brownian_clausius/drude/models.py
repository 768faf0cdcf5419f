from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

from brownian_clausius.config import UNCERTAINTY_ROUNDING
from brownian_clausius.exceptions import NonFiniteError, UncertaintyViolationError
from brownian_clausius.params import Regime, Variation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DrudeDecomposition:
    """Partial-fraction form of the Drude response: rates (Omega, z1, z2) and residues lambda_l."""

    omega_1: float
    omega_2: complex
    omega_3: complex
    lambdas: tuple[complex, complex, complex]
    regime: Regime

    @property
    def frequencies(self) -> tuple[complex, complex, complex]:
        return (complex(self.omega_1), self.omega_2, self.omega_3)


@dataclass(frozen=True)
class ParameterFlow:
    """Rates of change of (Omega, gamma, w0) and the explicit mass rate along one variation."""

    which: Variation
    dOmega: float
    dgamma: float
    dw0: float
    dM: float


class GaussianMoments(BaseModel):
    model_config = ConfigDict(frozen=True)

    q2: float = Field(gt=0, allow_inf_nan=False)
    """Position variance <q^2>."""

    p2: float = Field(gt=0, allow_inf_nan=False)
    """Momentum variance <p^2>."""

    v: float = Field(ge=0.5, allow_inf_nan=False)
    """Uncertainty parameter sqrt(q2 p2)/hbar."""

    @classmethod
    def from_variances(cls, q2: float, p2: float, hbar: float) -> GaussianMoments:
        if not (math.isfinite(q2) and math.isfinite(p2)):
            raise NonFiniteError(f"Non-finite moments q2={q2}, p2={p2}")
        if q2 <= 0 or p2 <= 0:
            raise UncertaintyViolationError(f"Moments must be positive, got q2={q2}, p2={p2}")

        v = math.sqrt(q2 * p2) / hbar
        if v < 0.5:
            if v < 0.5 - UNCERTAINTY_ROUNDING:
                raise UncertaintyViolationError(f"v = {v} is below the Heisenberg bound 1/2")
            logger.warning(f"Clamping v = {v!r} to 1/2")
            v = 0.5
        return cls(q2=q2, p2=p2, v=v)

    @property
    def xi(self) -> float:
        """Ratio of consecutive eigenvalues, (v - 1/2)/(v + 1/2)."""
        return (self.v - 0.5) / (self.v + 0.5)


class MomentDerivatives(BaseModel):
    model_config = ConfigDict(frozen=True)

    dq2: float = Field(allow_inf_nan=False)
    dp2: float = Field(allow_inf_nan=False)
    which: Variation
