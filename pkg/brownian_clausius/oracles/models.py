from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field


@dataclass(frozen=True)
class StarBath:
    """A finite bath of N oscillators, each coupled bilinearly to the system coordinate."""

    masses: npt.NDArray[np.float64]
    spring_constants: npt.NDArray[np.float64]
    couplings: npt.NDArray[np.float64]
    discretization: str

    @property
    def N(self) -> int:
        return int(self.masses.size)

    @property
    def frequencies(self) -> npt.NDArray[np.float64]:
        return np.sqrt(self.spring_constants / self.masses)

    @property
    def counter_term(self) -> float:
        """Coefficient of q^2 added to the system potential, sum c_j^2/(2 k_j)."""
        return float(np.sum(self.couplings**2 / (2.0 * self.spring_constants)))


@dataclass(frozen=True)
class NormalModes:
    frequencies: npt.NDArray[np.float64]
    """Normal-mode frequencies, ascending."""

    vectors: npt.NDArray[np.float64]
    """Orthogonal transformation; column k is mode k in mass-weighted coordinates, row 0 is the system."""

    @property
    def system_weights(self) -> npt.NDArray[np.float64]:
        """Squared system components U_0k^2 of every mode (they sum to 1)."""
        return self.vectors[0, :] ** 2


class FiniteDifferenceResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    """Derivative estimate."""

    step: float = Field(gt=0)
    """Step h used for the coarsest central difference."""

    error_estimate: float = Field(ge=0)
    """Difference between the reported value and the next-coarser estimate."""

    richardson: bool = True


__all__ = ["StarBath", "NormalModes", "FiniteDifferenceResult"]
