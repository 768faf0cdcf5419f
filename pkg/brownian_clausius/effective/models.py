from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.drude.moments import coth
from brownian_clausius.specfun import hermite_normalized_sequence


class EigenAnsatz(BaseModel):
    """Scales of the Gaussian ansatz that diagonalizes the reduced density kernel."""

    model_config = ConfigDict(frozen=True)

    c_tilde: float = Field(gt=0)
    """Inverse length (<p^2>/(hbar^2 <q^2>))^(1/4) of the eigenfunctions."""

    v_tilde: float = Field(ge=1)
    """sqrt(1/4 + c_tilde^2 <q^2> + v^2) = v + 1/2."""

    y_scale: float
    s: float = Field(gt=0, le=1)
    """Argument scale of the closed Gaussian-Hermite integral; 1 only for a pure state."""


class EigenSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    ansatz: EigenAnsatz
    v: float = Field(ge=0.5)
    xi: float = Field(ge=0, lt=1)
    """Ratio of consecutive eigenvalues."""

    def probability(self, n: int) -> float:
        """p_n = (1 - xi) xi^n."""
        if self.xi == 0.0:
            return 1.0 if n == 0 else 0.0
        return (1.0 - self.xi) * self.xi**n

    def spectrum(self, n_max: int) -> npt.NDArray[np.float64]:
        return np.array([self.probability(n) for n in range(n_max + 1)])

    def eigenfunction(self, n: int, q: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """phi_n(q) = sqrt(c_tilde / (2^n n! sqrt(pi))) exp(-c_tilde^2 q^2 / 2) H_n(c_tilde q)."""
        c = self.ansatz.c_tilde
        x = c * np.asarray(q, dtype=np.float64)
        return math.sqrt(c) * hermite_normalized_sequence(n, x)[n] * np.exp(-0.5 * x * x)


class EffectiveOscillator(BaseModel):
    """The uncoupled oscillator (M_eff*, k_eff*) at T_eff* whose canonical state is rho_s and whose energy is U_s."""

    model_config = ConfigDict(frozen=True)

    xi: float = Field(ge=0, lt=1)
    v: float = Field(ge=0.5)
    M_eff_star: float = Field(gt=0)
    omega_eff_star: float = Field(gt=0)
    k_eff_star: float = Field(gt=0)
    T_eff_star: float = Field(ge=0)
    Z_eff: float = Field(ge=0)
    ln_Z_eff: float
    """-inf for the pure state."""

    U_eff_star: float
    S: float = Field(ge=0)
    F_eff_star: float
    U_s: float
    T: float = Field(ge=0)
    """Temperature of the total system."""

    hbar: float = 1.0
    kB: float = 1.0

    @property
    def beta_eff_star(self) -> float:
        """-ln(xi) / (hbar omega_eff*); inf for the pure state."""
        if self.xi == 0.0:
            return math.inf
        return -math.log(self.xi) / (self.hbar * self.omega_eff_star)

    def reconstructed_moments(self) -> GaussianMoments:
        """Canonical coth forms at (M_eff*, omega_eff*, beta_eff*)."""
        factor = coth(0.5 * self.beta_eff_star * self.hbar * self.omega_eff_star)
        q2 = self.hbar / (2.0 * self.M_eff_star * self.omega_eff_star) * factor
        p2 = 0.5 * self.M_eff_star * self.hbar * self.omega_eff_star * factor
        return GaussianMoments.from_variances(q2, p2, self.hbar)


class GrabertComparison(BaseModel):
    """Uncoupled oscillator at the true temperature T reproducing rho_s, with a frequency fixed by v."""

    model_config = ConfigDict(frozen=True)

    omega_tilde: float
    M_tilde: float
    U_tilde: float
    T_tilde: float
    U_s: float

    @property
    def energy_gap(self) -> float:
        return self.U_tilde - self.U_s


class ZeroTemperatureComparison(BaseModel):
    """Uncoupled oscillator at the bare mass M reproducing the ground-state rho_s."""

    model_config = ConfigDict(frozen=True)

    omega_bar: float
    T_bar: float
    U_bar: float
    U_s: float
    ground_state: bool
    """True when xi = 0, so T_bar is the limit value 0."""

    @property
    def energy_gap(self) -> float:
        return self.U_bar - self.U_s


__all__ = [
    "EigenAnsatz",
    "EigenSolution",
    "EffectiveOscillator",
    "GrabertComparison",
    "ZeroTemperatureComparison",
]
