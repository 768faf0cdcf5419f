from __future__ import annotations

import cmath
import logging
import math
from enum import Enum
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from brownian_clausius.config import (
    CHART_INVERSION_NEWTON_STEPS,
    CRITICAL_DAMPING_BAND,
)
from brownian_clausius.exceptions import ParameterDomainError

logger = logging.getLogger(__name__)


class Regime(Enum):
    OVERDAMPED = "overdamped"  # gamma/2 > w0, real z1 < z2
    UNDERDAMPED = "underdamped"  # gamma/2 < w0, z2 = conj(z1)


class Variation(Enum):
    """The parameter a derivative or a Clausius audit is taken with respect to."""

    DAMPING = "damping"
    MASS = "mass"
    SPRING = "spring"


class ModelParams(BaseModel):
    """
    Oscillator plus Drude bath at inverse temperature beta.

    Stored in the (w0, Omega, gamma) chart. The physical parameters (omega0, omega_d, gamma_o) and the
    spring constant k0 = M omega0^2 are derived views.
    """

    model_config = ConfigDict(frozen=True)

    M: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    """Oscillator mass."""

    w0: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    """Renormalized frequency, w0^2 = z1 z2."""

    Omega: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    """Drude scale, the real rate of the response."""

    gamma: float = Field(default=0.0, ge=0, allow_inf_nan=False)
    """Damping parameter, gamma = z1 + z2."""

    beta: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    """Inverse temperature."""

    hbar: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    kB: float = Field(default=1.0, gt=0, allow_inf_nan=False)

    @classmethod
    def from_temperature(cls, T: float, **kwargs: Any) -> ModelParams:
        kB = kwargs.get("kB", 1.0)
        if not T > 0:
            raise ParameterDomainError(f"Temperature must be positive, got {T}")
        return cls(beta=1.0 / (kB * T), **kwargs)

    @property
    def omega_d(self) -> float:
        return self.Omega + self.gamma

    @property
    def omega0_sq(self) -> float:
        return self.w0**2 * self.Omega / (self.Omega + self.gamma)

    @property
    def omega0(self) -> float:
        return math.sqrt(self.omega0_sq)

    @property
    def k0(self) -> float:
        return self.M * self.omega0_sq

    @property
    def gamma_o(self) -> float:
        wd = self.omega_d
        return self.gamma * (self.Omega * wd + self.w0**2) / wd**2

    @property
    def w1(self) -> complex:
        """sqrt(w0^2 - (gamma/2)^2), imaginary in the overdamped regime."""
        return cmath.sqrt(complex(self.w0**2 - 0.25 * self.gamma**2))

    @property
    def temperature(self) -> float:
        return 1.0 / (self.kB * self.beta)

    @property
    def regime(self) -> Regime:
        return Regime.OVERDAMPED if 0.5 * self.gamma > self.w0 else Regime.UNDERDAMPED

    @property
    def is_uncoupled(self) -> bool:
        return self.gamma == 0.0

    @property
    def is_critical(self) -> bool:
        return abs(0.5 * self.gamma - self.w0) <= CRITICAL_DAMPING_BAND * self.w0

    def with_gamma(self, gamma: float) -> ModelParams:
        return ModelParams(**{**self.model_dump(), "gamma": gamma})

    def with_beta(self, beta: float) -> ModelParams:
        return ModelParams(**{**self.model_dump(), "beta": beta})

    def with_mass(self, M: float) -> ModelParams:
        """Move to mass M at fixed k0, omega_d and gamma_o."""
        return ModelParams.from_physical(
            M=M,
            omega0=math.sqrt(self.k0 / M),
            omega_d=self.omega_d,
            gamma_o=self.gamma_o,
            beta=self.beta,
            hbar=self.hbar,
            kB=self.kB,
            omega_hint=self.Omega,
        )

    def with_spring(self, k0: float) -> ModelParams:
        """Move to spring constant k0 at fixed M, omega_d and gamma_o."""
        if not k0 > 0:
            raise ParameterDomainError(f"Spring constant must be positive, got {k0}")
        return ModelParams.from_physical(
            M=self.M,
            omega0=math.sqrt(k0 / self.M),
            omega_d=self.omega_d,
            gamma_o=self.gamma_o,
            beta=self.beta,
            hbar=self.hbar,
            kB=self.kB,
            omega_hint=self.Omega,
        )

    @classmethod
    def from_physical(
        cls,
        M: float,
        omega0: float,
        omega_d: float,
        gamma_o: float,
        beta: float = 1.0,
        hbar: float = 1.0,
        kB: float = 1.0,
        omega_hint: Optional[float] = None,
    ) -> ModelParams:
        """
        Invert the reparametrization.

        The response denominator s^3 + omega_d s^2 + (gamma_o omega_d + omega0^2) s + omega0^2 omega_d has the
        roots -Omega, -z1, -z2. Omega is the real root (nearest to omega_hint when all three are real).
        """
        if omega0 <= 0 or omega_d <= 0 or gamma_o < 0:
            raise ParameterDomainError(f"Invalid physical parameters omega0={omega0}, omega_d={omega_d}, gamma_o={gamma_o}")

        a = omega_d
        b = gamma_o * omega_d + omega0**2
        c = omega0**2 * omega_d
        roots = np.roots([1.0, a, b, c])
        scale = max(abs(r) for r in roots)
        real_roots = [float(r.real) for r in roots if abs(r.imag) <= 1e-9 * scale]
        if not real_roots:
            raise ParameterDomainError("Response denominator has no real root")

        if len(real_roots) == 1:
            s = real_roots[0]
        elif omega_hint is not None:
            s = min(real_roots, key=lambda r: abs(r + omega_hint))
        else:
            raise ParameterDomainError("Three real roots; an omega_hint is required to pick Omega")

        for _ in range(CHART_INVERSION_NEWTON_STEPS):
            p = ((s + a) * s + b) * s + c
            dp = (3.0 * s + 2.0 * a) * s + b
            if dp == 0.0:
                break
            s -= p / dp

        Omega = -s
        gamma = omega_d - Omega
        if gamma < 0:
            if gamma > -1e-12 * omega_d:
                gamma = 0.0
            else:
                raise ParameterDomainError(f"Inversion produced negative damping {gamma}")
        w0 = math.sqrt(omega0**2 * omega_d / Omega)
        logger.debug(f"Inverted chart: Omega={Omega}, gamma={gamma}, w0={w0}")
        return cls(M=M, w0=w0, Omega=Omega, gamma=gamma, beta=beta, hbar=hbar, kB=kB)


__all__ = ["ModelParams", "Regime", "Variation"]
