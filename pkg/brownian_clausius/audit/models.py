from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from brownian_clausius.params import Variation


class VariationReport(BaseModel):
    """
    Heat and work split of dU_s along one parameter, per unit change of that parameter.

    The system split uses the bare (M, k0); the effective split uses (M_eff*, k_eff*). Both add up to dU_s.
    """

    model_config = ConfigDict(frozen=True)

    which: Variation
    T: float
    T_eff_star: float
    dU_s: float
    dQ_s: float
    dW_s: float
    dQ_eff_star: float
    dW_eff_star: float
    dS: float
    """Derivative of the von Neumann entropy."""

    T_dS: float
    Teff_dS: float
    Y: float
    """(T_eff* - T) dS + d(W_eff* - W_s), which equals the naive gap dQ_s - T dS."""

    naive_gap: float
    """dQ_s - T dS; positive values violate the Clausius inequality in terms of T."""

    naive_violated: bool
    effective_residual: float
    """(dQ_eff* - T_eff* dS) relative to T_eff* dS."""

    @property
    def effective_gap(self) -> float:
        """dQ_s - T_eff* dS."""
        return self.dQ_s - self.Teff_dS

    @property
    def first_law_residual(self) -> float:
        scale = max(abs(self.dU_s), abs(self.dQ_s), abs(self.dQ_eff_star), 1e-300)
        return max(abs(self.dQ_s + self.dW_s - self.dU_s), abs(self.dQ_eff_star + self.dW_eff_star - self.dU_s)) / scale


class WeakCouplingReport(BaseModel):
    """Mass and spring variations of the bare canonical oscillator, where dQ_s = T dS holds exactly."""

    model_config = ConfigDict(frozen=True)

    dQ_dM: float
    T_dS_dM: float
    dQ_dk0: float
    T_dS_dk0: float
    dW_dM: float
    dW_dk0: float
    dQ_dM_closed_form: float
    dQ_dk0_closed_form: float

    @property
    def residual(self) -> float:
        """Largest relative deviation among the equalities."""
        pairs = (
            (self.dQ_dM, self.T_dS_dM),
            (self.dQ_dk0, self.T_dS_dk0),
            (self.dQ_dM, self.dQ_dM_closed_form),
            (self.dQ_dk0, self.dQ_dk0_closed_form),
        )
        return max(abs(a - b) / max(abs(a), abs(b), 1e-300) for a, b in pairs)


class CyclicIntegralReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    gamma_max: float
    lhs: float
    """int_0^gamma_max (1/T_eff*) dQ_eff*/dgamma dgamma."""

    rhs: float
    """S_N(gamma_max) - S_N(0)."""

    reverse: float
    """The same integral from gamma_max back to 0."""

    panels: list[float]

    @property
    def residual(self) -> float:
        return self.lhs - self.rhs

    @property
    def cycle(self) -> float:
        """Forward plus reverse leg; zero for the reversible cycle."""
        return self.lhs + self.reverse


__all__ = ["VariationReport", "WeakCouplingReport", "CyclicIntegralReport"]
