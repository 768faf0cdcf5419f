from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Literal, Optional

import numpy as np
import numpy.typing as npt
import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from brownian_clausius.config import (
    CRITICAL_DAMPING_BAND,
    DEFAULT_GAMMA_LIST,
    DEFAULT_N_POINTS,
    DEFAULT_T_MAX,
    DEFAULT_T_MIN,
)
from brownian_clausius.params import ModelParams

logger = logging.getLogger(__name__)


class RunConfig(BaseModel):
    """Settings shared by all CLI commands. Defaults are the unit system of the figures."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    hbar: float = Field(default=1.0, gt=0)
    kB: float = Field(default=1.0, gt=0)
    w0: float = Field(default=1.0, gt=0)
    Omega: float = Field(default=1.0, gt=0)
    M: float = Field(default=1.0, gt=0)

    gamma_list: tuple[float, ...] = DEFAULT_GAMMA_LIST
    """Damping values, one output column each."""

    t_min: float = Field(default=DEFAULT_T_MIN, gt=0)
    t_max: float = Field(default=DEFAULT_T_MAX, gt=0)
    n_points: int = Field(default=DEFAULT_N_POINTS, ge=2)

    format: Literal["csv", "json"] = "csv"
    tolerances: dict[str, float] = Field(default_factory=dict)
    """Named overrides of the self-test tolerances."""

    workers: int = Field(default=1, ge=1)
    """Grid points evaluated concurrently; 1 is serial."""

    @model_validator(mode="after")
    def check_grid(self) -> RunConfig:
        if self.t_max <= self.t_min:
            raise ValueError(f"t_max ({self.t_max}) must exceed t_min ({self.t_min})")
        for gamma in self.gamma_list:
            if gamma <= 0:
                raise ValueError(f"gamma values must be positive, got {gamma}")
            if abs(0.5 * gamma - self.w0) <= CRITICAL_DAMPING_BAND * self.w0:
                raise ValueError(f"gamma = {gamma} is critically damped for w0 = {self.w0}")
        return self

    def temperatures(self) -> npt.NDArray[np.float64]:
        return np.linspace(self.t_min, self.t_max, self.n_points)

    def params(self, gamma: float, T: float) -> ModelParams:
        return ModelParams.from_temperature(
            T,
            M=self.M,
            w0=self.w0,
            Omega=self.Omega,
            gamma=gamma,
            hbar=self.hbar,
            kB=self.kB,
        )

    def updated(self, **overrides: Any) -> RunConfig:
        """A copy with the non-None overrides applied (and validated)."""
        values = {key: value for key, value in overrides.items() if value is not None}
        return RunConfig(**{**self.model_dump(), **values})


def load_run_config(path: Optional[Path] = None) -> RunConfig:
    if path is None:
        return RunConfig()
    with open(path, "r", encoding="utf-8") as in_f:
        raw = yaml.safe_load(in_f) or {}
    if not isinstance(raw, dict):
        raise ValueError(f"Run configuration {path} must be a mapping, got {type(raw).__name__}")
    logger.debug(f"Loaded run configuration from {path}: {raw}")
    return RunConfig(**raw)


__all__ = ["RunConfig", "load_run_config"]
