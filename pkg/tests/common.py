import math
from typing import Any

from brownian_clausius.params import ModelParams

# Damping values and temperatures of the figure captions, hbar = kB = w0 = Omega = M = 1
CAPTION_GAMMAS = (0.5, 1.5, 4.0, 10.0)
ORACLE_TEMPERATURES = (0.05, 0.5, 1.0, 2.0)
DERIVATIVE_TEMPERATURES = (0.1, 1.0)

# (gamma, T) points covering both damping regimes at low and high temperature
CAPTION_GRID = [(gamma, T) for gamma in CAPTION_GAMMAS for T in ORACLE_TEMPERATURES]
SMALL_GRID = [(0.5, 0.1), (0.5, 1.0), (4.0, 0.1), (4.0, 1.0)]


def caption_params(gamma: float, T: float, **kwargs: Any) -> ModelParams:
    return ModelParams.from_temperature(T, gamma=gamma, **kwargs)


def relative_gap(a: float, b: float, floor: float = 1e-300) -> float:
    return abs(a - b) / max(abs(a), abs(b), floor)


def verify_close(actual: float, expected: float, rel: float, abs_tol: float = 0.0, label: str = "") -> None:
    assert math.isfinite(actual), f"{label} is not finite: {actual}"
    assert abs(actual - expected) <= max(rel * max(abs(actual), abs(expected)), abs_tol), (
        f"{label}: {actual!r} != {expected!r} (rel {relative_gap(actual, expected):.3e}, allowed {rel:.1e})"
    )
