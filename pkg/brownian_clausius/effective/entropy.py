import math

from scipy.special import xlogy

from brownian_clausius.exceptions import ParameterDomainError


def entropy_von_neumann(v: float, kB: float = 1.0) -> float:
    """S_N = kB [(v + 1/2) ln(v + 1/2) - (v - 1/2) ln(v - 1/2)]."""
    if not v >= 0.5:
        raise ParameterDomainError(f"v must be at least 1/2, got {v}")
    return kB * float(xlogy(v + 0.5, v + 0.5) - xlogy(v - 0.5, v - 0.5))


def entropy_effective(xi: float, kB: float = 1.0) -> float:
    """Thermal entropy of the effective oscillator, -kB [ln(1 - xi) + xi ln(xi) / (1 - xi)]."""
    if not 0.0 <= xi < 1.0:
        raise ParameterDomainError(f"xi must lie in [0, 1), got {xi}")
    return -kB * (math.log1p(-xi) + float(xlogy(xi, xi)) / (1.0 - xi))


__all__ = ["entropy_von_neumann", "entropy_effective"]
