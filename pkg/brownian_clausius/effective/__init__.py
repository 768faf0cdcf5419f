from brownian_clausius.effective.comparisons import grabert_comparison, zero_T_comparison
from brownian_clausius.effective.entropy import entropy_effective, entropy_von_neumann
from brownian_clausius.effective.models import (
    EffectiveOscillator,
    EigenAnsatz,
    EigenSolution,
    GrabertComparison,
    ZeroTemperatureComparison,
)
from brownian_clausius.effective.oscillator import effective_star, eigen_solution

__all__ = [
    "EigenAnsatz",
    "EigenSolution",
    "EffectiveOscillator",
    "GrabertComparison",
    "ZeroTemperatureComparison",
    "eigen_solution",
    "effective_star",
    "entropy_von_neumann",
    "entropy_effective",
    "grabert_comparison",
    "zero_T_comparison",
]
