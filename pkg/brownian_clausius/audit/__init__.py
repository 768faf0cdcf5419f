from brownian_clausius.audit.clausius import (
    entropy_derivative,
    gamma_variation,
    local_variation,
    variation_report,
    weak_coupling_equalities,
)
from brownian_clausius.audit.cyclic import cyclic_integral
from brownian_clausius.audit.models import CyclicIntegralReport, VariationReport, WeakCouplingReport

__all__ = [
    "VariationReport",
    "WeakCouplingReport",
    "CyclicIntegralReport",
    "weak_coupling_equalities",
    "gamma_variation",
    "local_variation",
    "variation_report",
    "entropy_derivative",
    "cyclic_integral",
]
