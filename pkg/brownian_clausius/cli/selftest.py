"""Oracle-equivalence suite behind the `selftest` command."""

import logging
import math
from dataclasses import dataclass
from typing import Callable

from pydantic import BaseModel, ConfigDict
from tabulate import tabulate

from brownian_clausius.audit.clausius import variation_report
from brownian_clausius.audit.cyclic import cyclic_integral
from brownian_clausius.cli.config import RunConfig
from brownian_clausius.config import SELFTEST_TABLE_FORMAT
from brownian_clausius.densmat.elements import matrix_element, matrix_element_hypergeometric
from brownian_clausius.densmat.kernel import dimensionless_quantities
from brownian_clausius.drude.derivatives import dmoments_dgamma
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.drude.moments import moments
from brownian_clausius.effective.oscillator import effective_star, eigen_solution
from brownian_clausius.exceptions import NumericDomainError, ParameterDomainError, SelfTestFailure
from brownian_clausius.oracles.fdt import fdt_quadrature_moments
from brownian_clausius.oracles.finite_difference import finite_difference
from brownian_clausius.oracles.matsubara import matsubara_moments
from brownian_clausius.oracles.quadrature import eigencheck_quadrature, rho_element_quadrature
from brownian_clausius.oracles.star_bath import star_bath_moments
from brownian_clausius.params import Variation

logger = logging.getLogger(__name__)


class SelfTestCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    value: float
    """Observed error; inf when the check itself raised."""

    tolerance: float
    passed: bool
    detail: str = ""


def relative_error(a: float, b: float, floor: float = 1e-300) -> float:
    return abs(a - b) / max(abs(a), abs(b), floor)


def _moment_error(reference: GaussianMoments, other: GaussianMoments) -> float:
    return max(relative_error(reference.q2, other.q2), relative_error(reference.p2, other.p2))


def _matsubara(config: RunConfig) -> float:
    params = config.params(0.5, 1.0)
    return _moment_error(moments(params), matsubara_moments(params))


def _fdt(config: RunConfig) -> float:
    params = config.params(4.0, 0.5)
    return _moment_error(moments(params), fdt_quadrature_moments(params))


def _star_bath(config: RunConfig) -> float:
    params = config.params(1.5, 1.0)
    return _moment_error(moments(params), star_bath_moments(params))


def _jacobi_vs_hypergeometric(config: RunConfig) -> float:
    params = config.params(1.5, 1.0)
    m = moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    worst = 0.0
    for n in range(11):
        for k in range(n % 2, n + 1, 2):
            a = matrix_element(n, k, dimset, m)
            b = matrix_element_hypergeometric(n, k, dimset, m)
            worst = max(worst, relative_error(a, b, floor=1e-15))
    return worst


def _rho_quadrature(config: RunConfig) -> float:
    params = config.params(4.0, 1.0)
    m = moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    worst = 0.0
    for n, k in ((0, 0), (2, 0), (3, 1), (4, 4)):
        exact = matrix_element(n, k, dimset, m)
        numeric = rho_element_quadrature(n, k, m, params.M, params.omega0, params.hbar)
        worst = max(worst, relative_error(exact, numeric, floor=1e-13))
    return worst


def _damping_derivative(config: RunConfig) -> float:
    params = config.params(1.5, 1.0)
    analytic = dmoments_dgamma(params)
    numeric_q = finite_difference(lambda g: moments(params.with_gamma(g)).q2, params.gamma)
    numeric_p = finite_difference(lambda g: moments(params.with_gamma(g)).p2, params.gamma)
    return max(relative_error(analytic.dq2, numeric_q.value), relative_error(analytic.dp2, numeric_p.value))


def _effective_clausius(config: RunConfig) -> float:
    params = config.params(4.0, 0.5)
    return max(abs(variation_report(params, which).effective_residual) for which in Variation)


def _energy_identity(config: RunConfig) -> float:
    params = config.params(10.0, 0.2)
    eff = effective_star(moments(params), params.M, params.k0, params.beta, params.hbar, params.kB)
    return relative_error(eff.U_eff_star, eff.U_s)


def _eigencheck(config: RunConfig) -> float:
    params = config.params(1.5, 1.0)
    m = moments(params)
    solution = eigen_solution(m, params.hbar)
    return max(eigencheck_quadrature(n, m, solution, params.hbar) for n in range(3))


def _cyclic(config: RunConfig) -> float:
    params = config.params(0.0, 1.0)
    report = cyclic_integral(params, gamma_max=0.5)
    return abs(report.residual) / max(abs(report.rhs), 1e-300)


@dataclass(frozen=True)
class CheckDefinition:
    tolerance: float
    run: Callable[[RunConfig], float]


SELFTEST_CHECKS: dict[str, CheckDefinition] = {
    "moments-matsubara": CheckDefinition(1e-8, _matsubara),
    "moments-fdt": CheckDefinition(1e-6, _fdt),
    "moments-star-bath": CheckDefinition(1e-2, _star_bath),
    "rho-jacobi-hypergeometric": CheckDefinition(1e-9, _jacobi_vs_hypergeometric),
    "rho-quadrature": CheckDefinition(1e-8, _rho_quadrature),
    "dmoments-dgamma": CheckDefinition(1e-6, _damping_derivative),
    "effective-clausius": CheckDefinition(1e-9, _effective_clausius),
    "effective-energy": CheckDefinition(1e-12, _energy_identity),
    "eigencheck": CheckDefinition(1e-8, _eigencheck),
    "cyclic-integral": CheckDefinition(1e-8, _cyclic),
}


def run_selftest(config: RunConfig) -> list[SelfTestCheck]:
    """Run every check; config.tolerances overrides the default tolerance by check name."""
    unknown = set(config.tolerances) - set(SELFTEST_CHECKS)
    if unknown:
        raise ParameterDomainError(f"Unknown self-test tolerance overrides: {sorted(unknown)}")

    results = []
    for name, check in SELFTEST_CHECKS.items():
        tolerance = config.tolerances.get(name, check.tolerance)
        detail = ""
        try:
            value = check.run(config)
        except NumericDomainError as exc:
            logger.warning(f"Self-test check {name} raised: {exc}")
            value, detail = math.inf, str(exc)
        passed = math.isfinite(value) and value <= tolerance
        logger.info(f"Self-test {name}: {value:.3e} (tolerance {tolerance:.1e})")
        results.append(SelfTestCheck(name=name, value=value, tolerance=tolerance, passed=passed, detail=detail))
    return results


def format_selftest(checks: list[SelfTestCheck], grid_format: str = SELFTEST_TABLE_FORMAT) -> str:
    rows = [[c.name, f"{c.value:.3e}", f"{c.tolerance:.1e}", "pass" if c.passed else "FAIL"] for c in checks]
    return tabulate(rows, headers=["check", "error", "tolerance", "status"], tablefmt=grid_format)


def raise_on_failure(checks: list[SelfTestCheck]) -> None:
    failed = [c.name for c in checks if not c.passed]
    if failed:
        raise SelfTestFailure(failed)


__all__ = [
    "SelfTestCheck",
    "SELFTEST_CHECKS",
    "run_selftest",
    "format_selftest",
    "raise_on_failure",
    "relative_error",
]
