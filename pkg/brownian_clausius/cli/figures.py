"""Figure data tables: one column per damping value, one row per temperature on the config grid."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable

import pandas as pd

from brownian_clausius.audit.clausius import variation_report
from brownian_clausius.cli.config import RunConfig
from brownian_clausius.drude.moments import moments
from brownian_clausius.effective.entropy import entropy_von_neumann
from brownian_clausius.effective.oscillator import effective_star
from brownian_clausius.exceptions import ParameterDomainError
from brownian_clausius.params import ModelParams, Variation

logger = logging.getLogger(__name__)


def _spring_ratio(params: ModelParams) -> float:
    m = moments(params)
    eff = effective_star(m, params.M, params.k0, params.beta, params.hbar, params.kB)
    return params.k0 / eff.k_eff_star


def _entropy(params: ModelParams) -> float:
    return entropy_von_neumann(moments(params).v, params.kB)


def _damping_violation(params: ModelParams) -> float:
    report = variation_report(params, Variation.DAMPING)
    return 10.0 * report.naive_gap / params.hbar


def _damping_effective_work(params: ModelParams) -> float:
    report = variation_report(params, Variation.DAMPING)
    return 100.0 * report.dW_eff_star / params.hbar


def _mass_effective_gap(params: ModelParams) -> float:
    report = variation_report(params, Variation.MASS)
    return (report.dQ_s - report.Teff_dS) / (params.hbar * params.w0 / params.M)


def _spring_effective_gap(params: ModelParams) -> float:
    report = variation_report(params, Variation.SPRING)
    return (report.dQ_s - report.Teff_dS) / (params.hbar / (params.M * params.w0))


def _mass_violation(params: ModelParams) -> float:
    report = variation_report(params, Variation.MASS)
    return report.naive_gap / (params.hbar * params.w0 / params.M)


@dataclass(frozen=True)
class FigureDefinition:
    title: str
    y: Callable[[ModelParams], float]


FIGURES: dict[int, FigureDefinition] = {
    1: FigureDefinition("k0 / k_eff*", _spring_ratio),
    2: FigureDefinition("von Neumann entropy S_N / kB", _entropy),
    3: FigureDefinition("10 (dQ_s/dgamma - T dS_N/dgamma) / hbar", _damping_violation),
    4: FigureDefinition("100 (dW_eff*/dgamma) / hbar", _damping_effective_work),
    5: FigureDefinition("(dQ_s/dM - T_eff* dS_N/dM) / (hbar w0 / M)", _mass_effective_gap),
    6: FigureDefinition("(dQ_s/dk0 - T_eff* dS_N/dk0) / (hbar / (M w0))", _spring_effective_gap),
    7: FigureDefinition("(dQ_s/dM - T dS_N/dM) / (hbar w0 / M)", _mass_violation),
}


def gamma_column(gamma: float) -> str:
    return f"gamma_{gamma:g}"


def figure_data(figure_id: int, config: RunConfig) -> pd.DataFrame:
    """
    Evaluate a figure's y on the (T, gamma) grid of the config.

    Returns a DataFrame with a T column followed by one gamma_<value> column per entry of config.gamma_list.
    Points are evaluated concurrently when config.workers > 1; results are always placed in grid order.
    """
    if figure_id not in FIGURES:
        raise ParameterDomainError(f"Unknown figure {figure_id}, expected one of {sorted(FIGURES)}")
    figure = FIGURES[figure_id]
    temperatures = config.temperatures()
    grid = [config.params(gamma, float(T)) for gamma in config.gamma_list for T in temperatures]
    logger.info(f"Figure {figure_id} ({figure.title}): {len(grid)} points on {config.workers} worker(s)")

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            values = list(executor.map(figure.y, grid))
    else:
        values = [figure.y(params) for params in grid]

    n_points = len(temperatures)
    table: dict[str, Any] = {"T": temperatures}
    for index, gamma in enumerate(config.gamma_list):
        table[gamma_column(gamma)] = values[index * n_points : (index + 1) * n_points]
    return pd.DataFrame(table)


__all__ = ["FIGURES", "FigureDefinition", "figure_data", "gamma_column"]
