from brownian_clausius.cli.config import RunConfig, load_run_config
from brownian_clausius.cli.figures import FIGURES, FigureDefinition, figure_data, gamma_column
from brownian_clausius.cli.main import entrypoint, main, run_command
from brownian_clausius.cli.selftest import (
    SELFTEST_CHECKS,
    SelfTestCheck,
    format_selftest,
    raise_on_failure,
    relative_error,
    run_selftest,
)

__all__ = [
    "RunConfig",
    "load_run_config",
    "FIGURES",
    "FigureDefinition",
    "figure_data",
    "gamma_column",
    "SelfTestCheck",
    "SELFTEST_CHECKS",
    "run_selftest",
    "format_selftest",
    "raise_on_failure",
    "relative_error",
    "main",
    "run_command",
    "entrypoint",
]
