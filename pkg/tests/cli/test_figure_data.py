import numpy as np
import pandas as pd
import pytest

from brownian_clausius.cli import FIGURES, RunConfig, figure_data, gamma_column
from brownian_clausius.exceptions import ParameterDomainError


def test_gamma_columns() -> None:
    assert gamma_column(0.5) == "gamma_0.5"
    assert gamma_column(4.0) == "gamma_4"
    assert gamma_column(10.0) == "gamma_10"


@pytest.mark.parametrize("figure_id", sorted(FIGURES))
def test_figure_tables_have_the_grid_layout(figure_id: int, coarse_config: RunConfig) -> None:
    table = figure_data(figure_id, coarse_config)
    assert list(table.columns) == ["T", "gamma_0.5", "gamma_1.5", "gamma_4", "gamma_10"]
    assert len(table) == coarse_config.n_points
    np.testing.assert_allclose(table["T"].to_numpy(), coarse_config.temperatures())
    assert np.all(np.isfinite(table.drop(columns="T").to_numpy()))


def test_effective_spring_ratio(coarse_config: RunConfig) -> None:
    values = figure_data(1, coarse_config).drop(columns="T").to_numpy()
    assert np.all(values > 0.0)
    assert np.all(values <= 1.0)


def test_entropy_grows_with_damping_and_temperature(coarse_config: RunConfig) -> None:
    values = figure_data(2, coarse_config).drop(columns="T").to_numpy()
    assert np.all(np.diff(values, axis=1) > 0.0)
    assert np.all(np.diff(values, axis=0) > 0.0)


def test_effective_damping_work_is_not_positive(coarse_config: RunConfig) -> None:
    values = figure_data(4, coarse_config).drop(columns="T").to_numpy()
    assert np.all(values <= 1e-10)


def test_workers_do_not_change_the_table(coarse_config: RunConfig) -> None:
    serial = figure_data(3, coarse_config)
    threaded = figure_data(3, coarse_config.updated(workers=3))
    pd.testing.assert_frame_equal(serial, threaded)


def test_unknown_figure(coarse_config: RunConfig) -> None:
    with pytest.raises(ParameterDomainError):
        figure_data(8, coarse_config)


@pytest.mark.slow
def test_default_grid_of_the_damping_violation() -> None:
    table = figure_data(3, RunConfig(workers=4))
    assert len(table) == RunConfig().n_points
    low = table[table["T"] <= 0.1].drop(columns="T").to_numpy()
    assert np.all(low > 0.0)
