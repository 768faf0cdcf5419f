from pathlib import Path
from typing import Any

import pytest
from pydantic import ValidationError

from brownian_clausius.cli import RunConfig, load_run_config
from brownian_clausius.config import DEFAULT_GAMMA_LIST


def test_defaults_are_the_figure_units() -> None:
    config = RunConfig()
    assert config.gamma_list == DEFAULT_GAMMA_LIST
    assert config.format == "csv"
    assert config.workers == 1
    temperatures = config.temperatures()
    assert temperatures[0] == config.t_min
    assert temperatures[-1] == config.t_max
    assert len(temperatures) == config.n_points

    params = config.params(4.0, 0.5)
    assert params.gamma == 4.0
    assert params.temperature == pytest.approx(0.5, rel=1e-15)


@pytest.mark.parametrize(
    "overrides",
    [
        {"t_min": 2.0, "t_max": 1.0},
        {"t_min": 0.0},
        {"n_points": 1},
        {"gamma_list": (0.5, 2.0)},
        {"gamma_list": (-1.0,)},
        {"format": "xml"},
        {"workers": 0},
        {"colour": "blue"},
    ],
)
def test_invalid_settings(overrides: dict[str, Any]) -> None:
    with pytest.raises(ValidationError):
        RunConfig(**overrides)


def test_updated_ignores_missing_overrides(coarse_config: RunConfig) -> None:
    updated = coarse_config.updated(t_min=None, n_points=7, gamma_list=None)
    assert updated.n_points == 7
    assert updated.t_min == coarse_config.t_min
    assert updated.gamma_list == coarse_config.gamma_list
    with pytest.raises(ValidationError):
        coarse_config.updated(t_max=0.05)


def test_load_run_config(tmp_path: Path) -> None:
    assert load_run_config() == RunConfig()

    path = tmp_path / "run.yaml"
    path.write_text("gamma_list: [0.5, 4.0]\nt_min: 0.2\nt_max: 1.0\nn_points: 3\nformat: json\ntolerances:\n  moments-fdt: 1.0e-5\n", encoding="utf-8")
    config = load_run_config(path)
    assert config.gamma_list == (0.5, 4.0)
    assert config.format == "json"
    assert config.tolerances == {"moments-fdt": 1e-5}

    empty = tmp_path / "empty.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_run_config(empty) == RunConfig()

    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_run_config(listing)
